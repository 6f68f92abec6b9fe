// Acceptance gate: runs the full verification suite (every criterion at its
// exact expected values; no tolerances anywhere) and prints one pass/fail
// line per criterion. Exits nonzero if any criterion fails.

#include "report.hpp"

#include <cstdio>
#include <iostream>

int main() {
    try {
        const auto res = g2x::report::verification_suite(2, 8);
        std::cout << res.text;
        return res.ok ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "acceptance suite aborted: " << ex.what() << "\n";
        return 2;
    }
}
