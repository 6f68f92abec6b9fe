// g2x command-line front end. Talks to the engine exclusively through the
// C interface in g2x/g2x.h.

#include "g2x/g2x.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct SpaceHandle {
    g2x_space* ptr = nullptr;
    ~SpaceHandle() { g2x_space_free(ptr); }
};

struct ReportHandle {
    g2x_report* ptr = nullptr;
    ~ReportHandle() { g2x_report_free(ptr); }
};

int parse_space_or_die(const std::string& spec, SpaceHandle& out) {
    if (g2x_space_parse(spec.c_str(), &out.ptr) != G2X_OK) {
        std::cerr << "error: " << g2x_last_error() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int emit(const ReportHandle& rep, const std::string& format) {
    if (format == "json") std::cout << g2x_report_json(rep.ptr) << "\n";
    else std::cout << g2x_report_text(rep.ptr);
    return g2x_report_ok(rep.ptr) ? kExitOk : kExitCheckFailed;
}

int finish(g2x_status st, const ReportHandle& rep, const std::string& format) {
    if (st != G2X_OK) {
        std::cerr << "error: " << g2x_last_error() << "\n";
        return kExitUsage;
    }
    return emit(rep, format);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string with_default_variant(const std::string& spec, const std::string& variant) {
    if (spec.find('@') != std::string::npos || spec.empty()) return spec;
    return spec + "@" + variant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"g2x — exact cohomology rings, circle-bundle spectral sequences and "
                 "homotopy comparisons for projective spaces, oriented 2-plane Grassmannians "
                 "and Stiefel manifolds"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand name, too

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    std::string variant = "corrected";
    app.add_option("--variant", variant, "presentation variant when a space spec has no @suffix")
        ->check(CLI::IsMember({"corrected", "verbatim"}));

    // cohomology <space>
    auto* c_coh = app.add_subcommand("cohomology", "print the cohomology group table of a space");
    std::string coh_space;
    c_coh->add_option("space", coh_space, "space spec, e.g. g2+:7 or cp:5")->required();

    // ring <space> | ring --file <path>
    auto* c_ring = app.add_subcommand("ring", "print the computed graded ring");
    std::string ring_space, ring_file;
    c_ring->add_option("space", ring_space, "space spec");
    c_ring->add_option("--file", ring_file, "presentation file (gen/rel/top lines)");

    // gysin --total T --base B [--mode verify|derive-d2] [--print-pages]
    auto* c_gysin = app.add_subcommand("gysin", "run the circle-bundle spectral sequence");
    std::string gy_total, gy_base, gy_mode = "verify";
    bool gy_pages = false;
    c_gysin->add_option("--total", gy_total, "total space spec")->required();
    c_gysin->add_option("--base", gy_base, "base space spec")->required();
    c_gysin->add_option("--mode", gy_mode, "verify | derive-d2")
        ->check(CLI::IsMember({"verify", "derive-d2"}));
    c_gysin->add_flag("--print-pages", gy_pages, "print the E_2 and limit pages");

    // homotopy --fibration F [--max-level N]
    auto* c_hom = app.add_subcommand("homotopy", "long-exact-sequence deduction for a fibration");
    std::string hom_fib;
    int hom_max = 11;
    c_hom->add_option("--fibration", hom_fib, "hopf:<n> or grassfib:<n>")->required();
    c_hom->add_option("--max-level", hom_max, "highest homotopy level");

    // compare <a> <b> [--bound B] [--max-level N]
    auto* c_cmp = app.add_subcommand("compare", "compare two spaces by every implemented invariant");
    std::string cmp_a, cmp_b;
    int cmp_bound = 2, cmp_max = 16;
    c_cmp->add_option("a", cmp_a, "first space")->required();
    c_cmp->add_option("b", cmp_b, "second space")->required();
    c_cmp->add_option("--bound", cmp_bound, "coefficient bound for the isomorphism search");
    c_cmp->add_option("--max-level", cmp_max, "highest homotopy level consulted");

    // validate <space> | --file
    auto* c_val = app.add_subcommand("validate", "validate a presentation");
    std::string val_space, val_file;
    c_val->add_option("space", val_space, "space spec");
    c_val->add_option("--file", val_file, "presentation file");

    // report [--k K | --k-min --k-max]
    auto* c_rep = app.add_subcommand("report", "run the full verification suite");
    int rep_k = 0, rep_kmin = 2, rep_kmax = 8;
    c_rep->add_option("--k", rep_k, "run a single k instead of the whole range");
    c_rep->add_option("--k-min", rep_kmin, "lowest k (default 2)");
    c_rep->add_option("--k-max", rep_kmax, "highest k (default 8)");

    auto* c_ver = app.add_subcommand("version", "print the tool version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_ver) {
            std::cout << "g2x " << g2x_version() << "\n";
            return kExitOk;
        }
        if (*c_coh) {
            SpaceHandle s;
            if (int rc = parse_space_or_die(with_default_variant(coh_space, variant), s)) return rc;
            ReportHandle rep;
            return finish(g2x_cohomology(s.ptr, &rep.ptr), rep, format);
        }
        if (*c_ring) {
            ReportHandle rep;
            if (!ring_file.empty()) {
                const std::string text = read_file(ring_file);
                return finish(g2x_ring_from_text(text.c_str(), &rep.ptr), rep, format);
            }
            if (ring_space.empty()) {
                std::cerr << "error: ring needs a space spec or --file\n";
                return kExitUsage;
            }
            SpaceHandle s;
            if (int rc = parse_space_or_die(with_default_variant(ring_space, variant), s)) return rc;
            return finish(g2x_ring(s.ptr, &rep.ptr), rep, format);
        }
        if (*c_gysin) {
            SpaceHandle total, base;
            if (int rc = parse_space_or_die(with_default_variant(gy_total, variant), total)) return rc;
            if (int rc = parse_space_or_die(with_default_variant(gy_base, variant), base)) return rc;
            ReportHandle rep;
            return finish(g2x_gysin(total.ptr, base.ptr, gy_mode.c_str(), gy_pages ? 1 : 0, &rep.ptr),
                          rep, format);
        }
        if (*c_hom) {
            ReportHandle rep;
            return finish(g2x_homotopy(hom_fib.c_str(), hom_max, &rep.ptr), rep, format);
        }
        if (*c_cmp) {
            SpaceHandle a, b;
            if (int rc = parse_space_or_die(with_default_variant(cmp_a, variant), a)) return rc;
            if (int rc = parse_space_or_die(with_default_variant(cmp_b, variant), b)) return rc;
            ReportHandle rep;
            return finish(g2x_compare(a.ptr, b.ptr, cmp_bound, cmp_max, &rep.ptr), rep, format);
        }
        if (*c_val) {
            ReportHandle rep;
            if (!val_file.empty()) {
                const std::string text = read_file(val_file);
                return finish(g2x_validate_text(text.c_str(), &rep.ptr), rep, format);
            }
            if (val_space.empty()) {
                std::cerr << "error: validate needs a space spec or --file\n";
                return kExitUsage;
            }
            SpaceHandle s;
            if (int rc = parse_space_or_die(with_default_variant(val_space, variant), s)) return rc;
            return finish(g2x_validate(s.ptr, &rep.ptr), rep, format);
        }
        if (*c_rep) {
            if (rep_k != 0) rep_kmin = rep_kmax = rep_k;
            ReportHandle rep;
            return finish(g2x_verification_suite(rep_kmin, rep_kmax, variant.c_str(), &rep.ptr), rep,
                          format);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
