#include "oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>

namespace g2x {

namespace {

using Rat = boost::multiprecision::cpp_rational;

// Over Q a monomial with an odd generator squared is torsion, hence zero;
// everything here runs on square-free-in-odd-generators monomials.

void walk(int remaining, std::size_t gi, const std::vector<GeneratorSpec>& gens, Exponents& cur,
          std::vector<Exponents>& out) {
    if (gi == gens.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const bool odd = gens[gi].degree % 2 != 0;
    int emax = remaining / gens[gi].degree;
    if (odd && emax > 1) emax = 1;
    for (int e = 0; e <= emax; ++e) {
        cur[gi] = e;
        walk(remaining - e * gens[gi].degree, gi + 1, gens, cur, out);
    }
    cur[gi] = 0;
}

std::vector<Exponents> squarefree_monomials(int degree, const std::vector<GeneratorSpec>& gens) {
    std::vector<Exponents> out;
    Exponents cur(gens.size(), 0);
    if (degree >= 0) walk(degree, 0, gens, cur, out);
    return out;
}

int interleave_sign(const Exponents& a, const Exponents& b, const std::vector<GeneratorSpec>& gens) {
    long swaps = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0 || gens[i].degree % 2 == 0) continue;
        for (std::size_t j = 0; j < i; ++j)
            if (b[j] != 0 && gens[j].degree % 2 != 0) swaps += static_cast<long>(a[i]) * b[j];
    }
    return swaps % 2 == 0 ? 1 : -1;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
    std::size_t rank = 0;
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        const Rat inv = Rat(1) / rows[row][col];
        for (std::size_t j = col; j < ncols; ++j) rows[row][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0) continue;
            const Rat f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<std::size_t> betti_by_rational_elimination(const RingPresentation& p) {
    p.check_valid();
    if (!validate_homogeneous(p).empty())
        throw std::domain_error("betti oracle: inhomogeneous presentation");
    const auto& gens = p.generators;
    std::vector<std::size_t> out(static_cast<std::size_t>(p.top_degree) + 1, 0);
    for (int d = 0; d <= p.top_degree; ++d) {
        const auto monos = squarefree_monomials(d, gens);
        std::map<Exponents, std::size_t> index;
        for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
        std::vector<std::vector<Rat>> rows;
        for (const auto& rel : p.relations) {
            const auto rd = rel.homogeneous_degree(gens);
            if (!rd || *rd > d) continue;
            for (const Exponents& m : squarefree_monomials(d - *rd, gens)) {
                std::vector<Rat> row(monos.size(), Rat(0));
                bool nonzero = false;
                for (const auto& [t, c] : rel.terms()) {
                    Exponents prod(t.size());
                    bool dead = false;
                    for (std::size_t i = 0; i < t.size(); ++i) {
                        prod[i] = t[i] + m[i];
                        if (prod[i] >= 2 && gens[i].degree % 2 != 0) dead = true;
                    }
                    if (dead) continue;  // torsion over Q
                    const int sgn = interleave_sign(m, t, gens);
                    row[index.at(prod)] += Rat(c * sgn);
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        out[static_cast<std::size_t>(d)] = monos.size() - rational_rank(std::move(rows));
    }
    return out;
}

}  // namespace g2x
