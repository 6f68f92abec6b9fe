#include "distinguish.hpp"

#include <algorithm>
#include <sstream>

namespace g2x {

InvariantVector invariants_of(const GradedRing& r) {
    InvariantVector out;
    for (int d = 0; d <= r.top_degree(); ++d) out.groups.push_back(r.group(d));
    const FGAbelianGroup deg2 = r.group(2);
    if (!(deg2.free_rank() == 1 && deg2.torsion().empty())) return out;  // indices undefined
    out.has_power_indices = true;
    const RingElement g = r.basis_element(2, 0);
    RingElement p = g;
    for (int j = 1; 2 * j <= r.top_degree(); ++j) {
        if (j > 1) p = r.cup(p, g);
        const FGAbelianGroup grp = r.group(2 * j);
        if (grp.is_trivial()) continue;
        const std::size_t free = grp.free_rank();
        bool free_part_zero = true;
        for (std::size_t i = 0; i < free; ++i)
            if (p.coords[i] != 0) free_part_zero = false;
        if (free_part_zero || free >= 2) {
            // torsion-or-zero image, or a single generator inside Z^r with
            // r >= 2: infinite index either way
            out.power_indices[j] = std::nullopt;
        } else {
            out.power_indices[j] = abs(p.coords[0]);
        }
    }
    return out;
}

std::pair<bool, std::optional<int>> groups_equal(const GradedRing& a, const GradedRing& b) {
    const int top = std::max(a.top_degree(), b.top_degree());
    for (int d = 0; d <= top; ++d)
        if (!(a.group(d) == b.group(d))) return {false, d};
    return {true, std::nullopt};
}

namespace {

/// Candidate coordinate values, canonical for torsion coordinates, ordered
/// 0, 1, -1, 2, -2, ... so identity-like witnesses come first.
std::vector<Int> candidate_values(int bound, const Int& modulus) {
    std::vector<Int> out;
    out.push_back(0);
    for (int v = 1; v <= bound; ++v) {
        if (modulus == 0) {
            out.push_back(v);
            out.push_back(-v);
        } else {
            Int pos = Int(v) % modulus;
            Int neg = ((Int(-v) % modulus) + modulus) % modulus;
            if (std::find(out.begin(), out.end(), pos) == out.end()) out.push_back(pos);
            if (std::find(out.begin(), out.end(), neg) == out.end()) out.push_back(neg);
        }
    }
    return out;
}

RingElement evaluate_polynomial(const GradedRing& b, const PolynomialExpr& poly,
                                const std::vector<RingElement>& images, int degree) {
    const Exponents unit_mono(b.generators().size(), 0);
    RingElement acc = b.zero(degree);
    for (const auto& [e, c] : poly.terms()) {
        RingElement term = b.monomial_class(unit_mono);
        // multiply generator images in declaration order
        for (std::size_t g = 0; g < e.size(); ++g)
            for (int rep = 0; rep < e[g]; ++rep) term = b.cup(term, images[g]);
        acc = b.add(acc, b.scale(term, c));
    }
    return acc;
}

bool degreewise_iso(const GradedRing& a, const GradedRing& b,
                    const std::vector<RingElement>& images, std::string* why) {
    const int top = std::max(a.top_degree(), b.top_degree());
    for (int d = 0; d <= top; ++d) {
        const FGAbelianGroup ga = a.group(d);
        const FGAbelianGroup gb = b.group(d);
        if (!(ga == gb)) {
            if (why) *why = "groups differ in degree " + std::to_string(d);
            return false;
        }
        if (ga.is_trivial()) continue;
        IntMatrix m(gb.generator_count(), ga.generator_count());
        for (std::size_t j = 0; j < ga.generator_count(); ++j) {
            const PolynomialExpr& lift = a.slot(d).basis_lifts[j];
            const RingElement img = evaluate_polynomial(b, lift, images, d);
            for (std::size_t i = 0; i < gb.generator_count(); ++i) m.at(i, j) = img.coords.at(i);
        }
        PresentedHom h(ga, gb, std::move(m));
        if (!kernel(h).is_trivial() || !cokernel(h).is_trivial()) {
            if (why) *why = "induced map in degree " + std::to_string(d) + " is not invertible";
            return false;
        }
    }
    return true;
}

bool relations_die(const GradedRing& a, const GradedRing& b, const std::vector<RingElement>& images,
                   std::size_t max_gen_assigned, std::string* why) {
    const auto& pres = a.presentation();
    for (std::size_t ri = 0; ri < pres.relations.size(); ++ri) {
        const PolynomialExpr& rel = pres.relations[ri];
        if (rel.is_zero()) continue;
        bool supported = true;
        for (const auto& [e, c] : rel.terms())
            for (std::size_t g = max_gen_assigned + 1; g < e.size(); ++g)
                if (e[g] != 0) supported = false;
        if (!supported) continue;
        const int deg = *rel.homogeneous_degree(pres.generators);
        const RingElement img = evaluate_polynomial(b, rel, images, deg);
        if (!b.is_zero_element(img)) {
            if (why)
                *why = "relation '" + rel.to_string(pres.generators) + "' does not map to zero";
            return false;
        }
    }
    return true;
}

}  // namespace

bool check_witness(const GradedRing& a, const GradedRing& b, const IsoWitness& w, std::string* why) {
    const auto& gens = a.presentation().generators;
    if (w.images.size() != gens.size()) {
        if (why) *why = "wrong number of generator images";
        return false;
    }
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (w.images[g].degree != gens[g].degree) {
            if (why) *why = "image degree mismatch for generator " + gens[g].name;
            return false;
        }
    if (!relations_die(a, b, w.images, gens.size() - 1, why)) return false;
    return degreewise_iso(a, b, w.images, why);
}

std::optional<IsoWitness> isomorphism_search(const GradedRing& a, const GradedRing& b,
                                             int coeff_bound, std::uint64_t ceiling) {
    if (coeff_bound < 0) throw std::invalid_argument("isomorphism_search: negative bound");
    if (!groups_equal(a, b).first) return std::nullopt;
    const auto& gens = a.presentation().generators;

    // coordinate value lists per generator image
    struct GenSpace {
        std::vector<std::vector<Int>> value_lists;  // per coordinate of B in that degree
    };
    std::vector<GenSpace> spaces(gens.size());
    long double total = 1;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const int d = gens[g].degree;
        if (d > b.top_degree()) continue;  // image forced zero
        const FGAbelianGroup grp = b.group(d);
        for (std::size_t c = 0; c < grp.generator_count(); ++c) {
            const Int modulus = grp.generator_order(c);
            spaces[g].value_lists.push_back(candidate_values(coeff_bound, modulus));
            total *= static_cast<long double>(spaces[g].value_lists.back().size());
        }
    }
    if (total > static_cast<long double>(ceiling))
        throw SearchLimitExceeded("isomorphism search space exceeds the configured ceiling");

    std::vector<RingElement> images(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) images[g] = b.zero(gens[g].degree);

    std::optional<IsoWitness> found;
    std::string why;
    auto dfs = [&](auto&& self, std::size_t g) -> bool {
        if (g == gens.size()) {
            if (!degreewise_iso(a, b, images, &why)) return false;
            found = IsoWitness{images};
            return true;
        }
        const auto& lists = spaces[g].value_lists;
        std::vector<std::size_t> idx(lists.size(), 0);
        for (;;) {
            RingElement img = b.zero(gens[g].degree);
            for (std::size_t c = 0; c < lists.size(); ++c) img.coords[c] = lists[c][idx[c]];
            images[g] = img;
            if (relations_die(a, b, images, g, nullptr) && self(self, g + 1)) return true;
            // odometer, last coordinate fastest
            if (lists.empty()) break;
            std::size_t pos = lists.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < lists[pos].size()) break;
                idx[pos] = 0;
                if (pos == 0) return false;  // all assignments tried
            }
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

PiTable pi_table_for(const SpaceId& s, int max_level) {
    switch (s.kind) {
        case SpaceKind::CP:
        case SpaceKind::GrassOdd:
        case SpaceKind::GrassEven: {
            const Fibration f = fibration_over(s);
            const PiTable fiber = homotopy_table_of(f.fiber, max_level);
            const PiTable total = homotopy_table_of(f.total, max_level);
            return les_base(fiber, total, max_level);
        }
        default:
            return homotopy_table_of(s, max_level);
    }
}

ComparisonReport full_report(const SpaceId& a, const SpaceId& b, int max_pi_level, int iso_bound) {
    ComparisonReport rep;
    rep.space_a = a.to_string();
    rep.space_b = b.to_string();
    const GradedRing ra = ring_of(a);
    const GradedRing rb = ring_of(b);

    const auto [eq, mismatch] = groups_equal(ra, rb);
    rep.groups_equal = eq;
    rep.first_group_mismatch = mismatch;

    const InvariantVector ia = invariants_of(ra);
    const InvariantVector ib = invariants_of(rb);
    rep.has_power_indices = ia.has_power_indices && ib.has_power_indices;
    if (rep.has_power_indices) {
        rep.power_indices_a = ia.power_indices;
        rep.power_indices_b = ib.power_indices;
        const int jmax = std::min(ra.top_degree(), rb.top_degree()) / 2;
        for (int j = 1; j <= jmax; ++j) {
            const auto pa = ia.power_indices.find(j);
            const auto pb = ib.power_indices.find(j);
            if (pa == ia.power_indices.end() || pb == ib.power_indices.end()) continue;
            if (pa->second != pb->second) {
                rep.power_index_first_difference = j;
                break;
            }
        }
    }

    rep.pi_a = pi_table_for(a, max_pi_level);
    rep.pi_b = pi_table_for(b, max_pi_level);
    rep.pi_first_difference = first_difference(rep.pi_a, rep.pi_b);

    rep.iso_bound = iso_bound;
    if (eq && iso_bound > 0) {
        try {
            const auto w = isomorphism_search(ra, rb, iso_bound);
            rep.iso_search_ran = true;
            rep.iso_witness_found = w.has_value();
        } catch (const SearchLimitExceeded&) {
            rep.iso_search_ran = false;
        }
    }

    if (!eq) {
        rep.verdict = "cohomology groups differ";
    } else if (rep.power_index_first_difference || rep.pi_first_difference) {
        rep.verdict = "cohomology-equal, not homotopy-equivalent";
    } else {
        rep.verdict = "indistinguishable by this tool";
    }
    return rep;
}

}  // namespace g2x
