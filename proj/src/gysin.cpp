#include "gysin.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace g2x {

// ------------------------------------------------------------------ pages

const SSEntry& SSPage::at(int p, int q) const {
    if (q != 0 && q != 1) throw std::out_of_range("SSPage::at: q must be 0 or 1");
    if (p < 0 || p > top_p) throw std::out_of_range("SSPage::at: p out of range");
    return rows[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
}

namespace {

std::string entry_text(const SSEntry& e) {
    if (e.group.is_trivial()) return "0";
    if (e.labels.empty()) return e.group.to_string();
    std::ostringstream os;
    const std::size_t free = e.group.free_rank();
    for (std::size_t i = 0; i < e.labels.size(); ++i) {
        if (i) os << " + ";
        if (i < free) os << "Z." << e.labels[i];
        else os << "Z/" << e.group.torsion()[i - free] << "." << e.labels[i];
    }
    return os.str();
}

}  // namespace

std::string SSPage::to_text() const {
    const int cols = top_p + 1;
    std::vector<std::string> head(static_cast<std::size_t>(cols));
    std::vector<std::string> r1(static_cast<std::size_t>(cols)), r0(static_cast<std::size_t>(cols));
    std::vector<std::size_t> width(static_cast<std::size_t>(cols));
    for (int p = 0; p <= top_p; ++p) {
        const auto i = static_cast<std::size_t>(p);
        r1[i] = entry_text(rows[1][i]);
        r0[i] = entry_text(rows[0][i]);
        head[i] = std::to_string(p);
        width[i] = std::max({r1[i].size(), r0[i].size(), head[i].size()});
    }
    auto emit = [&](const std::string& tag, const std::vector<std::string>& cells) {
        std::ostringstream os;
        os << tag;
        for (int p = 0; p <= top_p; ++p) {
            const auto i = static_cast<std::size_t>(p);
            os << " ";
            os << std::string(width[i] - cells[i].size(), ' ') << cells[i];
            os << " |";
        }
        return os.str();
    };
    std::ostringstream os;
    os << (index == Index::E2 ? "E_2 page" : "E_inf page") << "\n";
    os << emit("q=1 |", r1) << "\n";
    os << emit("q=0 |", r0) << "\n";
    os << emit("  p |", head) << "\n";
    return os.str();
}

SSPage build_e2(const GradedRing& base) {
    SSPage page;
    page.index = SSPage::Index::E2;
    page.top_p = base.top_degree();
    for (int q = 0; q <= 1; ++q) page.rows[static_cast<std::size_t>(q)].resize(static_cast<std::size_t>(page.top_p) + 1);
    for (int p = 0; p <= page.top_p; ++p) {
        const auto i = static_cast<std::size_t>(p);
        SSEntry e;
        e.group = base.group(p);
        e.labels = base.slot(p).basis_labels;
        SSEntry e1 = e;
        for (auto& l : e1.labels) l = (l == "1") ? "a" : "a*" + l;
        page.rows[0][i] = std::move(e);
        page.rows[1][i] = std::move(e1);
    }
    return page;
}

// ------------------------------------------------------------ differential

Differential::Differential(std::vector<PresentedHom> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw std::invalid_argument("Differential: empty map list");
}

const PresentedHom& Differential::at(int p) const {
    if (p < 0 || static_cast<std::size_t>(p) >= maps_.size())
        throw std::out_of_range("Differential::at: p out of range");
    return maps_[static_cast<std::size_t>(p)];
}

Differential d2_from_euler(const GradedRing& base, const RingElement& euler) {
    if (euler.degree != 2) throw std::domain_error("d2_from_euler: Euler class must have degree 2");
    std::vector<PresentedHom> maps;
    const int top = base.top_degree();
    maps.reserve(static_cast<std::size_t>(top) + 1);
    for (int p = 0; p <= top; ++p) {
        const FGAbelianGroup src = base.group(p);
        const FGAbelianGroup tgt = base.group(p + 2);
        IntMatrix m(tgt.generator_count(), src.generator_count());
        for (std::size_t j = 0; j < src.generator_count(); ++j) {
            const RingElement img = base.cup(euler, base.basis_element(p, j));
            for (std::size_t i = 0; i < tgt.generator_count(); ++i) m.at(i, j) = img.coords.at(i);
        }
        maps.emplace_back(src, tgt, std::move(m));
    }
    return Differential(std::move(maps));
}

SSPage take_limit(const SSPage& e2, const Differential& d) {
    if (e2.index != SSPage::Index::E2) throw std::invalid_argument("take_limit: not an E_2 page");
    if (d.top_p() != e2.top_p) throw std::invalid_argument("take_limit: differential range mismatch");
    SSPage out;
    out.index = SSPage::Index::EInf;
    out.top_p = e2.top_p;
    for (int q = 0; q <= 1; ++q) out.rows[static_cast<std::size_t>(q)].resize(static_cast<std::size_t>(out.top_p) + 1);
    for (int p = 0; p <= out.top_p; ++p) {
        const auto i = static_cast<std::size_t>(p);
        out.rows[0][i].group = p >= 2 ? cokernel(d.at(p - 2)) : e2.rows[0][i].group;
        out.rows[1][i].group = kernel(d.at(p));
    }
    return out;
}

// ------------------------------------------------------------- extensions

std::vector<FGAbelianGroup> extensions_of(const FGAbelianGroup& quot, const FGAbelianGroup& sub) {
    // split off the free part of the quotient; only its torsion twists
    const std::size_t extra_free = quot.free_rank();
    const std::vector<Int>& t = quot.torsion();
    const std::size_t ns = sub.generator_count();

    std::set<std::pair<std::size_t, std::vector<Int>>> seen;
    std::vector<FGAbelianGroup> out;
    // pick, per torsion factor t_i, the image c_i of t_i * lift in sub,
    // ranging over representatives of sub / t_i*sub
    std::vector<std::vector<Int>> choices(t.size());
    std::vector<std::size_t> radix(t.size());
    std::vector<std::vector<std::vector<Int>>> reps(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        // representative tuples for sub / t_i*sub, coordinatewise
        std::vector<std::vector<Int>> coord_reps(ns);
        for (std::size_t g = 0; g < ns; ++g) {
            const Int order = sub.generator_order(g);
            Int mod = order == 0 ? t[i] : gcd(t[i], order);
            for (Int v = 0; v < mod; ++v) coord_reps[g].push_back(v);
        }
        std::vector<std::vector<Int>> tuples{{}};
        for (std::size_t g = 0; g < ns; ++g) {
            std::vector<std::vector<Int>> next;
            for (const auto& partial : tuples)
                for (const Int& v : coord_reps[g]) {
                    auto tup = partial;
                    tup.push_back(v);
                    next.push_back(std::move(tup));
                }
            tuples = std::move(next);
        }
        reps[i] = std::move(tuples);
    }
    std::vector<std::size_t> idx(t.size(), 0);
    for (;;) {
        // middle group presentation: sub generators + one lift per torsion
        // factor; relations: sub relations and t_i*k_i - c_i
        const std::size_t n = ns + t.size();
        const IntMatrix rs = relation_matrix(sub);
        IntMatrix rel(n, rs.cols() + t.size());
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < rs.cols(); ++j) rel.at(i, j) = rs.at(i, j);
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto& c = reps[i][idx[i]];
            for (std::size_t g = 0; g < ns; ++g) rel.at(g, rs.cols() + i) = -c[g];
            rel.at(ns + i, rs.cols() + i) = t[i];
        }
        FGAbelianGroup g = QuotientPresentation(n, rel).group();
        g = direct_sum(g, FGAbelianGroup::free_group(extra_free));
        const auto key = std::make_pair(g.free_rank(), g.torsion());
        if (seen.insert(key).second) out.push_back(std::move(g));
        // odometer
        std::size_t pos = 0;
        while (pos < t.size()) {
            if (++idx[pos] < reps[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == t.size()) break;
        if (t.empty()) break;
    }
    std::sort(out.begin(), out.end(), [](const FGAbelianGroup& a, const FGAbelianGroup& b) {
        if (a.free_rank() != b.free_rank()) return a.free_rank() < b.free_rank();
        return a.torsion() < b.torsion();
    });
    return out;
}

std::vector<FiltrationAssembly> assemble_total(const SSPage& limit) {
    if (limit.index != SSPage::Index::EInf)
        throw std::invalid_argument("assemble_total: not a limit page");
    std::vector<FiltrationAssembly> out;
    for (int n = 0; n <= limit.top_p + 1; ++n) {
        FiltrationAssembly fa;
        fa.total_degree = n;
        fa.sub = n <= limit.top_p ? limit.at(n, 0).group : FGAbelianGroup();
        fa.quot = n >= 1 ? limit.at(n - 1, 1).group : FGAbelianGroup();
        if (fa.sub.is_trivial()) {
            fa.resolved = true;
            fa.value = fa.quot;
        } else if (fa.quot.is_trivial()) {
            fa.resolved = true;
            fa.value = fa.sub;
        } else if (fa.quot.torsion().empty()) {
            // free quotient splits
            fa.resolved = true;
            fa.value = direct_sum(fa.sub, fa.quot);
        } else {
            fa.candidates = extensions_of(fa.quot, fa.sub);
            if (fa.candidates.size() == 1) {
                fa.resolved = true;
                fa.value = fa.candidates.front();
            }
        }
        out.push_back(std::move(fa));
    }
    return out;
}

GysinReport verify_total(const SSPage& limit, const std::vector<FGAbelianGroup>& expected) {
    const auto assemblies = assemble_total(limit);
    if (expected.size() != assemblies.size())
        throw std::invalid_argument("verify_total: expected table has length " +
                                    std::to_string(expected.size()) + ", need " +
                                    std::to_string(assemblies.size()));
    GysinReport rep;
    rep.all_match = true;
    for (const auto& fa : assemblies) {
        DegreeVerdict v;
        v.degree = fa.total_degree;
        v.expected = expected[static_cast<std::size_t>(fa.total_degree)];
        if (fa.resolved) {
            v.computed = fa.value.to_string();
            v.verdict = fa.value == v.expected ? Verdict::Match : Verdict::Mismatch;
        } else {
            std::ostringstream os;
            os << "ambiguous{";
            for (std::size_t i = 0; i < fa.candidates.size(); ++i)
                os << (i ? ", " : "") << fa.candidates[i].to_string();
            os << "}";
            v.computed = os.str();
            const bool inside =
                std::find(fa.candidates.begin(), fa.candidates.end(), v.expected) != fa.candidates.end();
            v.verdict = inside ? Verdict::AmbiguousConsistent : Verdict::Mismatch;
        }
        if (v.verdict == Verdict::Mismatch) rep.all_match = false;
        rep.degrees.push_back(std::move(v));
    }
    return rep;
}

// ----------------------------------------------------------------- profile

namespace {

std::size_t generator_need(const FGAbelianGroup& g) { return g.generator_count(); }

bool could_be_subgroup(const FGAbelianGroup& k, const FGAbelianGroup& b) {
    if (k.free_rank() > b.free_rank()) return false;
    if (!k.torsion().empty() && b.torsion().empty()) return false;
    return true;  // conservative; enough to catch the clear-cut infeasibilities
}

bool could_be_quotient(const FGAbelianGroup& c, const FGAbelianGroup& b) {
    if (c.free_rank() > b.free_rank()) return false;
    if (generator_need(c) > generator_need(b)) return false;
    return true;
}

struct Slot {
    std::optional<FGAbelianGroup> k, c;
};

}  // namespace

D2Profile required_d2_profile(const std::vector<FGAbelianGroup>& base,
                              const std::vector<FGAbelianGroup>& total) {
    if (base.empty()) throw std::invalid_argument("required_d2_profile: empty base table");
    const int P = static_cast<int>(base.size()) - 1;
    if (static_cast<int>(total.size()) != P + 2)
        throw std::invalid_argument("required_d2_profile: total table must cover degrees 0..P+1");

    D2Profile out;
    std::vector<Slot> slots(base.size());
    auto target_of = [&](int p) -> FGAbelianGroup {
        return p + 2 <= P ? base[static_cast<std::size_t>(p + 2)] : FGAbelianGroup();
    };
    auto fail = [&](int degree, const std::string& why) {
        if (!out.contradiction_degree) {
            out.contradiction_degree = degree;
            out.contradiction_note = why;
        }
    };
    auto assign_k = [&](int p, const FGAbelianGroup& g, int at_degree) {
        auto& s = slots[static_cast<std::size_t>(p)];
        if (s.k && !(*s.k == g)) {
            fail(at_degree, "kernel of d2 at p=" + std::to_string(p) + " forced to both " +
                                s.k->to_string() + " and " + g.to_string());
            return;
        }
        if (!could_be_subgroup(g, base[static_cast<std::size_t>(p)])) {
            fail(at_degree, "kernel " + g.to_string() + " cannot embed in H^" + std::to_string(p) +
                                "(B) = " + base[static_cast<std::size_t>(p)].to_string());
            return;
        }
        s.k = g;
    };
    auto assign_c = [&](int p, const FGAbelianGroup& g, int at_degree) {
        auto& s = slots[static_cast<std::size_t>(p)];
        if (s.c && !(*s.c == g)) {
            fail(at_degree, "cokernel of d2 at p=" + std::to_string(p) + " forced to both " +
                                s.c->to_string() + " and " + g.to_string());
            return;
        }
        if (!could_be_quotient(g, target_of(p))) {
            fail(at_degree, "cokernel " + g.to_string() + " cannot be a quotient of H^" +
                                std::to_string(p + 2) + "(B) = " + target_of(p).to_string());
            return;
        }
        s.c = g;
    };

    bool changed = false;
    auto assign_k_tracked = [&](int p, const FGAbelianGroup& g, int at) {
        const bool fresh = !slots[static_cast<std::size_t>(p)].k.has_value();
        assign_k(p, g, at);
        if (fresh && slots[static_cast<std::size_t>(p)].k) changed = true;
    };
    auto assign_c_tracked = [&](int p, const FGAbelianGroup& g, int at) {
        const bool fresh = !slots[static_cast<std::size_t>(p)].c.has_value();
        assign_c(p, g, at);
        if (fresh && slots[static_cast<std::size_t>(p)].c) changed = true;
    };

    // direct knowledge from the base table: a zero source means zero image,
    // a zero target means zero cokernel and full kernel
    for (int p = 0; p <= P; ++p) {
        if (base[static_cast<std::size_t>(p)].is_trivial()) {
            assign_k(p, FGAbelianGroup(), p);
            assign_c(p, target_of(p), p);
        }
        if (target_of(p).is_trivial()) {
            assign_c(p, FGAbelianGroup(), p);
            assign_k(p, base[static_cast<std::size_t>(p)], p);
        }
    }

    // E_inf^{n,0} is base[n] itself for n <= 1 (nothing differentiates
    // into or out of those spots), and coker(d2^{n-2,1}) for n >= 2;
    // E_inf^{n-1,1} is ker(d2^{n-1,1}).
    auto sub_known = [&](int n) -> std::optional<FGAbelianGroup> {
        if (n <= 1)
            return n <= P ? base[static_cast<std::size_t>(n)] : FGAbelianGroup();
        return slots[static_cast<std::size_t>(n - 2)].c;
    };
    auto quo_known = [&](int n) -> std::optional<FGAbelianGroup> {
        if (n == 0) return FGAbelianGroup();
        return slots[static_cast<std::size_t>(n - 1)].k;
    };
    auto force_sub = [&](int n, const FGAbelianGroup& g) {
        if (n <= 1) {
            const FGAbelianGroup pinned =
                n <= P ? base[static_cast<std::size_t>(n)] : FGAbelianGroup();
            if (!(pinned == g))
                fail(n, "E_inf^{" + std::to_string(n) + ",0} is pinned to " + pinned.to_string() +
                            " but must be " + g.to_string());
            return;
        }
        assign_c_tracked(n - 2, g, n);
    };
    auto force_quo = [&](int n, const FGAbelianGroup& g) {
        if (n == 0) {
            if (!g.is_trivial()) fail(0, "E_inf^{-1,1} must vanish");
            return;
        }
        assign_k_tracked(n - 1, g, n);
    };

    // propagate through the filtration extensions until stable
    for (int pass = 0; pass < P + 3 && !out.contradiction_degree; ++pass) {
        changed = false;
        for (int n = 0; n <= P + 1 && !out.contradiction_degree; ++n) {
            const FGAbelianGroup& h = total[static_cast<std::size_t>(n)];
            const auto sv = sub_known(n);
            const auto qv = quo_known(n);
            if (h.is_trivial()) {
                force_sub(n, FGAbelianGroup());
                force_quo(n, FGAbelianGroup());
                continue;
            }
            if (qv && qv->is_trivial() && !sv) force_sub(n, h);
            if (sv && sv->is_trivial() && !qv) force_quo(n, h);
            const auto sv2 = sub_known(n);
            const auto qv2 = quo_known(n);
            if (sv2 && qv2) {
                const auto exts = extensions_of(*qv2, *sv2);
                if (std::find(exts.begin(), exts.end(), h) == exts.end())
                    fail(n, "H^" + std::to_string(n) + "(E) = " + h.to_string() +
                                " is not an extension of " + qv2->to_string() + " by " +
                                sv2->to_string());
            }
        }
        if (!changed) break;
    }

    out.slots.resize(base.size());
    for (int p = 0; p <= P; ++p) {
        const auto& s = slots[static_cast<std::size_t>(p)];
        D2Slot& d = out.slots[static_cast<std::size_t>(p)];
        if (s.k && s.k->is_trivial() && s.c && s.c->is_trivial()) {
            d.kind = D2Kind::Iso;
        } else if (s.k && s.k->is_trivial() && s.c && !s.c->is_trivial()) {
            d.kind = D2Kind::InjectiveWithCokernel;
            d.cokernel = *s.c;
        } else if (s.k && *s.k == base[static_cast<std::size_t>(p)] &&
                   !base[static_cast<std::size_t>(p)].is_trivial()) {
            d.kind = D2Kind::Zero;
        } else {
            d.kind = D2Kind::Unconstrained;
        }
    }
    return out;
}

std::string d2_kind_name(D2Kind k) {
    switch (k) {
        case D2Kind::Iso: return "iso";
        case D2Kind::InjectiveWithCokernel: return "injective-with-cokernel";
        case D2Kind::Zero: return "zero";
        case D2Kind::Unconstrained: return "unconstrained";
    }
    return "?";
}

}  // namespace g2x
