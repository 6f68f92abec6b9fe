#include "catalog.hpp"
#include "gysin.hpp"

#include "doctest.h"

using namespace g2x;

namespace {

FGAbelianGroup Z() { return FGAbelianGroup::free_group(1); }
FGAbelianGroup Z2() { return FGAbelianGroup::cyclic(2); }

struct OddPipeline {
    GradedRing ring;
    SSPage e2;
    Differential d2;
    SSPage limit;
    OddPipeline(const SpaceId& base)
        : ring(ring_of(base)),
          e2(build_e2(ring)),
          d2(d2_from_euler(ring, ring.generator_class(0))),
          limit(take_limit(e2, d2)) {}
};

}  // namespace

TEST_CASE("second page of the Grassmannian bundle at k = 3") {
    const OddPipeline pl({SpaceKind::GrassOdd, 3});
    for (int p = 0; p <= 10; ++p) {
        const FGAbelianGroup want = p % 2 == 0 ? Z() : FGAbelianGroup();
        CHECK(pl.e2.at(p, 0).group == want);
        CHECK(pl.e2.at(p, 1).group == want);
    }
    CHECK(pl.e2.at(0, 1).labels == std::vector<std::string>{"a"});
    CHECK(pl.e2.at(6, 0).labels == std::vector<std::string>{"x6"});
    CHECK(pl.e2.at(6, 1).labels == std::vector<std::string>{"a*x6"});
    CHECK(pl.e2.at(10, 0).labels == std::vector<std::string>{"x2^2*x6"});
}

TEST_CASE("differential matrices are cup products with the Euler class") {
    const OddPipeline pl({SpaceKind::GrassOdd, 3});
    CHECK(pl.d2.at(0).matrix() == IntMatrix::from_rows({{1}}));
    CHECK(pl.d2.at(2).matrix() == IntMatrix::from_rows({{1}}));
    CHECK(pl.d2.at(4).matrix() == IntMatrix::from_rows({{2}}));  // doubling into degree 6
    CHECK(pl.d2.at(6).matrix() == IntMatrix::from_rows({{1}}));
    CHECK(pl.d2.at(8).matrix() == IntMatrix::from_rows({{1}}));
    const GradedRing cp5 = ring_of({SpaceKind::CP, 5});
    const Differential d = d2_from_euler(cp5, cp5.generator_class(0));
    for (int p = 0; p <= 8; p += 2) CHECK(d.at(p).matrix() == IntMatrix::from_rows({{1}}));
    CHECK_THROWS_AS(d2_from_euler(cp5, cp5.basis_element(4, 0)), std::domain_error);
}

TEST_CASE("limit page at k = 3 matches the known table") {
    const OddPipeline pl({SpaceKind::GrassOdd, 3});
    for (int p = 0; p <= 10; ++p)
        for (int q = 0; q <= 1; ++q) {
            FGAbelianGroup want;
            if (p == 0 && q == 0) want = Z();
            if (p == 6 && q == 0) want = Z2();
            if (p == 10 && q == 1) want = Z();
            CHECK(pl.limit.at(p, q).group == want);
        }
}

TEST_CASE("zero differential leaves the page unchanged") {
    const GradedRing cp5 = ring_of({SpaceKind::CP, 5});
    const SSPage e2 = build_e2(cp5);
    const SSPage limit = take_limit(e2, d2_from_euler(cp5, cp5.zero(2)));
    for (int p = 0; p <= 10; ++p)
        for (int q = 0; q <= 1; ++q) CHECK(limit.at(p, q).group == e2.at(p, q).group);
}

TEST_CASE("assembled total space of the k = 3 bundle") {
    const OddPipeline pl({SpaceKind::GrassOdd, 3});
    const auto total = assemble_total(pl.limit);
    REQUIRE(total.size() == 12);
    for (const auto& fa : total) CHECK(fa.resolved);
    CHECK(total[0].value == Z());
    for (int n = 1; n <= 5; ++n) CHECK(total[static_cast<std::size_t>(n)].value.is_trivial());
    CHECK(total[6].value == Z2());
    for (int n = 7; n <= 10; ++n) CHECK(total[static_cast<std::size_t>(n)].value.is_trivial());
    CHECK(total[11].value == Z());
}

TEST_CASE("extension bookkeeping") {
    SUBCASE("free quotients split") {
        const auto exts = extensions_of(Z(), Z2());
        REQUIRE(exts.size() == 1);
        CHECK(exts[0] == direct_sum(Z(), Z2()));
    }
    SUBCASE("torsion by torsion lists every class") {
        const auto exts = extensions_of(Z2(), Z2());
        REQUIRE(exts.size() == 2);
        CHECK(exts[0] == FGAbelianGroup::make(0, {Int(2), Int(2)}));
        CHECK(exts[1] == FGAbelianGroup::cyclic(4));
    }
    SUBCASE("torsion quotient of a free subgroup") {
        const auto exts = extensions_of(Z2(), Z());
        REQUIRE(exts.size() == 2);
        CHECK(exts[0] == Z());                    // the index-2 embedding
        CHECK(exts[1] == direct_sum(Z(), Z2()));  // the split one
    }
    SUBCASE("higher cyclic torsion") {
        const auto exts = extensions_of(FGAbelianGroup::cyclic(4), Z2());
        REQUIRE(exts.size() == 2);
        CHECK(exts[0] == FGAbelianGroup::make(0, {Int(2), Int(4)}));
        CHECK(exts[1] == FGAbelianGroup::cyclic(8));
        const auto mixed = extensions_of(direct_sum(Z(), Z2()), Z2());
        REQUIRE(mixed.size() == 2);
        CHECK(mixed[0] == FGAbelianGroup::make(1, {Int(2), Int(2)}));
        CHECK(mixed[1] == FGAbelianGroup::make(1, {Int(4)}));
    }
}

TEST_CASE("verification verdicts") {
    const OddPipeline pl({SpaceKind::GrassOdd, 3});
    SUBCASE("true total space matches everywhere") {
        const GysinReport rep = verify_total(pl.limit, additive_groups_of({SpaceKind::StiefelOdd, 3}));
        CHECK(rep.all_match);
        for (const auto& v : rep.degrees) CHECK(v.verdict == Verdict::Match);
    }
    SUBCASE("negative control: torsion moved to degree 4") {
        auto wrong = additive_groups_of({SpaceKind::StiefelOdd, 3});
        wrong[4] = Z2();
        wrong[6] = FGAbelianGroup();
        const GysinReport rep = verify_total(pl.limit, wrong);
        CHECK(!rep.all_match);
        std::vector<int> bad;
        for (const auto& v : rep.degrees)
            if (v.verdict == Verdict::Mismatch) bad.push_back(v.degree);
        CHECK(bad == std::vector<int>{4, 6});
    }
    SUBCASE("length mismatch throws") {
        CHECK_THROWS_AS(verify_total(pl.limit, std::vector<FGAbelianGroup>(3)),
                        std::invalid_argument);
    }
}

TEST_CASE("even-family pipeline reproduces the k = 4 tables") {
    const GradedRing ring = ring_of({SpaceKind::GrassEven, 4});
    const SSPage e2 = build_e2(ring);
    CHECK(e2.at(6, 0).group == FGAbelianGroup::free_group(2));
    CHECK(e2.at(6, 0).labels == std::vector<std::string>{"x6", "y6"});
    CHECK(e2.at(6, 1).labels == std::vector<std::string>{"a*x6", "a*y6"});
    CHECK(e2.at(8, 0).labels == std::vector<std::string>{"x8"});
    const SSPage limit = take_limit(e2, d2_from_euler(ring, ring.generator_class(0)));
    for (int p = 0; p <= 12; ++p)
        for (int q = 0; q <= 1; ++q) {
            FGAbelianGroup want;
            if ((p == 0 && q == 0) || (p == 6 && q == 0) || (p == 6 && q == 1) ||
                (p == 12 && q == 1))
                want = Z();
            CHECK(limit.at(p, q).group == want);
        }
    const GysinReport rep = verify_total(limit, additive_groups_of({SpaceKind::StiefelEven, 4}));
    CHECK(rep.all_match);
}

TEST_CASE("forced d2 profiles") {
    SUBCASE("odd Grassmannian against its Stiefel total space") {
        const GradedRing ring = ring_of({SpaceKind::GrassOdd, 3});
        std::vector<FGAbelianGroup> base;
        for (int d = 0; d <= 10; ++d) base.push_back(ring.group(d));
        const D2Profile prof = required_d2_profile(base, additive_groups_of({SpaceKind::StiefelOdd, 3}));
        CHECK(!prof.contradiction_degree);
        for (int p : {0, 2, 6, 8}) CHECK(prof.slots[static_cast<std::size_t>(p)].kind == D2Kind::Iso);
        CHECK(prof.slots[4].kind == D2Kind::InjectiveWithCokernel);
        CHECK(prof.slots[4].cokernel == Z2());
        CHECK(prof.slots[10].kind == D2Kind::Zero);
    }
    SUBCASE("k = 5: the doubling lands exactly at p = 2k-2 = 8") {
        const GradedRing ring = ring_of({SpaceKind::GrassOdd, 5});
        std::vector<FGAbelianGroup> base;
        for (int d = 0; d <= 18; ++d) base.push_back(ring.group(d));
        const D2Profile prof = required_d2_profile(base, additive_groups_of({SpaceKind::StiefelOdd, 5}));
        for (int p = 0; p <= 18; ++p) {
            if (p == 8) {
                CHECK(prof.slots[static_cast<std::size_t>(p)].kind == D2Kind::InjectiveWithCokernel);
                CHECK(prof.slots[static_cast<std::size_t>(p)].cokernel == Z2());
            } else if (p == 18) {
                CHECK(prof.slots[static_cast<std::size_t>(p)].kind == D2Kind::Zero);
            } else {
                CHECK(prof.slots[static_cast<std::size_t>(p)].kind == D2Kind::Iso);
            }
        }
    }
    SUBCASE("Hopf column: isomorphisms below, zero on top") {
        const GradedRing cp5 = ring_of({SpaceKind::CP, 5});
        std::vector<FGAbelianGroup> base;
        for (int d = 0; d <= 10; ++d) base.push_back(cp5.group(d));
        const D2Profile prof = required_d2_profile(base, additive_groups_of({SpaceKind::Sphere, 11}));
        for (int p = 0; p <= 8; ++p) CHECK(prof.slots[static_cast<std::size_t>(p)].kind == D2Kind::Iso);
        CHECK(prof.slots[10].kind == D2Kind::Zero);
    }
    SUBCASE("profiles agree with the computed differentials") {
        const GradedRing ring = ring_of({SpaceKind::GrassOdd, 3});
        const Differential d2 = d2_from_euler(ring, ring.generator_class(0));
        std::vector<FGAbelianGroup> base;
        for (int d = 0; d <= 10; ++d) base.push_back(ring.group(d));
        const D2Profile prof = required_d2_profile(base, additive_groups_of({SpaceKind::StiefelOdd, 3}));
        for (int p = 0; p <= 10; ++p) {
            const D2Slot& s = prof.slots[static_cast<std::size_t>(p)];
            const FGAbelianGroup k = kernel(d2.at(p));
            const FGAbelianGroup c = cokernel(d2.at(p));
            switch (s.kind) {
                case D2Kind::Iso:
                    CHECK(k.is_trivial());
                    CHECK(c.is_trivial());
                    break;
                case D2Kind::InjectiveWithCokernel:
                    CHECK(k.is_trivial());
                    CHECK(c == s.cokernel);
                    break;
                case D2Kind::Zero:
                    CHECK(k == base[static_cast<std::size_t>(p)]);
                    break;
                case D2Kind::Unconstrained: break;
            }
        }
    }
    SUBCASE("infeasible totals report a contradiction") {
        const std::vector<FGAbelianGroup> base{Z()};
        const std::vector<FGAbelianGroup> total{Z(), FGAbelianGroup::cyclic(3)};
        const D2Profile prof = required_d2_profile(base, total);
        REQUIRE(prof.contradiction_degree.has_value());
        CHECK(*prof.contradiction_degree == 1);
    }
}

TEST_CASE("limit entries are subquotients of the second page") {
    for (const SpaceId base : {SpaceId{SpaceKind::GrassOdd, 3}, SpaceId{SpaceKind::GrassEven, 4},
                               SpaceId{SpaceKind::CP, 5}}) {
        CAPTURE(base.to_string());
        const GradedRing ring = ring_of(base);
        const SSPage e2 = build_e2(ring);
        const SSPage limit = take_limit(e2, d2_from_euler(ring, ring.generator_class(0)));
        for (int p = 0; p <= limit.top_p; ++p)
            for (int q = 0; q <= 1; ++q) {
                const FGAbelianGroup& before = e2.at(p, q).group;
                const FGAbelianGroup& after = limit.at(p, q).group;
                CHECK(after.free_rank() <= before.free_rank());
                if (before.is_finite()) {
                    REQUIRE(after.is_finite());
                    CHECK(*before.order() % *after.order() == 0);
                }
            }
    }
}

TEST_CASE("catalog assemblies are always resolved") {
    for (int k = 2; k <= 8; ++k) {
        const GradedRing odd = ring_of({SpaceKind::GrassOdd, k});
        const SSPage lo = take_limit(build_e2(odd), d2_from_euler(odd, odd.generator_class(0)));
        for (const auto& fa : assemble_total(lo)) CHECK(fa.resolved);
        if (k <= 6) {
            const GradedRing even = ring_of({SpaceKind::GrassEven, k});
            const SSPage le = take_limit(build_e2(even), d2_from_euler(even, even.generator_class(0)));
            for (const auto& fa : assemble_total(le)) CHECK(fa.resolved);
        }
    }
}

TEST_CASE("forced profiles agree with the computed differentials on every catalog pair") {
    struct Pair {
        SpaceId base, total;
    };
    std::vector<Pair> pairs;
    for (int k = 2; k <= 8; ++k) {
        pairs.push_back({{SpaceKind::GrassOdd, k}, {SpaceKind::StiefelOdd, k}});
        if (k <= 6) pairs.push_back({{SpaceKind::GrassEven, k}, {SpaceKind::StiefelEven, k}});
    }
    for (int n = 1; n <= 6; ++n)
        pairs.push_back({{SpaceKind::CP, n}, {SpaceKind::Sphere, 2 * n + 1}});
    for (const auto& pr : pairs) {
        CAPTURE(pr.base.to_string());
        const GradedRing ring = ring_of(pr.base);
        const Differential d2 = d2_from_euler(ring, ring.generator_class(0));
        std::vector<FGAbelianGroup> base;
        for (int d = 0; d <= ring.top_degree(); ++d) base.push_back(ring.group(d));
        const D2Profile prof = required_d2_profile(base, additive_groups_of(pr.total));
        REQUIRE(!prof.contradiction_degree);
        for (int p = 0; p <= ring.top_degree(); ++p) {
            const D2Slot& s = prof.slots[static_cast<std::size_t>(p)];
            const FGAbelianGroup k = kernel(d2.at(p));
            const FGAbelianGroup c = cokernel(d2.at(p));
            switch (s.kind) {
                case D2Kind::Iso:
                    CHECK(k.is_trivial());
                    CHECK(c.is_trivial());
                    break;
                case D2Kind::InjectiveWithCokernel:
                    CHECK(k.is_trivial());
                    CHECK(c == s.cokernel);
                    break;
                case D2Kind::Zero:
                    CHECK(k == base[static_cast<std::size_t>(p)]);
                    break;
                case D2Kind::Unconstrained:
                    break;
            }
        }
    }
}
