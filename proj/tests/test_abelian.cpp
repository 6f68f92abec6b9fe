#include "abelian.hpp"

#include "doctest.h"

#include <random>

using namespace g2x;

namespace {

FGAbelianGroup Z() { return FGAbelianGroup::free_group(1); }
FGAbelianGroup Zn(long long n) { return FGAbelianGroup::cyclic(n); }

bool is_divisibility_chain(const IntMatrix& d) {
    if (!d.is_diagonal()) return false;
    const std::size_t nmin = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < nmin; ++i)
        if (d.at(i, i) < 0) return false;
    for (std::size_t i = 0; i + 1 < nmin; ++i) {
        const Int &a = d.at(i, i), &b = d.at(i + 1, i + 1);
        if (a == 0 && b != 0) return false;
        if (a != 0 && b % a != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("smith normal form on small fixed matrices") {
    SUBCASE("identity is already in normal form") {
        const IntMatrix m = IntMatrix::identity(2);
        const SNFResult s = smith_normal_form(m);
        CHECK(s.d == IntMatrix::identity(2));
        CHECK(s.u == IntMatrix::identity(2));
        CHECK(s.v == IntMatrix::identity(2));
    }
    SUBCASE("1x1") {
        const SNFResult s = smith_normal_form(IntMatrix::from_rows({{2}}));
        CHECK(s.d == IntMatrix::from_rows({{2}}));
    }
    SUBCASE("[[2,4],[6,8]] has invariant factors 2, 4") {
        const IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
        const SNFResult s = smith_normal_form(m);
        CHECK(s.d == IntMatrix::from_rows({{2, 0}, {0, 4}}));
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(s.u.determinant()) == 1);
        CHECK(abs(s.v.determinant()) == 1);
        CHECK(s.u * s.u_inv == IntMatrix::identity(2));
        CHECK(s.v * s.v_inv == IntMatrix::identity(2));
    }
    SUBCASE("empty and rectangular shapes are total") {
        CHECK(smith_normal_form(IntMatrix(0, 0)).rank == 0);
        CHECK(smith_normal_form(IntMatrix(0, 3)).rank == 0);
        CHECK(smith_normal_form(IntMatrix(3, 0)).rank == 0);
        const IntMatrix m = IntMatrix::from_rows({{0, 0, 0}, {0, 0, 0}});
        CHECK(smith_normal_form(m).rank == 0);
    }
}

TEST_CASE("smith normal form randomized properties") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> dim(1, 5), ent(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = ent(rng);
        const SNFResult s = smith_normal_form(m);
        REQUIRE(s.u * m * s.v == s.d);
        REQUIRE(abs(s.u.determinant()) == 1);
        REQUIRE(abs(s.v.determinant()) == 1);
        REQUIRE(is_divisibility_chain(s.d));
        REQUIRE(s.u * s.u_inv == IntMatrix::identity(m.rows()));
        REQUIRE(s.v * s.v_inv == IntMatrix::identity(m.cols()));
        // cokernels of M and U*M*V agree
        const PresentedHom f(FGAbelianGroup::free_group(m.cols()),
                             FGAbelianGroup::free_group(m.rows()), m);
        const PresentedHom g(FGAbelianGroup::free_group(m.cols()),
                             FGAbelianGroup::free_group(m.rows()), s.d);
        REQUIRE(cokernel(f) == cokernel(g));
    }
}

TEST_CASE("canonical forms of finitely generated abelian groups") {
    CHECK(FGAbelianGroup().to_string() == "0");
    CHECK(Z().to_string() == "Z");
    CHECK(FGAbelianGroup::free_group(2).to_string() == "Z^2");
    CHECK(Zn(2).to_string() == "Z/2");
    CHECK(direct_sum(Z(), Zn(2)).to_string() == "Z + Z/2");
    CHECK(FGAbelianGroup::make(0, {Int(2), Int(4)}).to_string() == "Z/2 + Z/4");
    // canonicalization folds non-chain lists and is idempotent
    const FGAbelianGroup g = FGAbelianGroup::make(1, {Int(4), Int(2), Int(3)});
    CHECK(g == FGAbelianGroup::make(g.free_rank(), g.torsion()));
    CHECK(g.to_string() == "Z + Z/2 + Z/12");
    CHECK(direct_sum(Zn(2), Zn(3)) == Zn(6));
    CHECK(Zn(1).is_trivial());
    CHECK(Zn(0) == Z());
    CHECK(*Zn(6).order() == 6);
    CHECK(!Z().order());
}

TEST_CASE("cokernel") {
    const PresentedHom zero_zz = PresentedHom::zero(Z(), Z());
    CHECK(cokernel(zero_zz) == Z());
    const PresentedHom times2(Z(), Z(), IntMatrix::from_rows({{2}}));
    CHECK(cokernel(times2) == Zn(2));
    const PresentedHom m(FGAbelianGroup::free_group(2), FGAbelianGroup::free_group(2),
                         IntMatrix::from_rows({{2, 4}, {6, 8}}));
    CHECK(cokernel(m) == FGAbelianGroup::make(0, {Int(2), Int(4)}));
}

TEST_CASE("kernel") {
    CHECK(kernel(PresentedHom::identity(Z())).is_trivial());
    CHECK(kernel(PresentedHom::zero(Z(), Z())) == Z());
    const PresentedHom times2(Z(), Z(), IntMatrix::from_rows({{2}}));
    CHECK(kernel(times2).is_trivial());
    // projection Z -> Z/2 has kernel Z
    const PresentedHom proj(Z(), Zn(2), IntMatrix::from_rows({{1}}));
    CHECK(kernel(proj) == Z());
    CHECK(image(proj) == Zn(2));
}

TEST_CASE("exactness checks") {
    const PresentedHom zero_in = PresentedHom::zero(FGAbelianGroup(), Z());
    const PresentedHom id = PresentedHom::identity(Z());
    const PresentedHom zero_out = PresentedHom::zero(Z(), FGAbelianGroup());
    SUBCASE("0 -> Z -> Z -> 0 exact at the middle") {
        CHECK(is_exact_at(zero_in, id));
        CHECK(is_exact_at(id, zero_out));
    }
    SUBCASE("short exact sequence of the doubling map") {
        const PresentedHom times2(Z(), Z(), IntMatrix::from_rows({{2}}));
        const PresentedHom proj(Z(), Zn(2), IntMatrix::from_rows({{1}}));
        const PresentedHom out = PresentedHom::zero(Zn(2), FGAbelianGroup());
        CHECK(is_exact_at(zero_in, times2));
        CHECK(is_exact_at(times2, proj));
        CHECK(is_exact_at(proj, out));
    }
    SUBCASE("doubling twice is not exact") {
        const PresentedHom times2(Z(), Z(), IntMatrix::from_rows({{2}}));
        CHECK(!is_exact_at(times2, times2));
    }
    SUBCASE("mismatched interface throws") {
        const PresentedHom f(Z(), Zn(2), IntMatrix::from_rows({{1}}));
        CHECK_THROWS_AS(is_exact_at(f, id), std::invalid_argument);
    }
}

TEST_CASE("hom well-definedness is checked at construction") {
    CHECK_THROWS_AS(PresentedHom(Zn(2), Z(), IntMatrix::from_rows({{1}})), std::invalid_argument);
    CHECK_THROWS_AS(PresentedHom(Zn(4), Zn(8), IntMatrix::from_rows({{1}})), std::invalid_argument);
    CHECK_NOTHROW(PresentedHom(Zn(4), Zn(8), IntMatrix::from_rows({{2}})));
    CHECK_NOTHROW(PresentedHom(Zn(2), Zn(4), IntMatrix::from_rows({{2}})));
}

TEST_CASE("order bookkeeping on finite homs") {
    // |coker| * |im| = |target| for maps of finite groups
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> pick(0, 2);
    const long long orders[] = {2, 4, 6};
    for (int trial = 0; trial < 100; ++trial) {
        const FGAbelianGroup src = FGAbelianGroup::make(0, {Int(orders[pick(rng)])});
        const FGAbelianGroup tgt =
            FGAbelianGroup::make(0, {Int(orders[pick(rng)]), Int(12)});
        IntMatrix m(tgt.generator_count(), src.generator_count());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Int ti = tgt.generator_order(i);
            const Int sj = src.generator_order(0);
            const Int step = ti / gcd(ti, sj);
            std::uniform_int_distribution<long long> mult(0, 5);
            m.at(i, 0) = step * mult(rng);
        }
        const PresentedHom f(src, tgt, m);
        const Int coker_order = *cokernel(f).order();
        const Int im_order = *image(f).order();
        REQUIRE(coker_order * im_order == *tgt.order());
        // kernel finiteness bookkeeping
        const FGAbelianGroup ker = kernel(f);
        REQUIRE(ker.is_finite() == (ker.free_rank() == 0));
        REQUIRE(*ker.order() * im_order == *src.order());
    }
}

TEST_CASE("quotient presentations reduce and lift consistently") {
    // Z^2 / <(1,-2)> = Z, the class of the second generator is a basis
    IntMatrix rel(2, 1);
    rel.at(0, 0) = 1;
    rel.at(1, 0) = -2;
    QuotientPresentation q(2, rel);
    CHECK(q.group() == Z());
    REQUIRE(q.coord_count() == 1);
    const std::vector<Int> lifted = q.lift(0);
    CHECK(q.reduce(lifted) == std::vector<Int>{1});
    CHECK(q.reduce({Int(1), Int(0)}) == std::vector<Int>{q.reduce({Int(0), Int(1)})[0] * 2});
}

TEST_CASE("lattice membership") {
    const IntMatrix l = IntMatrix::from_rows({{2, 0}, {0, 3}});
    CHECK(lattice_contains(l, {Int(4), Int(3)}));
    CHECK(!lattice_contains(l, {Int(1), Int(0)}));
    CHECK(lattice_equal(l, IntMatrix::from_rows({{2, 2}, {3, 0}})));
}
