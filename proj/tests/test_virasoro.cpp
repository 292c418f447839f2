#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "griess/virasoro.hpp"

using namespace griess;

TEST_CASE("partitions") {
    auto p4 = partitions(4);
    REQUIRE(p4.size() == 2);
    CHECK(p4[0].str() == "[4]");
    CHECK(p4[1].str() == "[2,2]");
    CHECK(partitions(1).empty());
    CHECK(partitions(0).size() == 1);
    auto p10 = partitions(10);
    CHECK(p10.size() == 12);
    CHECK(p10.back().str() == "[2,2,2,2,2]");
}

TEST_CASE("apply_raising basics") {
    PBWVector l2 = PBWVector::basis(Partition({2}));
    /* [L(2), L(-2)] = 4 L(0) + c/2 on |0> */
    PBWVector r = apply_raising(2, l2);
    CHECK(r.vacuum_coefficient() == Rational(1, 2) * var_c());

    /* L(1) L(-2)|0> = 3 L(-1)|0> = 0 in the quotient */
    CHECK(apply_raising(1, l2).is_zero());

    CHECK_THROWS_AS(apply_raising(3, l2), Error);

    /* L(2) L(-2)L(-2)|0> = (c + 8) L(-2)|0> by [L(2),L(-2)] = 4L(0) + c/2 twice */
    PBWVector l22 = PBWVector::basis(Partition({2, 2}));
    PBWVector r22 = apply_raising(2, l22);
    REQUIRE(r22.coeffs().size() == 1);
    CHECK(r22.coeffs().begin()->first.str() == "[2]");
    CHECK(r22.coeffs().begin()->second == Poly::parse("c+8"));
}

TEST_CASE("gram matrices") {
    auto g0 = gram_matrix(0);
    REQUIRE(g0.size() == 1);
    CHECK(g0[0][0] == Poly(1));

    auto g2 = gram_matrix(2);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0][0] == Poly::parse("(1/2)*c"));

    auto g4 = gram_matrix(4);
    REQUIRE(g4.size() == 2);
    /* det = (c^2/2)(5c+22), a nonzero rational multiple of c^2 (5c+22) */
    Poly det = g4[0][0] * g4[1][1] - g4[0][1] * g4[1][0];
    CHECK(det == Poly::parse("(1/2)*c^2*(5*c+22)"));

    CHECK_THROWS_AS(gram_matrix(11), Error);
}

TEST_CASE("gram symmetry and adjointness up to degree 10") {
    for (unsigned m = 0; m <= 10; ++m) {
        auto g = gram_matrix(m);
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j) CHECK(g[i][j] == g[j][i]);
    }
    /* <L(-n)u, v> = <u, L(n)v> on random PBW pairs, both sides independently. */
    std::uint64_t seed = 1;
    auto next = [&seed]() {
        seed ^= seed << 13; seed ^= seed >> 7; seed ^= seed << 17;
        return seed;
    };
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 2 + next() % 3;          /* raising index */
        unsigned du = 2 + next() % 5;         /* degree of u */
        unsigned dv = du + n;                 /* degree of v so that pairing is balanced */
        if (dv > 10) continue;
        auto pu = partitions(du);
        auto pv = partitions(dv);
        if (pu.empty() || pv.empty()) continue;
        Partition u = pu[next() % pu.size()];
        Partition v = pv[next() % pv.size()];
        /* lhs = <L(-n)u, v>: expand L(-n)u in the PBW basis and pair via gram(dv). */
        PBWVector lnu = apply_mode(-static_cast<int>(n), PBWVector::basis(u));
        auto basis_v = partitions(dv);
        auto gv = gram_matrix(dv);
        size_t jv = 0;
        while (!(basis_v[jv] == v)) ++jv;
        Poly lhs(0);
        for (const auto& [q, coef] : lnu.coeffs()) {
            size_t iq = 0;
            while (!(basis_v[iq] == q)) ++iq;
            lhs += coef * gv[iq][jv];
        }
        /* rhs = <u, L(n)v> */
        PBWVector lv = apply_raising(n, PBWVector::basis(v));
        auto basis_u = partitions(du);
        auto gu = gram_matrix(du);
        size_t iu = 0;
        while (!(basis_u[iu] == u)) ++iu;
        Poly rhs(0);
        for (const auto& [q, coef] : lv.coeffs()) {
            size_t jq = 0;
            while (!(basis_u[jq] == q)) ++jq;
            rhs += coef * gu[iu][jq];
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("grading is respected") {
    for (unsigned m = 2; m <= 8; ++m) {
        for (const auto& p : partitions(m)) {
            for (unsigned n = 1; n <= m; ++n) {
                PBWVector r = apply_raising(n, PBWVector::basis(p));
                if (!r.is_zero()) CHECK(r.degree() == m - n);
            }
        }
    }
}

TEST_CASE("d polynomials") {
    CHECK(d_polynomial(2) == var_c());
    CHECK(d_polynomial(6) == Poly::parse("(2*c-1)*(7*c+68)*c*(5*c+22)"));
    CHECK(d_polynomial(10) == Poly::parse("(11*c+232)*(3*c+46)*(5*c+3)*(2*c-1)*(7*c+68)*c*(5*c+22)"));
    CHECK_THROWS_AS(d_polynomial(3), Error);
    CHECK_THROWS_AS(d_polynomial(12), Error);
}

TEST_CASE("gram determinant vanishes at the D-polynomial roots") {
    /* Roots of the listed linear factors: c = 0, -22/5, 1/2, -68/7, -46/3, -3/5, -232/11. */
    std::vector<std::pair<unsigned, Rational>> roots = {
        {2, Rational(0)},        {4, Rational(-22, 5)}, {6, Rational(1, 2)},
        {6, Rational(-68, 7)},   {8, Rational(-46, 3)}, {8, Rational(-3, 5)},
        {10, Rational(-232, 11)}};
    for (unsigned m = 2; m <= 10; ++m) {
        auto g = gram_matrix(m);
        Poly det = poly_det(g);
        CHECK(!det.is_zero());
        unsigned two_t = 2 * (m / 2);
        for (const auto& [lvl, root] : roots) {
            if (lvl > two_t) continue;
            CHECK(det.eval(root, Rational(0), Rational(0)) == Rational(0));
        }
    }
}

TEST_CASE("vacuum_mode_word") {
    CHECK(vacuum_mode_word({2, 1, 0, -1, -2}) == Poly::parse("6*c"));
    CHECK(vacuum_mode_word({2, -2}) == Poly::parse("(1/2)*c"));
    CHECK_THROWS_AS(vacuum_mode_word({0, -2}), Error);
}
