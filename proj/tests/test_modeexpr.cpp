#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "griess/modeexpr.hpp"

using namespace griess;

namespace {
Letter G(int id, int n) { return Letter::gr(Elem::leaf_of(id), n); }
Letter V(int n) { return Letter::vir(n); }
Poly P(long v) { return Poly(v); }
} // namespace

TEST_CASE("invariant canonical forms") {
    CHECK(Invariant::bilinear(2, 1) == Invariant::bilinear(1, 2));
    CHECK(Invariant::quad_pair(3, 2, 1, 0) == Invariant::quad_pair(0, 1, 2, 3));
    CHECK(Invariant::quin_pair(3, 4, 2, 0, 1) == Invariant::quin_pair(0, 1, 2, 3, 4));
    CHECK(parse_product("(01|23)")[0] == Invariant::quad_pair(0, 1, 2, 3));
    CHECK(parse_product("(0|1)(2|w)") == product_of({Invariant::omega_pair(2), Invariant::bilinear(0, 1)}));
    CHECK(product_str(parse_product("(01|4|23)")) == "(01|4|23)");
}

TEST_CASE("flatten bilinear") {
    Elem a0 = Elem::leaf_of(0), a1 = Elem::leaf_of(1), a2 = Elem::leaf_of(2), a3 = Elem::leaf_of(3);
    CHECK(flatten_bilinear(a0, a1) == Invariant::bilinear(0, 1));
    CHECK(flatten_bilinear(Elem::prod(a0, a1), a2) == Invariant::trilinear(0, 1, 2));
    CHECK(flatten_bilinear(Elem::prod(a0, a1), Elem::prod(a2, a3)) == Invariant::quad_pair(0, 1, 2, 3));
    /* (z | w(uv)) = (wz|uv) pairing */
    CHECK(flatten_bilinear(a3, Elem::prod(a2, Elem::prod(a0, a1))) == Invariant::quad_pair(0, 1, 2, 3));
    /* ((a0(a1 a2)) | a3) = (a1a2 | a0a3) */
    CHECK(flatten_bilinear(Elem::prod(a0, Elem::prod(a1, a2)), a3) == Invariant::quad_pair(1, 2, 0, 3));
    /* five leaves */
    Elem a4 = Elem::leaf_of(4);
    CHECK(flatten_bilinear(Elem::prod(a0, a1), Elem::prod(a2, Elem::prod(a3, a4))) ==
          Invariant::quin_pair(0, 1, 2, 3, 4));
    auto [cf, inv] = flatten_omega(Elem::prod(a0, a1));
    CHECK(cf == Rational(2));
    CHECK(inv == Invariant::bilinear(0, 1));
}

TEST_CASE("simple vacuum words") {
    /* <a0_(3) a1_(-1)> = (a0|a1) */
    InvComb r = reduce_word({G(0, 3), G(1, -1)});
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == InvProduct{Invariant::bilinear(0, 1)});
    CHECK(r.begin()->second == Poly(1));

    /* <a0_(3) L(-2)> = (a0|w) */
    r = reduce_word({G(0, 3), V(-2)});
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == InvProduct{Invariant::omega_pair(0)});
    CHECK(r.begin()->second == Poly(1));

    /* <L(2) L(-2)> = c/2 */
    r = reduce_word({V(2), V(-2)});
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first.empty());
    CHECK(r.begin()->second == Poly::parse("(1/2)*c"));

    /* pure Virasoro quinary word: 6c */
    r = reduce_word({V(2), V(1), V(0), V(-1), V(-2)});
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->second == Poly::parse("6*c"));

    /* annihilation */
    CHECK(reduce_word({G(0, 1)}).empty());
    CHECK(reduce_word({G(0, -1)}).empty());
}

TEST_CASE("worked degree-4 reduction") {
    /* ( a0_(4) a1_(1) a2_(0) a3 | vac )
     *   = 3 (a0a1|a2a3) - (a0a2|a1a3) + (a0a3|a1a2) */
    InvComb r = reduce_word({G(0, 4), G(1, 1), G(2, 0), G(3, -1)});
    InvComb expected;
    comb_add(expected, {Invariant::quad_pair(0, 1, 2, 3)}, P(3));
    comb_add(expected, {Invariant::quad_pair(0, 2, 1, 3)}, P(-1));
    comb_add(expected, {Invariant::quad_pair(0, 3, 1, 2)}, P(1));
    CHECK(r == expected);
}

TEST_CASE("intermediate identity of the worked example") {
    /* ( a0_(3) a1_(2) a2_(0) a3 | vac )
     *   = (a2a3|a0a1) - (a1a3|a0a2) + (a1a2|a0a3) */
    InvComb r = reduce_word({G(0, 3), G(1, 2), G(2, 0), G(3, -1)});
    InvComb expected;
    comb_add(expected, {Invariant::quad_pair(2, 3, 0, 1)}, P(1));
    comb_add(expected, {Invariant::quad_pair(1, 3, 0, 2)}, P(-1));
    comb_add(expected, {Invariant::quad_pair(1, 2, 0, 3)}, P(1));
    CHECK(r == expected);
}

TEST_CASE("quinary normal form is returned untouched") {
    InvComb r = reduce_word({G(0, 3), G(1, 2), G(2, 1), G(3, 0), G(4, -1)});
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == InvProduct{Invariant::quinary({0, 1, 2, 3, 4})});
}

TEST_CASE("zhu kappa pairings for the degree-1 formula") {
    /* (a0 | L(-2)): single argument, no zhu indices */
    InvComb r = zhu_kappa_pairing({0}, {}, Partition({2}));
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == InvProduct{Invariant::omega_pair(0)});
    CHECK(r.begin()->second == Poly(1));
}

TEST_CASE("reduce_pairing is linear") {
    Word w1 = {G(0, 3), G(1, -1)};
    Word w2 = {G(0, 3), V(-2)};
    ModeExpr e;
    e.push_back({Poly::parse("3*c"), w1});
    e.push_back({Poly::parse("-2*h"), w2});
    InvComb r = reduce_pairing(e);
    InvComb expected;
    comb_add(expected, {Invariant::bilinear(0, 1)}, Poly::parse("3*c"));
    comb_add(expected, {Invariant::omega_pair(0)}, Poly::parse("-2*h"));
    CHECK(r == expected);

    /* scaling commutes with reduction */
    for (int t = 0; t < 50; ++t) {
        Poly s = Poly(Rational(t % 7 - 3));
        ModeExpr scaled;
        for (auto& term : e) scaled.push_back({s * term.coef, term.word});
        InvComb lhs = reduce_pairing(scaled);
        InvComb rhs;
        comb_add_scaled(rhs, r, s);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("kappa-2 pairing of a two-argument word") {
    /* (a0_(1) a1 | L(-2)|0>) = 2 (a0|a1): bubble through the single L(-2). */
    InvComb r = zhu_kappa_pairing({0, 1}, {1}, Partition({2}));
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == InvProduct{Invariant::bilinear(0, 1)});
    CHECK(r.begin()->second == Poly(2));
}

TEST_CASE("kappa-4 pairing reproduces omega pairs") {
    /* (a0_(-1) a1 | L(-2)L(-2)|0>) = 2 (a0|w)(a1|w) + 8 (a0|a1) */
    InvComb r = zhu_kappa_pairing({0, 1}, {-1}, Partition({2, 2}));
    InvComb expected;
    comb_add(expected, product_of({Invariant::omega_pair(0), Invariant::omega_pair(1)}), P(2));
    comb_add(expected, {Invariant::bilinear(0, 1)}, P(8));
    CHECK(r == expected);
}
