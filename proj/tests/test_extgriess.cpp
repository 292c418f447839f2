#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <numeric>
#include <sstream>

#include "griess/extgriess.hpp"

using namespace griess;

namespace {
ExtendedGriessAlgebra load_fixture(const std::string& name) {
    for (const std::string dir : {"data/fixtures", "../data/fixtures", "../../data/fixtures"}) {
        std::ifstream in(dir + "/" + name);
        if (!in) continue;
        std::ostringstream ss;
        ss << in.rdbuf();
        return ExtendedGriessAlgebra::parse(ss.str());
    }
    fail("DataFileMissing", name);
}
} // namespace

TEST_CASE("epsilon") {
    CHECK(epsilon(Rational(3)) == -1);
    CHECK(epsilon(Rational(2)) == 1);
    CHECK(epsilon(Rational(3, 2)) == 1);
    CHECK(epsilon(Rational(1, 2)) == 1);
    CHECK_THROWS_AS(epsilon(Rational(1, 3)), Error);
}

TEST_CASE("fixtures satisfy the axioms") {
    for (const char* name : {"omega_only.alg", "free_fermion.alg", "ns_c710.alg"}) {
        auto alg = load_fixture(name);
        auto report = check_axioms(alg);
        INFO(name, ": ", report.violations.empty() ? "" : report.violations[0].rule + " " + report.violations[0].detail);
        CHECK(report.pass());
    }
}

TEST_CASE("perturbing a structure constant is detected") {
    auto alg = load_fixture("free_fermion.alg");
    alg.form[{"x", "x"}] = Rational(1, 3);
    auto report = check_axioms(alg);
    CHECK(!report.pass());
    bool invariance_fail = false;
    for (const auto& v : report.violations)
        if (v.rule == "invariance") invariance_fail = true;
    CHECK(invariance_fail);
}

TEST_CASE("root analysis") {
    auto r12 = root_analysis(Rational(1, 2), Rational(1, 16));
    CHECK(r12.x_norm == Rational(1, 4));
    CHECK(r12.central_charge == Rational(1, 2));
    CHECK(r12.norm_consistent);
    CHECK(!root_analysis(Rational(1, 2), Rational(1, 8)).norm_consistent);

    /* Baby-monster chain: a = e/2 with (e|e) = 7/20, so (a|a) = 7/80. */
    auto r32 = root_analysis(Rational(3, 2), Rational(7, 80));
    CHECK(r32.x_norm == Rational(4, 3) * Rational(7, 80));
    CHECK(r32.central_charge == Rational(7, 10));

    /* linearity in the input norm */
    for (long t = 1; t <= 12; ++t) {
        auto r = root_analysis(Rational(3, 2), Rational(t, 5));
        CHECK(r.x_norm == Rational(4, 3) * Rational(t, 5));
        CHECK(r.central_charge == Rational(8) * Rational(t, 5));
    }

    auto r52 = root_analysis(Rational(5, 2), Rational(0));
    CHECK(r52.central_charge == Rational(-13, 14));
    CHECK(!r52.hypothesis.empty());

    CHECK_THROWS_AS(root_analysis(Rational(7, 2), Rational(1)), Error);
}

TEST_CASE("neveu-schwarz bracket check") {
    CHECK(ns_bracket_check(Rational(7, 10)).all_pass());
    CHECK(ns_bracket_check(Rational(1, 2)).all_pass());
    /* fault injection: a perturbed central term (4r^2+1)/12 disagrees at
     * every half-integer r */
    Rational c_a = Rational(7, 10), norm_a = c_a / Rational(8);
    int fails = 0;
    for (int rr = -6; rr < 6; ++rr) {
        Rational r = Rational(2 * rr + 1, 2);
        Rational p = r + Rational(1, 2);
        Rational derived = Rational(4) * Rational(2, 3) * p * (p - Rational(1)) * norm_a;
        Rational perturbed = (Rational(4) * r * r + Rational(1)) / Rational(12) * c_a;
        if (!(derived == perturbed)) ++fails;
    }
    CHECK(fails == 12);
}

TEST_CASE("minimal series") {
    auto m45 = minimal_series(4, 5);
    CHECK(m45.c == Rational(7, 10));
    auto w = m45.distinct_weights();
    std::vector<Rational> expected = {Rational(0),     Rational(3, 80), Rational(1, 10),
                                      Rational(7, 16), Rational(3, 5),  Rational(3, 2)};
    CHECK(w == expected);

    auto m74 = minimal_series(7, 4);
    CHECK(m74.c == Rational(-13, 14));
    CHECK(m74.weights.at({6, 1}) == Rational(5, 2));

    auto m34 = minimal_series(3, 4);
    CHECK(m34.c == Rational(1, 2));

    CHECK_THROWS_AS(minimal_series(4, 6), Error);
}

TEST_CASE("minimal series symmetry h_{r,s} = h_{p-r,q-s}") {
    for (unsigned p = 2; p <= 12; ++p) {
        for (unsigned q = 2; q <= 12; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto e = minimal_series(p, q);
            for (const auto& [rs, w] : e.weights)
                CHECK(w == e.weights.at({p - rs.first, q - rs.second}));
        }
    }
}
