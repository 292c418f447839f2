#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "griess/apps.hpp"

using namespace griess;

TEST_CASE("baby-monster moments") {
    auto mu = virasoro_moments(Rational(47, 2), Rational(3, 2), Rational(4371), Rational(7, 20), 3);
    REQUIRE(mu.size() == 3);
    CHECK(mu[0] == Rational(1953, 10));
    CHECK(mu[1] == Rational(2163, 100));
    CHECK(mu[2] == Rational(5313, 1000));
    CHECK_THROWS_AS(virasoro_moments(Rational(0), Rational(1), Rational(1), Rational(1), 1), Error);
}

TEST_CASE("lattice symbolic moments") {
    /* c = d, h = 1, (e|e) = 1/4: mu_1 = 1/2 and mu_2 = (25-d)/(2(5d+22)). */
    auto mu = virasoro_moments_symbolic(var_d(), Poly(1), var_d(), Rational(1, 4), 2);
    CHECK(mu[0] == RatFunc(Poly(Rational(1, 2))));
    CHECK(mu[1] == RatFunc(Poly(25) - var_d(), Rational(2) * (Rational(5) * var_d() + Poly(22))));
}

TEST_CASE("L(0) saturation through the E tables") {
    /* e = omega: e_norm = c/2 gives h^t d for t <= 5. */
    Rational c(26), d(31), h(7, 2);
    auto mu = virasoro_moments(c, h, d, c / Rational(2), 5);
    for (unsigned t = 1; t <= 5; ++t) CHECK(mu[t - 1] == h.pow(t) * d);
}

TEST_CASE("multiplicity solve") {
    MultiplicityProblem p;
    p.eigenvalues = {Rational(0), Rational(1, 10), Rational(3, 5), Rational(3, 2)};
    p.moments = {Rational(4371), Rational(1953, 10), Rational(2163, 100), Rational(5313, 1000)};
    auto sol = solve_multiplicities(p);
    CHECK(sol.multiplicities.at(Rational(0)) == Rational(2432));
    CHECK(sol.multiplicities.at(Rational(1, 10)) == Rational(1938));
    CHECK(sol.multiplicities.at(Rational(3, 5)) == Rational(0));
    CHECK(sol.multiplicities.at(Rational(3, 2)) == Rational(1));
    CHECK(sol.all_integral);
    CHECK(sol.all_nonnegative);

    MultiplicityProblem trivial;
    trivial.eigenvalues = {Rational(0)};
    trivial.moments = {Rational(5)};
    CHECK(solve_multiplicities(trivial).multiplicities.at(Rational(0)) == Rational(5));

    MultiplicityProblem repeated;
    repeated.eigenvalues = {Rational(1), Rational(1)};
    repeated.moments = {Rational(2), Rational(2)};
    CHECK_THROWS_AS(solve_multiplicities(repeated), Error);
}

TEST_CASE("round trip: solve then recompute moments") {
    std::uint64_t seed = 77;
    auto next = [&seed]() {
        seed ^= seed << 13; seed ^= seed >> 7; seed ^= seed << 17;
        return seed;
    };
    int done = 0;
    for (int trial = 0; trial < 1100; ++trial) {
        MultiplicityProblem p;
        /* four distinct small eigenvalues */
        std::vector<Rational> eig;
        while (eig.size() < 4) {
            Rational cand(static_cast<long>(next() % 19) - 9, static_cast<long>(next() % 4) + 1);
            bool dup = false;
            for (const auto& e : eig) dup = dup || e == cand;
            if (!dup) eig.push_back(cand);
        }
        std::vector<Rational> mult;
        for (int i = 0; i < 4; ++i) mult.push_back(Rational(static_cast<long>(next() % 50)));
        p.eigenvalues = eig;
        for (unsigned j = 0; j < 4; ++j) {
            Rational mu = 0;
            for (int i = 0; i < 4; ++i) mu += mult[static_cast<size_t>(i)] * eig[static_cast<size_t>(i)].pow(j);
            p.moments.push_back(mu);
        }
        auto sol = solve_multiplicities(p);
        for (int i = 0; i < 4; ++i)
            CHECK(sol.multiplicities.at(eig[static_cast<size_t>(i)]) == mult[static_cast<size_t>(i)]);
        ++done;
    }
    CHECK(done == 1100);
}

TEST_CASE("eigenvalue assignment") {
    std::vector<Rational> allowed = {Rational(0),    Rational(7, 16), Rational(3, 80),
                                     Rational(3, 2), Rational(3, 5),  Rational(1, 10)};
    std::vector<Rational> mult = {Rational(1), Rational(1938), Rational(2432)};
    std::vector<Rational> moments = {Rational(1953, 10), Rational(2163, 100), Rational(5313, 1000)};
    auto sols = assign_eigenvalues(allowed, mult, moments);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0][0] == Rational(3, 2));
    CHECK(sols[0][1] == Rational(1, 10));
    CHECK(sols[0][2] == Rational(0));

    CHECK_THROWS_AS(assign_eigenvalues({Rational(0), Rational(1, 2)}, {Rational(1), Rational(1)},
                                       {Rational(1), Rational(1, 2)}),
                    Error);
}

TEST_CASE("lattice classification") {
    auto two = lattice_solutions_2design();
    REQUIRE(two.size() == 2);
    /* families (d-8, 0, 8) and (d-1, 1, 0) */
    CHECK(two[0].d_half == Rational(0));
    CHECK(two[0].d_sixteenth == Rational(8));
    CHECK(two[1].d_half == Rational(1));
    CHECK(two[1].d_sixteenth == Rational(0));

    auto four = lattice_solutions_4design();
    REQUIRE(four.solutions.size() == 2);
    CHECK(four.solutions[0].d0 == "10");
    CHECK(four.solutions[0].d_sixteenth == Rational(8));
    CHECK(*four.solutions[0].dimension == Rational(18));
    CHECK(four.solutions[1].d0 == "3");
    CHECK(four.solutions[1].d_half == Rational(1));
    CHECK(*four.solutions[1].dimension == Rational(4));
    CHECK(four.admitted_rank == 4);
}

TEST_CASE("moonshine closed forms") {
    auto r = matsuo_c_half(Rational(24), Rational(196884));
    CHECK(r.d0 == Rational(96256));
    CHECK(r.d_half == Rational(4371));
    CHECK(r.d_sixteenth == Rational(96256));
    CHECK(r.tau_trace == Rational(4372));
    CHECK(Rational(1) + r.d0 + r.d_half + r.d_sixteenth == Rational(196884));
    CHECK_THROWS_AS(matsuo_c_half(Rational(-22, 5), Rational(1)), Error);
}

TEST_CASE("sigma trace") {
    std::map<Rational, Rational> mult = {{Rational(0), Rational(2432)},
                                         {Rational(1, 10), Rational(1938)},
                                         {Rational(3, 5), Rational(0)},
                                         {Rational(3, 2), Rational(1)}};
    CHECK(sigma_trace(mult, sigma_sign_table()) == Rational(493));
    CHECK(sigma_trace({{Rational(0), Rational(1)}}, sigma_sign_table()) == Rational(1));
    CHECK_THROWS_AS(sigma_trace({{Rational(7), Rational(1)}}, sigma_sign_table()), Error);
}

TEST_CASE("baby-monster pipeline end to end") {
    /* inputs: (c, h, d, c_e) = (47/2, 3/2, 4371, 7/10) */
    Rational c(47, 2), h(3, 2), d(4371), e_norm = Rational(7, 10) / Rational(2);
    auto mu = virasoro_moments(c, h, d, e_norm, 3);
    auto allowed = minimal_series(4, 5).distinct_weights();
    auto assign = assign_eigenvalues(allowed, {Rational(1), Rational(1938), Rational(2432)}, mu);
    REQUIRE(assign.size() == 1);
    MultiplicityProblem p;
    p.eigenvalues = {Rational(0), Rational(1, 10), Rational(3, 5), Rational(3, 2)};
    p.moments = {d, mu[0], mu[1], mu[2]};
    auto sol = solve_multiplicities(p);
    CHECK(sigma_trace(sol.multiplicities, sigma_sign_table()) == Rational(493));
}

TEST_CASE("design-6 classification") {
    auto r = design6_classification();
    CHECK(r.closed_forms_match);
    REQUIRE(r.candidates.size() == 3);
    int admissible = 0;
    for (const auto& cand : r.candidates) {
        if (cand.c == Rational(47, 2)) {
            CHECK(cand.d == Rational(4371));
            CHECK(cand.admissible);
        }
        if (cand.c == Rational(7, 10)) {
            CHECK(cand.d == Rational(1));
            CHECK(cand.admissible);
        }
        if (cand.c == Rational(37, 82)) CHECK(!cand.admissible);
        if (cand.admissible) ++admissible;
    }
    CHECK(admissible == 2);
}
