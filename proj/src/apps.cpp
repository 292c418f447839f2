#include "griess/apps.hpp"

#include <algorithm>

namespace griess {

std::vector<Rational> virasoro_moments(const Rational& c, const Rational& h, const Rational& d,
                                       const Rational& e_norm, unsigned t_max) {
    if (t_max > 5) fail("UnsupportedDegree", "moments available for t <= 5");
    std::vector<Rational> out;
    for (unsigned t = 1; t <= t_max; ++t) {
        Rational den = d_polynomial(2 * t).eval(c, Rational(0), Rational(0));
        if (den.is_zero())
            fail("ZeroDenominator", "D_" + std::to_string(2 * t) + "(c) = 0 at c = " + c.str());
        Rational num = 0;
        for (const auto& [j, row] : specialize_virasoro(t)) num += row.eval(c, d, h) * e_norm.pow(j);
        out.push_back(num / den);
    }
    return out;
}

std::vector<RatFunc> virasoro_moments_symbolic(const Poly& c, const Poly& h, const Poly& d,
                                               const Rational& e_norm, unsigned t_max) {
    if (t_max > 5) fail("UnsupportedDegree", "moments available for t <= 5");
    std::vector<RatFunc> out;
    for (unsigned t = 1; t <= t_max; ++t) {
        Poly den = d_polynomial(2 * t).subst(c, d, h);
        if (den.is_zero()) fail("ZeroDenominator", "specialized D vanishes identically");
        Poly num(0);
        for (const auto& [j, row] : specialize_virasoro(t))
            num += row.subst(c, d, h) * Poly(e_norm.pow(j));
        out.emplace_back(num, den);
    }
    return out;
}

MultiplicitySolution solve_multiplicities(const MultiplicityProblem& problem) {
    const size_t n = problem.eigenvalues.size();
    if (problem.moments.size() != n)
        fail("DimensionMismatch", "need as many moments as eigenvalues (including mu_0)");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (problem.eigenvalues[i] == problem.eigenvalues[j])
                fail("SingularSystem", "repeated eigenvalue " + problem.eigenvalues[i].str());

    RatFuncMatrix a(n, RatFuncVector(n));
    RatFuncVector b(n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i)
            a[j][i] = RatFunc(Poly(problem.eigenvalues[i].pow(static_cast<unsigned>(j)))); /* 0^0 = 1 */
        b[j] = RatFunc(Poly(problem.moments[j]));
    }
    RatFuncVector x = linsolve(a, b);

    MultiplicitySolution sol;
    for (size_t i = 0; i < n; ++i) {
        Rational v = x[i].num().constant_term();
        sol.multiplicities[problem.eigenvalues[i]] = v;
        if (!v.is_integer()) sol.all_integral = false;
        if (v.is_negative()) sol.all_nonnegative = false;
    }
    return sol;
}

std::vector<std::vector<Rational>> assign_eigenvalues(const std::vector<Rational>& allowed,
                                                      const std::vector<Rational>& multiplicities,
                                                      const std::vector<Rational>& moments) {
    const size_t slots = multiplicities.size();
    if (allowed.size() < slots) fail("NoSolution", "fewer allowed eigenvalues than slots");
    std::vector<size_t> pick(allowed.size());
    for (size_t i = 0; i < pick.size(); ++i) pick[i] = i;

    std::vector<std::vector<Rational>> found;
    std::vector<size_t> chosen;
    auto rec = [&](auto&& self, std::vector<bool>& used) -> void {
        if (chosen.size() == slots) {
            for (size_t j = 0; j < moments.size(); ++j) {
                Rational acc = 0;
                for (size_t i = 0; i < slots; ++i)
                    acc += multiplicities[i] * allowed[chosen[i]].pow(static_cast<unsigned>(j + 1));
                if (!(acc == moments[j])) return;
            }
            std::vector<Rational> sol;
            for (size_t i : chosen) sol.push_back(allowed[i]);
            found.push_back(std::move(sol));
            return;
        }
        for (size_t i = 0; i < allowed.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            chosen.push_back(i);
            self(self, used);
            chosen.pop_back();
            used[i] = false;
        }
    };
    std::vector<bool> used(allowed.size(), false);
    rec(rec, used);
    if (found.empty()) fail("NoSolution", "no injective eigenvalue assignment matches the moments");
    return found;
}

std::vector<LatticeSolution> lattice_solutions_2design() {
    /* (1/2) d_{1/2} + (1/16) d_{1/16} = 1/2  over non-negative integers:
     * 8 d_{1/2} + d_{1/16} = 8. */
    std::vector<LatticeSolution> out;
    for (long half = 0; 8 * half <= 8; ++half) {
        long sixteenth = 8 - 8 * half;
        LatticeSolution s;
        s.d_half = Rational(half);
        s.d_sixteenth = Rational(sixteenth);
        s.d0 = "d-" + Rational(half + sixteenth).str();
        out.push_back(std::move(s));
    }
    return out;
}

LatticeClassification lattice_solutions_4design() {
    LatticeClassification out;
    for (auto s : lattice_solutions_2design()) {
        /* second moment: d_{1/2}/4 + d_{1/16}/256 = (25 - d)/(2(5d + 22)) */
        Rational lhs = s.d_half / Rational(4) + s.d_sixteenth / Rational(256);
        /* solve for d: lhs * 2 (5d + 22) = 25 - d  ->  d (10 lhs + 1) = 25 - 44 lhs */
        Rational denom = Rational(10) * lhs + Rational(1);
        if (denom.is_zero()) continue;
        Rational d = (Rational(25) - Rational(44) * lhs) / denom;
        if (!d.is_integer() || !d.is_positive()) continue;
        s.dimension = d;
        s.d0 = (d - s.d_half - s.d_sixteenth).str();
        out.solutions.push_back(std::move(s));
    }
    out.exclusion_note =
        "the (10,0,8) family requires an eigenvalue-1/16 root system forcing a "
        "sqrt(2)E8 sublattice, excluded by a second idempotent's trace; the "
        "surviving solution (3,1,0) has rank 4";
    out.admitted_rank = 4;
    return out;
}

MatsuoHalfResult matsuo_c_half(const Rational& c, const Rational& dim_v2) {
    Rational den = (c * (Rational(5) * c + Rational(22)));
    if (den.is_zero()) fail("ZeroDenominator", "c(5c+22) = 0 at c = " + c.str());
    MatsuoHalfResult r;
    r.d0 = ((Rational(5) * c * c - Rational(100) * c + Rational(1188)) * dim_v2 -
            Rational(545) * c * c - Rational(2006) * c) /
           den;
    r.d_half = (Rational(-2) * ((Rational(3) * c - Rational(110)) * dim_v2 + Rational(50) * c * c +
                                Rational(192) * c)) /
               den;
    r.d_sixteenth = (Rational(64) * ((Rational(2) * c - Rational(22)) * dim_v2 + Rational(10) * c * c +
                                     Rational(37) * c)) /
                    den;
    r.tau_trace = ((Rational(5) * c * c - Rational(234) * c + Rational(2816)) * dim_v2 -
                   Rational(1280) * c * c - Rational(4736) * c) /
                  den;
    /* Self-consistency of the printed forms: tau = 1 + d0 + d_{1/2} - d_{1/16}. */
    Rational recompute = Rational(1) + r.d0 + r.d_half - r.d_sixteenth;
    if (!(recompute == r.tau_trace))
        fail("SingularSystem", "internal inconsistency of the closed forms");
    return r;
}

std::map<Rational, int> sigma_sign_table() {
    return {{Rational(0), 1}, {Rational(3, 5), 1}, {Rational(1, 10), -1}, {Rational(3, 2), -1}};
}

Rational sigma_trace(const std::map<Rational, Rational>& multiplicities,
                     const std::map<Rational, int>& signs) {
    Rational out = 0;
    for (const auto& [lambda, mult] : multiplicities) {
        auto it = signs.find(lambda);
        if (it == signs.end()) fail("MissingSign", "no sign for eigenvalue " + lambda.str());
        out += Rational(it->second) * mult;
    }
    return out;
}

Design6Result design6_classification() {
    Design6Result out;

    /* Moments of a c = 7/10 Virasoro vector on the weight-3/2 top level,
     * symbolic in (c, d): (e|e) = 7/20, h = 3/2. */
    Poly c = var_c(), d = var_d();
    std::vector<RatFunc> mu =
        virasoro_moments_symbolic(c, Poly(Rational(3, 2)), d, Rational(7, 20), 3);

    /* Vandermonde solve over the eigenvalues {0, 1/10, 3/5, 3/2}. */
    std::vector<Rational> eigen = {Rational(0), Rational(1, 10), Rational(3, 5), Rational(3, 2)};
    RatFuncMatrix a(4, RatFuncVector(4));
    RatFuncVector b(4);
    for (size_t j = 0; j < 4; ++j) {
        for (size_t i = 0; i < 4; ++i) a[j][i] = RatFunc(Poly(eigen[i].pow(static_cast<unsigned>(j))));
        b[j] = (j == 0) ? RatFunc(d) : mu[j - 1];
    }
    RatFuncVector x = linsolve(a, b);
    out.d_three_fifths = x[2];
    out.d_three_halves = x[3];

    /* Printed closed forms. */
    Poly den80 = Rational(80) * c * (Rational(2) * c - Poly(1)) * (Rational(5) * c + Poly(22)) *
                 (Rational(7) * c + Poly(68));
    RatFunc printed35(Rational(-7) * d * (Rational(2) * c - Poly(47)) * (Rational(10) * c - Poly(7)) *
                          (Rational(82) * c - Poly(37)),
                      den80);
    RatFunc printed32(d * (Poly::parse("800*c^3-27588*c^2+238596*c-112133")), den80);
    out.closed_forms_match = (out.d_three_fifths == printed35) && (out.d_three_halves == printed32);

    /* d_{3/5} = 0 forces c into the roots of the non-unit factors; then
     * d_{3/2} = 1 fixes d per root; admissible = d a positive integer. */
    for (const Rational& root : {Rational(47, 2), Rational(7, 10), Rational(37, 82)}) {
        /* d_{3/2}(c0, d) is linear in d: evaluate numerator/denominator. */
        Rational num_at = 0, den_at = out.d_three_halves.den().eval(root, Rational(1), Rational(0));
        /* numerator is d * p(c): extract p(c0) by evaluating at d = 1. */
        num_at = out.d_three_halves.num().eval(root, Rational(1), Rational(0));
        if (num_at.is_zero() || den_at.is_zero())
            fail("ZeroDenominator", "degenerate root c = " + root.str());
        Rational dval = den_at / num_at;
        bool admissible = dval.is_integer() && dval.is_positive();
        out.candidates.push_back({root, dval, admissible});
    }
    return out;
}

} // namespace griess
