#pragma once

#include <optional>

#include "griess/extgriess.hpp"
#include "griess/traceform.hpp"

namespace griess {

/* Exact trace moments tr o(e)^t, t = 1..t_max, of a Virasoro vector with
 * (e|e) = e_norm on a top level of dimension d and weight h. */
std::vector<Rational> virasoro_moments(const Rational& c, const Rational& h, const Rational& d,
                                       const Rational& e_norm, unsigned t_max);

/* Symbolic variant: every input is a polynomial in the ambient variables;
 * used for the rank-d lattice case where c = d. */
std::vector<RatFunc> virasoro_moments_symbolic(const Poly& c, const Poly& h, const Poly& d,
                                               const Rational& e_norm, unsigned t_max);

struct MultiplicityProblem {
    std::vector<Rational> eigenvalues; /* distinct */
    std::vector<Rational> moments;     /* mu_0 .. mu_t with mu_0 = total dimension */
};

struct MultiplicitySolution {
    std::map<Rational, Rational> multiplicities;
    bool all_integral = true;
    bool all_nonnegative = true;
};

/* Exact Vandermonde solve of  sum_l d_l l^j = mu_j  (0^0 = 1). */
MultiplicitySolution solve_multiplicities(const MultiplicityProblem& problem);

/* Exhaustive injective assignment of allowed eigenvalues to multiplicity
 * slots subject to the moment equations mu_j = sum_i m_i l_i^j, j = 1..#moments. */
std::vector<std::vector<Rational>> assign_eigenvalues(const std::vector<Rational>& allowed,
                                                      const std::vector<Rational>& multiplicities,
                                                      const std::vector<Rational>& moments);

/* Lattice h = 1 application: integral solutions of the moment constraints on
 * eigenvalues (0, 1/2, 1/16). */
struct LatticeSolution {
    /* multiplicities (d_0, d_{1/2}, d_{1/16}); d_0 symbolic as d - k. */
    Rational d_half, d_sixteenth;
    std::optional<Rational> dimension; /* fixed d when the 4-design constraint is used */
    std::string d0; /* "d-1" style when dimension is open, else the value */
};

/* First moment only (conformal 2-design): two families. */
std::vector<LatticeSolution> lattice_solutions_2design();
/* Both moments (conformal 4-design): the integral solutions, admitting
 * the annotated exclusion that leads to rank 4. */
struct LatticeClassification {
    std::vector<LatticeSolution> solutions;
    std::string exclusion_note;
    unsigned admitted_rank = 0;
};
LatticeClassification lattice_solutions_4design();

/* Closed forms of the c = 1/2 idempotent trace data on the even Griess
 * algebra, and the tau-involution trace. */
struct MatsuoHalfResult {
    Rational d0, d_half, d_sixteenth, tau_trace;
};
MatsuoHalfResult matsuo_c_half(const Rational& c, const Rational& dim_v2);

/* Sign table of the sigma involution attached to a c = 7/10 vector. */
std::map<Rational, int> sigma_sign_table();

Rational sigma_trace(const std::map<Rational, Rational>& multiplicities,
                     const std::map<Rational, int>& signs);

/* Classification of the h = 3/2 conformal 6-design constraint. */
struct Design6Result {
    RatFunc d_three_fifths, d_three_halves; /* closed forms in (c, d) */
    bool closed_forms_match = false;
    struct Candidate {
        Rational c;
        Rational d;
        bool admissible;
    };
    std::vector<Candidate> candidates;
};
Design6Result design6_classification();

} // namespace griess
