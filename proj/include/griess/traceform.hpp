#pragma once

#include <optional>

#include "griess/casimir.hpp"
#include "griess/modeexpr.hpp"

namespace griess {

/* One term of the Zhu-product expansion of tr o(a^0)...o(a^{k-1}). */
struct ZhuTerm {
    std::vector<int> indices; /* i_0..i_{k-2}, each in {-1,0,1} */
    int sign;                 /* (-1)^m */
    unsigned weight;          /* Casimir weight m = k+1 - sum */
    Rational coefficient;     /* product of the Zhu binomials C(2, i_j + 1) */
};

/* All 3^{k-1} tuples, 1 <= k <= 5. */
std::vector<ZhuTerm> zhu_expand(unsigned k);

/* A symmetrized pattern of invariant monomials with its expansion. */
struct PatternClass {
    unsigned degree = 0;
    std::string id;
    std::vector<InvProduct> members;
};

/* Trace-formula coefficient table of one degree, over D_{2k}(c). */
struct TraceFormulaTable {
    unsigned degree = 0;
    Poly denominator;
    std::vector<PatternClass> patterns;
    std::map<std::string, Poly> coeffs; /* pattern id -> F */
};

/* Pattern classes of one degree, from the embedded Sym table. */
std::vector<PatternClass> pattern_classes(unsigned degree);

/* Rewriting-based derivation, degrees 1..3. */
TraceFormulaTable derive_trace_formula(unsigned k);

/* Degrees 1..3 derived, 4..5 from the embedded appendix data. */
TraceFormulaTable formula_table(unsigned k);

/* Values assigned to invariant factors at evaluation time, by kind. */
struct FactorValues {
    std::optional<Rational> omega_pair, bilinear, trilinear, quad_pair, quin_pair, quinary;
    Rational value_of(const Invariant& inv) const;
    /* All arguments equal to a Virasoro vector e with (e|e) = kappa. */
    static FactorValues virasoro_vector(const Rational& kappa);
};

Rational evaluate_trace(const TraceFormulaTable& table, const FactorValues& values,
                        const Rational& c, const Rational& d, const Rational& h);

/* E^{(t)}_j rows of the single-Virasoro-vector specialization, t = 1..5. */
std::map<unsigned, Poly> specialize_virasoro(unsigned t);

/* Remark-style degree reduction: substituting a^0 = w/h into the degree-k
 * table must reproduce the degree-(k-1) table, as polynomial identities. */
struct ReductionReport {
    unsigned k = 0;
    bool pass = false;
    std::string detail;
};
ReductionReport reduction_check(unsigned k);

/* All-omega saturation: the degree-k formula collapses to h^k d. */
bool omega_saturation(unsigned k);

} // namespace griess
