#pragma once

#include <map>
#include <string>
#include <vector>

#include "griess/rational.hpp"

namespace griess {

/* Signature of the modified invariance: (-1)^h for integral h, +1 for
 * half-odd h. */
int epsilon(const Rational& h);

/* Linear combination over basis labels. */
using LinComb = std::map<std::string, Rational>;

/* Finite structure-constant model of an extended Griess algebra V_2 + V_h. */
struct ExtendedGriessAlgebra {
    std::vector<std::string> even, odd;
    std::map<std::pair<std::string, std::string>, LinComb> products; /* symmetrized keys */
    std::map<std::pair<std::string, std::string>, Rational> form;
    Rational top_weight;
    LinComb omega;

    bool is_even(const std::string& id) const;
    LinComb product(const std::string& x, const std::string& y) const;
    Rational pairing(const std::string& x, const std::string& y) const;
    LinComb product_lin(const LinComb& x, const LinComb& y) const;
    Rational pairing_lin(const LinComb& x, const LinComb& y) const;

    static ExtendedGriessAlgebra parse(const std::string& text);
};

struct AxiomViolation {
    std::string rule;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool pass() const { return violations.empty(); }
};

/* Exhaustive finite check: commutativity, parity of the form, omega action,
 * modified invariance (x u | y) = eps_h (x | u y). */
AxiomReport check_axioms(const ExtendedGriessAlgebra& alg);

/* Structure of the subalgebra generated by a square root of an idempotent. */
struct RootAnalysis {
    Rational top_weight;
    Rational x_norm;          /* (x|x) */
    Rational central_charge;  /* of <x> */
    std::string label;
    bool norm_consistent = true; /* h = 1/2 forces (a|a) = 1/16 */
    std::string hypothesis;      /* extra assumption recorded for h = 5/2 */
};

RootAnalysis root_analysis(const Rational& h, const Rational& norm_a);

struct BracketCheckEntry {
    std::string relation;
    bool pass;
};

struct BracketCheckReport {
    std::vector<BracketCheckEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/* Verifies that the h = 3/2 bracket constants coincide with the
 * Neveu-Schwarz normal form over a grid of mode indices. */
BracketCheckReport ns_bracket_check(const Rational& c_a, int grid = 6);

/* Minimal-series central charge and weight table. */
struct MinimalSeriesEntry {
    unsigned p = 0, q = 0;
    Rational c;
    std::map<std::pair<unsigned, unsigned>, Rational> weights; /* (r,s) -> h */
    std::vector<Rational> distinct_weights();                  /* sorted, deduplicated */
};

MinimalSeriesEntry minimal_series(unsigned p, unsigned q);

} // namespace griess
