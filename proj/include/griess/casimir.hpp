#pragma once

#include <map>
#include <string>
#include <vector>

#include "griess/virasoro.hpp"

namespace griess {

/* Row of the Casimir-vector coefficient table: kappa_m = (1/denominator) *
 * sum over partitions of coeffs[p] L(-p)|0>. */
struct CasimirExpansion {
    unsigned m = 0;
    Poly denominator;
    std::map<Partition, Poly> coeffs;
};

/* Pairing (L(-n1)...L(-nk)|0> | kappa_m) from the recursion
 * L(n) kappa_m = (h(n-1) + m - n) kappa_{m-n}, kappa_0 = d|0>, kappa_1 = 0. */
Poly kappa_pairing(const Partition& p, unsigned m);

/* Solves the Gram system for the degree-m Casimir coefficients and clears
 * D_{2 floor(m/2)}(c); every cleared coefficient must come out polynomial. */
CasimirExpansion casimir_expansion(unsigned m, unsigned cap = 10);

/* As above but with the central charge specialized; raises SingularGram when
 * the specialized Gram matrix is singular (c a zero of the determinant). */
std::map<Partition, Rational> casimir_expansion_at(const Rational& c0, const Rational& d0,
                                                   const Rational& h0, unsigned m);

struct VerifyEntry {
    unsigned m;
    Partition p;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/* Re-derives every table row up to max_m and compares with the embedded
 * appendix data, entry by entry. */
VerifyReport verify_appendix_a(unsigned max_m = 10);

} // namespace griess
