#pragma once

#include <map>
#include <string>
#include <vector>

#include "griess/linsolve.hpp"
#include "griess/poly.hpp"

namespace griess {

/* Partition into parts >= 2, weakly decreasing. The empty partition is the vacuum. */
struct Partition {
    std::vector<unsigned> parts;

    Partition() = default;
    explicit Partition(std::vector<unsigned> p);

    unsigned degree() const;
    bool empty() const { return parts.empty(); }
    std::string str() const; /* "[4,2,2]" */

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b);
};

/* All partitions of m into parts >= 2, lexicographically decreasing.
 * m = 0 yields {[]}; m = 1 yields {}. */
std::vector<Partition> partitions(unsigned m);

/* Element of the degree-graded quotient M(c,0)/M(c,1): map partition -> Poly. */
class PBWVector {
public:
    PBWVector() = default;
    static PBWVector vacuum() {
        PBWVector v;
        v.coeffs_[Partition{}] = Poly(1);
        return v;
    }
    static PBWVector basis(const Partition& p) {
        PBWVector v;
        v.coeffs_[p] = Poly(1);
        return v;
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Partition, Poly>& coeffs() const { return coeffs_; }
    /* Degree of the (homogeneous) vector; 0 for the zero vector. */
    unsigned degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first.degree(); }
    Poly vacuum_coefficient() const;

    void add(const Partition& p, const Poly& coef);
    PBWVector& operator+=(const PBWVector& o);
    friend PBWVector operator*(const Poly& s, const PBWVector& v);
    friend bool operator==(const PBWVector& a, const PBWVector& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const; /* sum of coef*L(-n1)..L(-nk)|0> */

private:
    std::map<Partition, Poly> coeffs_;
};

/* L(n) applied to v for any integer n, re-normal-ordered in M(c,0)/M(c,1).
 * Monomials acquiring a part equal to 1 are dropped (the quotient). */
PBWVector apply_mode(int n, const PBWVector& v);

/* Raising action L(n), n > 0; errors when n exceeds the degree of v. */
PBWVector apply_raising(unsigned n, const PBWVector& v);

/* Shapovalov matrix on the degree-m PBW basis, entries in Q[c]. */
PolyMatrix gram_matrix(unsigned m, unsigned cap = 10);

/* Kac-determinant normalization D_2t(c) for 2t in {2,4,6,8,10}, expanded. */
Poly d_polynomial(unsigned two_t);

/* Vacuum coefficient of L(j1)...L(jr)|0>, applied right to left.
 * Errors with DegreeMismatch unless the word has total degree 0. */
Poly vacuum_mode_word(const std::vector<int>& word);

} // namespace griess
