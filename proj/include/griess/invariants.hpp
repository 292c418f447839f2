#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "griess/poly.hpp"

namespace griess {

/* Weight-2 element built from commutative binary products of base arguments
 * (argument ids are small non-negative integers). Trees are kept sorted, so
 * structural equality is semantic equality modulo commutativity. */
struct Elem {
    int leaf = -1;          /* >= 0 for a leaf, -1 for a product node */
    std::vector<Elem> kids; /* exactly two for a product node */

    static Elem leaf_of(int id) {
        Elem e;
        e.leaf = id;
        return e;
    }
    static Elem prod(Elem a, Elem b) {
        Elem e;
        e.leaf = -1;
        if (b < a) std::swap(a, b);
        e.kids.push_back(std::move(a));
        e.kids.push_back(std::move(b));
        return e;
    }

    bool is_leaf() const { return leaf >= 0; }
    unsigned leaves() const {
        if (is_leaf()) return 1;
        if (kids.empty()) return 0; /* empty slot of a Virasoro letter */
        return kids[0].leaves() + kids[1].leaves();
    }
    void collect(std::vector<int>& out) const {
        if (is_leaf()) { out.push_back(leaf); return; }
        kids[0].collect(out);
        kids[1].collect(out);
    }

    friend bool operator==(const Elem& a, const Elem& b) {
        return a.leaf == b.leaf && a.kids == b.kids;
    }
    friend bool operator<(const Elem& a, const Elem& b) {
        if (a.leaves() != b.leaves()) return a.leaves() < b.leaves();
        if (a.leaf != b.leaf) return a.leaf < b.leaf;
        return a.kids < b.kids;
    }
    std::string str() const;
};

/* One invariant scalar factor of the trace formulae. */
struct Invariant {
    enum class Kind { OmegaPair, Bilinear, Trilinear, QuadPair, QuinPair, Quinary };
    Kind kind;
    std::vector<int> args;
    /* args layout: OmegaPair {x}; Bilinear {x,y}; Trilinear {x,y,z};
     * QuadPair {a,b,c,d} = (ab|cd); QuinPair {a,b,w,c,d} = (ab|w|cd);
     * Quinary {a0..a4} as written (no symmetry). */

    static Invariant omega_pair(int x) { return {Kind::OmegaPair, {x}}; }
    static Invariant bilinear(int x, int y);
    static Invariant trilinear(int x, int y, int z);
    static Invariant quad_pair(int a, int b, int c, int d);
    static Invariant quin_pair(int a, int b, int w, int c, int d);
    static Invariant quinary(const std::array<int, 5>& a);

    friend bool operator==(const Invariant& a, const Invariant& b) {
        return a.kind == b.kind && a.args == b.args;
    }
    friend bool operator<(const Invariant& a, const Invariant& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.args < b.args;
    }
    std::string str() const;
};

/* Product of invariant factors, sorted (commutative scalars). */
using InvProduct = std::vector<Invariant>;

InvProduct product_of(std::vector<Invariant> factors);
std::string product_str(const InvProduct& p);
InvProduct parse_product(const std::string& text); /* "(0|1)(2|w)", "(01|2|34)", "(01234)" */

/* Linear combination of invariant products over Q[c,d,h]. */
using InvComb = std::map<InvProduct, Poly>;

void comb_add(InvComb& into, const InvProduct& p, const Poly& coef);
void comb_add_scaled(InvComb& into, const InvComb& from, const Poly& scale);
/* Multiply every product of the combination by one more factor. */
InvComb comb_mul_factor(const InvComb& comb, const Invariant& factor);

/* Canonical invariant for the pairing (x|y) of omega-free product trees.
 * Total leaf count must be between 2 and 5. */
Invariant flatten_bilinear(const Elem& x, const Elem& y);

/* (t|omega): a leaf gives the omega pair; a product (ab|omega) = 2 (a|b). */
std::pair<Rational, Invariant> flatten_omega(const Elem& t);

} // namespace griess
