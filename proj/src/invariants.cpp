#include "griess/invariants.hpp"

#include <algorithm>

#include "griess/errors.hpp"

namespace griess {

std::string Elem::str() const {
    if (is_leaf()) return "a" + std::to_string(leaf);
    return "(" + kids[0].str() + "*" + kids[1].str() + ")";
}

Invariant Invariant::bilinear(int x, int y) {
    if (y < x) std::swap(x, y);
    return {Kind::Bilinear, {x, y}};
}

Invariant Invariant::trilinear(int x, int y, int z) {
    std::vector<int> a{x, y, z};
    std::sort(a.begin(), a.end());
    return {Kind::Trilinear, a};
}

Invariant Invariant::quad_pair(int a, int b, int c, int d) {
    if (b < a) std::swap(a, b);
    if (d < c) std::swap(c, d);
    if (std::pair(c, d) < std::pair(a, b)) { std::swap(a, c); std::swap(b, d); }
    return {Kind::QuadPair, {a, b, c, d}};
}

Invariant Invariant::quin_pair(int a, int b, int w, int c, int d) {
    if (b < a) std::swap(a, b);
    if (d < c) std::swap(c, d);
    if (std::pair(c, d) < std::pair(a, b)) { std::swap(a, c); std::swap(b, d); }
    return {Kind::QuinPair, {a, b, w, c, d}};
}

Invariant Invariant::quinary(const std::array<int, 5>& a) {
    return {Kind::Quinary, std::vector<int>(a.begin(), a.end())};
}

std::string Invariant::str() const {
    auto arg = [](int x) { return std::to_string(x); };
    switch (kind) {
        case Kind::OmegaPair: return "(" + arg(args[0]) + "|w)";
        case Kind::Bilinear: return "(" + arg(args[0]) + "|" + arg(args[1]) + ")";
        case Kind::Trilinear: return "(" + arg(args[0]) + "|" + arg(args[1]) + "|" + arg(args[2]) + ")";
        case Kind::QuadPair:
            return "(" + arg(args[0]) + arg(args[1]) + "|" + arg(args[2]) + arg(args[3]) + ")";
        case Kind::QuinPair:
            return "(" + arg(args[0]) + arg(args[1]) + "|" + arg(args[2]) + "|" + arg(args[3]) + arg(args[4]) + ")";
        case Kind::Quinary: {
            std::string s = "(";
            for (int x : args) s += arg(x);
            return s + ")";
        }
    }
    return "?";
}

InvProduct product_of(std::vector<Invariant> factors) {
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::string product_str(const InvProduct& p) {
    if (p.empty()) return "1";
    std::string s;
    for (const auto& f : p) s += f.str();
    return s;
}

namespace {

/* Parses one "(...)" group of the compact pattern grammar. */
Invariant parse_factor(const std::string& s, size_t& pos) {
    if (s[pos] != '(') fail("ParseError", "expected '(' in pattern '" + s + "'");
    size_t end = s.find(')', pos);
    if (end == std::string::npos) fail("ParseError", "unbalanced pattern '" + s + "'");
    std::string body = s.substr(pos + 1, end - pos - 1);
    pos = end + 1;

    std::vector<std::string> sections{""};
    for (char ch : body) {
        if (ch == '|') sections.push_back("");
        else sections.back() += ch;
    }
    auto digits = [&body](const std::string& sec) {
        std::vector<int> out;
        for (char ch : sec) {
            if (ch < '0' || ch > '9') fail("ParseError", "bad pattern section in '" + body + "'");
            out.push_back(ch - '0');
        }
        return out;
    };
    if (sections.size() == 1) {
        auto a = digits(sections[0]);
        if (a.size() != 5) fail("ParseError", "quinary pattern needs 5 arguments");
        return Invariant::quinary({a[0], a[1], a[2], a[3], a[4]});
    }
    if (sections.size() == 2) {
        if (sections[1] == "w") {
            auto a = digits(sections[0]);
            if (a.size() != 1) fail("ParseError", "omega pair needs 1 argument");
            return Invariant::omega_pair(a[0]);
        }
        auto l = digits(sections[0]), r = digits(sections[1]);
        if (l.size() == 1 && r.size() == 1) return Invariant::bilinear(l[0], r[0]);
        if (l.size() == 2 && r.size() == 2) return Invariant::quad_pair(l[0], l[1], r[0], r[1]);
        fail("ParseError", "bad two-section pattern '" + body + "'");
    }
    if (sections.size() == 3) {
        auto l = digits(sections[0]), m = digits(sections[1]), r = digits(sections[2]);
        if (l.size() == 1 && m.size() == 1 && r.size() == 1) return Invariant::trilinear(l[0], m[0], r[0]);
        if (l.size() == 2 && m.size() == 1 && r.size() == 2)
            return Invariant::quin_pair(l[0], l[1], m[0], r[0], r[1]);
        fail("ParseError", "bad three-section pattern '" + body + "'");
    }
    fail("ParseError", "bad pattern '" + body + "'");
}

} // namespace

InvProduct parse_product(const std::string& text) {
    std::vector<Invariant> factors;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') { ++pos; continue; }
        factors.push_back(parse_factor(text, pos));
    }
    return product_of(std::move(factors));
}

void comb_add(InvComb& into, const InvProduct& p, const Poly& coef) {
    if (coef.is_zero()) return;
    auto [it, fresh] = into.emplace(p, coef);
    if (!fresh) {
        it->second += coef;
        if (it->second.is_zero()) into.erase(it);
    }
}

void comb_add_scaled(InvComb& into, const InvComb& from, const Poly& scale) {
    if (scale.is_zero()) return;
    for (const auto& [p, coef] : from) comb_add(into, p, scale * coef);
}

InvComb comb_mul_factor(const InvComb& comb, const Invariant& factor) {
    InvComb out;
    for (const auto& [p, coef] : comb) {
        InvProduct q = p;
        q.push_back(factor);
        std::sort(q.begin(), q.end());
        comb_add(out, q, coef);
    }
    return out;
}

namespace {

std::pair<std::vector<int>, std::vector<int>> four_leaf_pairs(const Elem& x, const Elem& y) {
    /* The two multiplication pairs of a 4-leaf bilinear: the last-multiplied
     * leaf of a 3-leaf side pairs with the opposite side's leaf. */
    unsigned lx = x.leaves();
    if (lx == 2) {
        std::vector<int> p1, p2;
        x.collect(p1);
        y.collect(p2);
        return {p1, p2};
    }
    if (lx == 1) return four_leaf_pairs(y, x);
    /* x has 3 leaves: canonically prod(leaf w, prod(u,v)). */
    const Elem& w = x.kids[0];
    if (!w.is_leaf()) fail("IrreducibleTerm", "unexpected 3-leaf shape " + x.str());
    std::vector<int> p1, p2;
    x.kids[1].collect(p1);
    w.collect(p2);
    y.collect(p2);
    return {p1, p2};
}

} // namespace

Invariant flatten_bilinear(const Elem& x, const Elem& y) {
    unsigned n = x.leaves() + y.leaves();
    if (n == 2) return Invariant::bilinear(x.leaf, y.leaf);
    if (n == 3) {
        std::vector<int> ids;
        x.collect(ids);
        y.collect(ids);
        return Invariant::trilinear(ids[0], ids[1], ids[2]);
    }
    if (n == 4) {
        auto [p1, p2] = four_leaf_pairs(x, y);
        return Invariant::quad_pair(p1[0], p1[1], p2[0], p2[1]);
    }
    if (n == 5) {
        unsigned lx = x.leaves();
        if (lx > y.leaves()) return flatten_bilinear(y, x);
        if (lx == 2) {
            /* y = prod(leaf w, prod(u,v)) canonically. */
            const Elem& w = y.kids[0];
            if (!w.is_leaf()) fail("IrreducibleTerm", "unexpected 5-leaf shape " + y.str());
            std::vector<int> pair1, pair2;
            x.collect(pair1);
            y.kids[1].collect(pair2);
            return Invariant::quin_pair(pair1[0], pair1[1], w.leaf, pair2[0], pair2[1]);
        }
        /* lx == 1: y = prod(U, V); invariance moves U across: (z|UV) = (Uz|V). */
        return flatten_bilinear(Elem::prod(y.kids[0], x), y.kids[1]);
    }
    fail("IrreducibleTerm", "bilinear with " + std::to_string(n) + " leaves: (" + x.str() + "|" + y.str() + ")");
}

std::pair<Rational, Invariant> flatten_omega(const Elem& t) {
    if (t.is_leaf()) return {Rational(1), Invariant::omega_pair(t.leaf)};
    /* (ab|w) = (a|bw) = (a|2b) = 2 (a|b). */
    return {Rational(2), flatten_bilinear(t.kids[0], t.kids[1])};
}

} // namespace griess
