#include "griess/virasoro.hpp"

#include <algorithm>

namespace griess {

Partition::Partition(std::vector<unsigned> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 2) fail("ParseError", "partition part < 2");
        if (i > 0 && parts[i] > parts[i - 1]) fail("ParseError", "partition not weakly decreasing");
    }
}

unsigned Partition::degree() const {
    unsigned s = 0;
    for (unsigned p : parts) s += p;
    return s;
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(b.parts.begin(), b.parts.end(),
                                        a.parts.begin(), a.parts.end());
}

std::vector<Partition> partitions(unsigned m) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
        if (rest == 0) {
            out.emplace_back();
            out.back().parts = cur;
            return;
        }
        for (unsigned p = std::min(rest, maxpart); p >= 2; --p) {
            if (rest - p == 1) continue; /* cannot finish with a part of 1 */
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (m == 1) return out;
    rec(rec, m, m);
    return out;
}

Poly PBWVector::vacuum_coefficient() const {
    auto it = coeffs_.find(Partition{});
    return it == coeffs_.end() ? Poly(0) : it->second;
}

void PBWVector::add(const Partition& p, const Poly& coef) {
    if (coef.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(p, coef);
    if (!fresh) {
        it->second += coef;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

PBWVector& PBWVector::operator+=(const PBWVector& o) {
    for (const auto& [p, c] : o.coeffs_) add(p, c);
    return *this;
}

PBWVector operator*(const Poly& s, const PBWVector& v) {
    PBWVector r;
    if (s.is_zero()) return r;
    for (const auto& [p, c] : v.coeffs_) r.add(p, s * c);
    return r;
}

std::string PBWVector::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")*";
        for (unsigned n : p.parts) out += "L(-" + std::to_string(n) + ")";
        out += "|0>";
    }
    return out;
}

namespace {

/* [L(m), L(n)] = (m-n) L(m+n) + delta_{m+n,0} (m^3-m)/12 c. */
Poly central_term(int m) {
    long mm = m;
    return Rational(mm * mm * mm - mm, 12) * var_c();
}

/* L(n) applied to a single PBW monomial. */
PBWVector apply_mode_monomial(int n, const Partition& p) {
    PBWVector out;
    if (p.empty()) {
        if (n >= -1) return out;          /* L(n)|0> = 0 for n >= -1 */
        out.add(Partition({static_cast<unsigned>(-n)}), Poly(1));
        return out;
    }
    unsigned first = p.parts[0];
    Partition rest;
    rest.parts.assign(p.parts.begin() + 1, p.parts.end());

    if (n <= -2 && static_cast<unsigned>(-n) >= first) {
        /* Already normal ordered: prepend. */
        Partition q;
        q.parts.reserve(p.parts.size() + 1);
        q.parts.push_back(static_cast<unsigned>(-n));
        q.parts.insert(q.parts.end(), p.parts.begin(), p.parts.end());
        out.add(q, Poly(1));
        return out;
    }

    /* Commute past L(-first): L(n)L(-f) = L(-f)L(n) + (n+f)L(n-f) + delta c-term. */
    int f = static_cast<int>(first);
    PBWVector tail = apply_mode_monomial(n, rest);
    for (const auto& [q, coef] : tail.coeffs()) {
        PBWVector pre = apply_mode_monomial(-f, q);
        for (const auto& [qq, cc] : pre.coeffs()) out.add(qq, coef * cc);
    }
    PBWVector bracket = apply_mode_monomial(n - f, rest);
    out += Rational(n + f) * Poly(1) * bracket;
    if (n == f) {
        PBWVector cterm;
        cterm.add(rest, central_term(n));
        out += cterm;
    }
    return out;
}

} // namespace

PBWVector apply_mode(int n, const PBWVector& v) {
    PBWVector out;
    for (const auto& [p, coef] : v.coeffs()) {
        PBWVector t = apply_mode_monomial(n, p);
        for (const auto& [q, c] : t.coeffs()) out.add(q, coef * c);
    }
    return out;
}

PBWVector apply_raising(unsigned n, const PBWVector& v) {
    if (v.is_zero()) return v;
    if (n > v.degree()) fail("DegreeUnderflow", "raising by " + std::to_string(n) + " on degree " + std::to_string(v.degree()));
    return apply_mode(static_cast<int>(n), v);
}

PolyMatrix gram_matrix(unsigned m, unsigned cap) {
    if (m > cap) fail("UnsupportedDegree", "gram_matrix degree " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
    auto basis = partitions(m);
    const size_t n = basis.size();
    PolyMatrix g(n, PolyVector(n, Poly(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            /* <L(-mu)|0>, L(-nu)|0>> = vacuum coeff of L(mu_k)...L(mu_1) L(-nu)|0>. */
            PBWVector v = PBWVector::basis(basis[j]);
            for (unsigned part : basis[i].parts) v = apply_mode(static_cast<int>(part), v);
            g[i][j] = g[j][i] = v.vacuum_coefficient();
        }
    }
    return g;
}

Poly d_polynomial(unsigned two_t) {
    Poly c = var_c();
    Poly d2 = c;
    Poly d4 = c * (Rational(5) * c + Poly(22));
    Poly d6 = (Rational(2) * c - Poly(1)) * (Rational(7) * c + Poly(68)) * d4;
    Poly d8 = (Rational(3) * c + Poly(46)) * (Rational(5) * c + Poly(3)) * d6;
    Poly d10 = (Rational(11) * c + Poly(232)) * d8;
    switch (two_t) {
        case 2: return d2;
        case 4: return d4;
        case 6: return d6;
        case 8: return d8;
        case 10: return d10;
        default: fail("UnsupportedDegree", "D_{2t} defined for 2t in {2,4,6,8,10}, got " + std::to_string(two_t));
    }
}

Poly vacuum_mode_word(const std::vector<int>& word) {
    long degree = 0;
    for (int j : word) degree -= j;
    if (degree != 0) fail("DegreeMismatch", "mode word has total degree " + std::to_string(degree));
    PBWVector v = PBWVector::vacuum();
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_mode(*it, v);
    return v.vacuum_coefficient();
}

} // namespace griess
