#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "griess/rational.hpp"

namespace griess {

enum class Var : unsigned { c = 0, d = 1, h = 2 };

inline const char* var_name(Var v) { return v == Var::c ? "c" : v == Var::d ? "d" : "h"; }

/* Exponent triple (e_c, e_d, e_h). */
struct Monomial {
    std::array<unsigned, 3> e{0, 0, 0};

    unsigned degree() const { return e[0] + e[1] + e[2]; }
    unsigned operator[](Var v) const { return e[static_cast<unsigned>(v)]; }
    bool is_one() const { return degree() == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
    }
    /* Componentwise; caller guarantees divisibility. */
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2]}};
    }
    bool divides(const Monomial& m) const {
        return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/* Graded lexicographic with c > d > h, largest first. */
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.e > b.e;
    }
};

/* Sparse polynomial over Q in {c, d, h}, canonical: no zero terms stored. */
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() = default;
    Poly(long n) { // NOLINT(google-explicit-constructor)
        if (n != 0) terms_[Monomial{}] = Rational(n);
    }
    Poly(const Rational& r) { // NOLINT(google-explicit-constructor)
        if (!r.is_zero()) terms_[Monomial{}] = r;
    }
    static Poly variable(Var v) {
        Monomial m;
        m.e[static_cast<unsigned>(v)] = 1;
        Poly p;
        p.terms_[m] = 1;
        return p;
    }
    static Poly term(const Rational& coef, const Monomial& m) {
        Poly p;
        if (!coef.is_zero()) p.terms_[m] = coef;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    const TermMap& terms() const { return terms_; }
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
    unsigned degree_in(Var v) const {
        unsigned d = 0;
        for (const auto& [m, _] : terms_) d = std::max(d, m[v]);
        return d;
    }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& coef) {
        if (coef.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, coef);
        if (!fresh) {
            it->second += coef;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& p) {
        Poly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : p.terms_) r.terms_[m] = s * c;
        return r;
    }
    Poly& operator+=(const Poly& o) { for (const auto& [m, c] : o.terms_) add_term(m, c); return *this; }
    Poly& operator-=(const Poly& o) { for (const auto& [m, c] : o.terms_) add_term(m, -c); return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned e) const {
        Poly r = 1, base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    Rational eval(const Rational& c, const Rational& d, const Rational& h) const {
        Rational r = 0;
        for (const auto& [m, coef] : terms_)
            r += coef * c.pow(m.e[0]) * d.pow(m.e[1]) * h.pow(m.e[2]);
        return r;
    }

    /* Substitute polynomials for each variable. */
    Poly subst(const Poly& c, const Poly& d, const Poly& h) const {
        Poly r;
        for (const auto& [m, coef] : terms_)
            r += Rational(coef) * (c.pow(m.e[0]) * d.pow(m.e[1]) * h.pow(m.e[2]));
        return r;
    }

    /* Exact quotient, or nullopt when divisor does not divide exactly. */
    std::optional<Poly> divide_exact(const Poly& divisor) const;

    /* gcd of the rational coefficients, signed by the leading coefficient. */
    Rational content() const {
        Rational g = 0;
        for (const auto& [m, c] : terms_) g = Rational::gcd(g, c);
        if (!terms_.empty() && leading_coefficient().is_negative()) g = -g;
        return g;
    }

    std::string str() const;
    static Poly parse(const std::string& text);

private:
    TermMap terms_;
};

/* Polynomial gcd (primitive PRS), result primitive with positive leading coefficient. */
Poly poly_gcd(const Poly& a, const Poly& b);

inline Poly var_c() { return Poly::variable(Var::c); }
inline Poly var_d() { return Poly::variable(Var::d); }
inline Poly var_h() { return Poly::variable(Var::h); }

} // namespace griess
