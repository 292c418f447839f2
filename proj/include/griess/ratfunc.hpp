#pragma once

#include <string>

#include "griess/poly.hpp"

namespace griess {

/* Rational function num/den over Q[c,d,h] in canonical form:
 * gcd(num, den) = 1, den primitive with positive leading coefficient (grlex). */
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {} // NOLINT(google-explicit-constructor)
    RatFunc(long n) : num_(n), den_(1) {}        // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_ == Poly(1); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) fail("ZeroDenominator", "division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { RatFunc r = *this; r.num_ = -r.num_; return r; }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    /* Canonical form makes structural equality valid. */
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rational eval(const Rational& c, const Rational& d, const Rational& h) const {
        Rational dv = den_.eval(c, d, h);
        if (dv.is_zero()) fail("ZeroDenominator", "denominator vanishes at evaluation point");
        return num_.eval(c, d, h) / dv;
    }

    std::string str() const {
        if (is_poly()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) fail("ZeroDenominator", "rational function with zero denominator");
        if (num_.is_zero()) { den_ = Poly(1); return; }
        if (auto q = num_.divide_exact(den_)) {
            num_ = *q;
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
        Rational ct = den_.content();
        num_ = (Rational(1) / ct) * num_;
        den_ = (Rational(1) / ct) * den_;
    }

    Poly num_, den_;
};

} // namespace griess
