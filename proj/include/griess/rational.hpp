#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "griess/errors.hpp"

namespace griess {

/* Arbitrary-precision rational, always in canonical form:
 * gcd(|num|, den) = 1, den > 0, zero is 0/1. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) fail("ZeroDenominator", "rational with zero denominator");
        v_.canonicalize();
    }

    /* Accepts "p", "-p", "p/q". */
    static Rational parse(const std::string& s) {
        try {
            mpq_class v(s);
            if (v.get_den() == 0) fail("ZeroDenominator", s);
            v.canonicalize();
            return Rational(std::move(v));
        } catch (const std::invalid_argument&) {
            fail("ParseError", "bad rational '" + s + "'");
        }
    }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_positive() const { return v_ > 0; }
    bool is_negative() const { return v_ < 0; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail("ZeroDenominator", "division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational pow(unsigned e) const {
        mpq_class r(1), base(v_);
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return Rational(std::move(r));
    }

    /* gcd over Q: gcd(a/b, c/d) = gcd(ad, cb)/(bd); gcd(x, 0) = |x|. */
    static Rational gcd(const Rational& a, const Rational& b) {
        if (a.is_zero()) return b.abs();
        if (b.is_zero()) return a.abs();
        mpz_class n, d;
        mpz_gcd(n.get_mpz_t(), mpz_class(a.v_.get_num() * b.v_.get_den()).get_mpz_t(),
                mpz_class(b.v_.get_num() * a.v_.get_den()).get_mpz_t());
        d = a.v_.get_den() * b.v_.get_den();
        mpq_class g(n, d);
        g.canonicalize();
        return Rational(std::move(g));
    }

    /* "p" if integral, else "p/q". */
    std::string str() const { return v_.get_str(); }

    /* Whether 2*this is an integer. */
    bool is_half_integer() const { return v_.get_den() == 1 || v_.get_den() == 2; }

    long to_long() const {
        if (!is_integer()) fail("ParseError", "expected integer, got " + str());
        return static_cast<long>(v_.get_num().get_si());
    }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational binomial(long n, unsigned k) {
    /* Generalized binomial: n may be any integer. */
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= Rational(n - static_cast<long>(i), static_cast<long>(i) + 1);
    return r;
}

} // namespace griess
