#include "griess/poly.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace griess {

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) fail("ZeroDenominator", "exact division by zero polynomial");
    Poly rem = *this, quot;
    const Monomial& dm = divisor.leading_monomial();
    const Rational& dc = divisor.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        if (!dm.divides(rm)) return std::nullopt;
        Rational q = rem.leading_coefficient() / dc;
        Monomial qm = rm / dm;
        quot.add_term(qm, q);
        rem -= Poly::term(q, qm) * divisor;
    }
    return quot;
}

namespace {

/* View of p as a univariate polynomial in v with Poly coefficients. */
std::map<unsigned, Poly> coeffs_in(const Poly& p, Var v) {
    std::map<unsigned, Poly> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        unsigned e = m[v];
        rest.e[static_cast<unsigned>(v)] = 0;
        out[e].add_term(rest, c);
    }
    return out;
}

/* gcd of all Poly coefficients of p viewed in v (the content), recursing on variables. */
Poly content_in(const Poly& p, Var v) {
    Poly g;
    for (const auto& [e, coef] : coeffs_in(p, v)) g = poly_gcd(g, coef);
    return g;
}

/* Pseudo-remainder of a by b in variable v. */
Poly pseudo_rem(Poly a, const Poly& b, Var v) {
    auto bc = coeffs_in(b, v);
    unsigned db = bc.rbegin()->first;
    const Poly& lb = bc.rbegin()->second;
    while (!a.is_zero()) {
        auto ac = coeffs_in(a, v);
        unsigned da = ac.rbegin()->first;
        if (da < db) break;
        const Poly la = ac.rbegin()->second;
        Monomial shift;
        shift.e[static_cast<unsigned>(v)] = da - db;
        a = lb * a - Poly::term(Rational(1), shift) * la * b;
    }
    return a;
}

Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Rational ct = p.content();
    return (Rational(1) / ct) * p;
}

} // namespace

namespace {

/* Monic Euclid for polynomials in a single shared variable. */
Poly gcd_univariate(Poly a, Poly b, Var v) {
    while (!b.is_zero()) {
        /* a mod b by leading-term cancellation. */
        Poly r = a;
        unsigned db = b.degree_in(v);
        const Poly lb = coeffs_in(b, v).rbegin()->second;
        while (!r.is_zero() && r.degree_in(v) >= db) {
            auto rc = coeffs_in(r, v);
            unsigned dr = rc.rbegin()->first;
            Rational lr = rc.rbegin()->second.constant_term();
            Rational lbr = lb.constant_term();
            Monomial shift;
            shift.e[static_cast<unsigned>(v)] = dr - db;
            r -= Poly::term(lr / lbr, shift) * b;
        }
        a = std::move(b);
        b = std::move(r);
    }
    return make_primitive(a);
}

} // namespace

namespace {

/* The unique variable occurring in p, when there is exactly one. */
std::optional<Var> single_variable(const Poly& p) {
    std::optional<Var> found;
    for (Var v : {Var::c, Var::d, Var::h}) {
        if (p.degree_in(v) > 0) {
            if (found) return std::nullopt;
            found = v;
        }
    }
    return found;
}

/* gcd of the coefficients of p grouped by monomials in the variables other
 * than v; each group coefficient is univariate in v. */
Poly grouped_content(const Poly& p, Var v) {
    std::map<Monomial, Poly, GrlexGreater> groups;
    for (const auto& [m, coef] : p.terms()) {
        Monomial mv, rest = m;
        mv.e[static_cast<unsigned>(v)] = m[v];
        rest.e[static_cast<unsigned>(v)] = 0;
        groups[rest].add_term(mv, coef);
    }
    Poly g;
    for (const auto& [rest, q] : groups) g = poly_gcd(g, q);
    return g;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);

    /* A univariate side reduces the other to its grouped content. */
    if (auto va = single_variable(a)) {
        if (single_variable(b) == va) return gcd_univariate(a, b, *va);
        return poly_gcd(a, grouped_content(b, *va));
    }
    if (single_variable(b)) return poly_gcd(b, a);

    /* Main variable: first of c, d, h that appears in either. */
    Var v = Var::c;
    for (Var cand : {Var::c, Var::d, Var::h}) {
        if (a.degree_in(cand) > 0 || b.degree_in(cand) > 0) {
            v = cand;
            break;
        }
    }
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
        /* One side is free of the main variable: gcd divides its content. */
        const Poly& flat = a.degree_in(v) == 0 ? a : b;
        const Poly& other = a.degree_in(v) == 0 ? b : a;
        return poly_gcd(flat, content_in(other, v));
    }

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly cg = poly_gcd(ca, cb);
    Poly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = pseudo_rem(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = Poly();
        } else {
            pb = *r.divide_exact(content_in(r, v));
        }
    }
    return make_primitive(cg * pa);
}

/* ---------- printing ---------- */

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, coef] : terms_) {
        Rational a = coef;
        if (first) {
            if (a.is_negative()) { out += "-"; a = -a; }
        } else {
            out += a.is_negative() ? "-" : "+";
            if (a.is_negative()) a = -a;
        }
        first = false;

        std::string vars;
        for (Var v : {Var::c, Var::d, Var::h}) {
            unsigned e = m[v];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_name(v);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += a.is_integer() ? a.str() : "(" + a.str() + ")";
        } else {
            if (!(a == Rational(1))) {
                out += a.is_integer() ? a.str() : "(" + a.str() + ")";
                out += "*";
            }
            out += vars;
        }
    }
    return out;
}

/* ---------- parsing ----------
 * expr   := ['-'|'+'] product (('+'|'-') product)*
 * product:= factor ('*' factor)*
 * factor := base ['^' nat]
 * base   := nat ['/' nat] | 'c' | 'd' | 'h' | '(' expr ')'
 */
namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    bool eat(char ch) {
        if (peek() == ch) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void bad(const std::string& why) { fail("ParseError", why + " at offset " + std::to_string(pos) + " in '" + s + "'"); }

    Poly parse_expr() {
        Poly r;
        bool neg = false;
        if (eat('-')) neg = true; else eat('+');
        r = parse_product();
        if (neg) r = -r;
        while (true) {
            char c = peek();
            if (c == '+') { ++pos; r += parse_product(); }
            else if (c == '-') { ++pos; r -= parse_product(); }
            else break;
        }
        return r;
    }

    Poly parse_product() {
        Poly r = parse_factor();
        while (eat('*')) r *= parse_factor();
        return r;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (eat('^')) {
            unsigned e = parse_nat();
            base = base.pow(e);
        }
        return base;
    }

    unsigned parse_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) bad("expected number");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
        return static_cast<unsigned>(v);
    }

    Poly parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Poly inner = parse_expr();
            if (!eat(')')) bad("expected ')'");
            return inner;
        }
        if (c == 'c') { ++pos; return var_c(); }
        if (c == 'd') { ++pos; return var_d(); }
        if (c == 'h') { ++pos; return var_h(); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = std::to_string(parse_nat());
            if (eat('/')) {
                std::string den = std::to_string(parse_nat());
                return Poly(Rational::parse(num + "/" + den));
            }
            return Poly(Rational::parse(num));
        }
        bad("unexpected character");
    }
};

} // namespace

Poly Poly::parse(const std::string& text) {
    Parser p(text);
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.bad("trailing input");
    return r;
}

} // namespace griess
