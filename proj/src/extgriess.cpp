#include "griess/extgriess.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "griess/errors.hpp"

namespace griess {

int epsilon(const Rational& h) {
    if (!h.is_half_integer()) fail("NonHalfInteger", "epsilon needs 2h integral, got h = " + h.str());
    if (h.is_integer()) return (h.to_long() % 2 == 0) ? 1 : -1;
    return 1;
}

bool ExtendedGriessAlgebra::is_even(const std::string& id) const {
    return std::find(even.begin(), even.end(), id) != even.end();
}

namespace {
std::pair<std::string, std::string> skey(std::string x, std::string y) {
    if (y < x) std::swap(x, y);
    return {std::move(x), std::move(y)};
}
} // namespace

LinComb ExtendedGriessAlgebra::product(const std::string& x, const std::string& y) const {
    auto it = products.find(skey(x, y));
    return it == products.end() ? LinComb{} : it->second;
}

Rational ExtendedGriessAlgebra::pairing(const std::string& x, const std::string& y) const {
    auto it = form.find(skey(x, y));
    return it == form.end() ? Rational(0) : it->second;
}

LinComb ExtendedGriessAlgebra::product_lin(const LinComb& x, const LinComb& y) const {
    LinComb out;
    for (const auto& [bx, cx] : x)
        for (const auto& [by, cy] : y)
            for (const auto& [bz, cz] : product(bx, by)) {
                out[bz] += cx * cy * cz;
                if (out[bz].is_zero()) out.erase(bz);
            }
    return out;
}

Rational ExtendedGriessAlgebra::pairing_lin(const LinComb& x, const LinComb& y) const {
    Rational out = 0;
    for (const auto& [bx, cx] : x)
        for (const auto& [by, cy] : y) out += cx * cy * pairing(bx, by);
    return out;
}

namespace {

LinComb parse_lincomb(const std::string& text) {
    /* "e", "(1/2)*e", "e + (1/2)*f - g" */
    LinComb out;
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    size_t pos = 0;
    Rational sign = 1;
    while (pos < s.size()) {
        if (s[pos] == '+') { sign = 1; ++pos; continue; }
        if (s[pos] == '-') { sign = -1; ++pos; continue; }
        Rational coef = 1;
        if (s[pos] == '(' || std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string num;
            if (s[pos] == '(') {
                size_t end = s.find(')', pos);
                if (end == std::string::npos) fail("ParseError", "bad linear combination '" + text + "'");
                num = s.substr(pos + 1, end - pos - 1);
                pos = end + 1;
            } else {
                while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                    num += s[pos++];
            }
            coef = Rational::parse(num);
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        std::string id;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) id += s[pos++];
        if (id.empty()) fail("ParseError", "missing basis id in '" + text + "'");
        out[id] += sign * coef;
        if (out[id].is_zero()) out.erase(id);
        sign = 1;
    }
    return out;
}

} // namespace

ExtendedGriessAlgebra ExtendedGriessAlgebra::parse(const std::string& text) {
    ExtendedGriessAlgebra alg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "EVEN") {
            std::string id;
            ls >> id;
            alg.even.push_back(id);
        } else if (tag == "ODD") {
            std::string id;
            ls >> id;
            alg.odd.push_back(id);
        } else if (tag == "PROD") {
            std::string x, y, arrow;
            ls >> x >> y >> arrow;
            if (arrow != "->") fail("ParseError", "PROD needs '->' in '" + line + "'");
            std::string rest;
            std::getline(ls, rest);
            alg.products[skey(x, y)] = parse_lincomb(rest);
        } else if (tag == "FORM") {
            std::string x, y, val;
            ls >> x >> y >> val;
            alg.form[skey(x, y)] = Rational::parse(val);
        } else if (tag == "TOPWEIGHT") {
            std::string val;
            ls >> val;
            alg.top_weight = Rational::parse(val);
        } else if (tag == "OMEGA") {
            std::string rest;
            std::getline(ls, rest);
            alg.omega = parse_lincomb(rest);
        } else {
            fail("ParseError", "unknown fixture tag '" + tag + "'");
        }
    }
    return alg;
}

AxiomReport check_axioms(const ExtendedGriessAlgebra& alg) {
    AxiomReport report;
    auto violate = [&report](const std::string& rule, const std::string& detail) {
        report.violations.push_back({rule, detail});
    };
    int eps = epsilon(alg.top_weight);

    std::vector<std::string> all = alg.even;
    all.insert(all.end(), alg.odd.begin(), alg.odd.end());

    /* The form pairs only like parities. */
    for (const auto& x : alg.even)
        for (const auto& u : alg.odd)
            if (!alg.pairing(x, u).is_zero()) violate("parity", "(" + x + "|" + u + ") != 0");

    /* omega acts by 2 on the even part and by h on the odd part. */
    for (const auto& x : all) {
        LinComb expected{{x, alg.is_even(x) ? Rational(2) : alg.top_weight}};
        LinComb got = alg.product_lin(alg.omega, LinComb{{x, Rational(1)}});
        if (got != expected) violate("omega-action", "omega * " + x);
    }

    /* Modified invariance (x u | y) = eps_h (x | u y) on all basis triples;
     * mismatched parities contribute trivial instances. */
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& u : alg.odd) {
                LinComb xu = alg.product_lin(LinComb{{x, 1}}, LinComb{{u, 1}});
                LinComb uy = alg.product_lin(LinComb{{u, 1}}, LinComb{{y, 1}});
                Rational lhs = alg.pairing_lin(xu, LinComb{{y, 1}});
                Rational rhs = Rational(eps) * alg.pairing_lin(LinComb{{x, 1}}, uy);
                if (!(lhs == rhs))
                    violate("invariance",
                            "(" + x + "*" + u + "|" + y + ") != eps*(" + x + "|" + u + "*" + y + ")");
            }

    /* Plain invariance on the even part: (x y | z) = (x | y z). */
    for (const auto& x : alg.even)
        for (const auto& y : alg.even)
            for (const auto& z : alg.even) {
                Rational lhs = alg.pairing_lin(alg.product_lin({{x, 1}}, {{y, 1}}), {{z, 1}});
                Rational rhs = alg.pairing_lin(LinComb{{x, 1}}, alg.product_lin({{y, 1}}, {{z, 1}}));
                if (!(lhs == rhs)) violate("even-invariance", "(" + x + "*" + y + "|" + z + ")");
            }

    return report;
}

RootAnalysis root_analysis(const Rational& h, const Rational& norm_a) {
    RootAnalysis out;
    out.top_weight = h;
    if (h == Rational(1, 2)) {
        /* Free fermion: 4(x|x) = 1 and c = 8(a|a) = 1/2, forcing (a|a) = 1/16. */
        out.x_norm = Rational(1, 4);
        out.central_charge = Rational(1, 2);
        out.label = "L(1/2,0)+L(1/2,1/2)";
        out.norm_consistent = (norm_a == Rational(1, 16));
        return out;
    }
    if (h == Rational(3, 2)) {
        if (!norm_a.is_positive()) fail("UnsupportedTopWeight", "h = 3/2 needs (a|a) > 0");
        /* 3(x|x) = 4(a|a); the subalgebra is the N=1 Virasoro SVOA of
         * central charge 8(a|a). */
        out.x_norm = Rational(4, 3) * norm_a;
        out.central_charge = Rational(8) * norm_a;
        out.label = "N=1 c=" + out.central_charge.str() + " Virasoro SVOA";
        return out;
    }
    if (h == Rational(5, 2)) {
        out.x_norm = 0; /* not fixed by the extended Griess data alone */
        out.central_charge = Rational(-13, 14);
        out.label = "L(-13/14,0)+L(-13/14,5/2)";
        out.hypothesis = "assumes x_(n)x in <a> for n >= 0 and 2a the conformal vector of <x>";
        return out;
    }
    fail("UnsupportedTopWeight", "root analysis covers h in {1/2, 3/2, 5/2}");
}

BracketCheckReport ns_bracket_check(const Rational& c_a, int grid) {
    if (c_a.is_zero()) fail("ZeroDenominator", "vanishing central charge");
    BracketCheckReport report;
    Rational norm_a = c_a / Rational(8);

    /* Even-odd bracket: the extended-Griess side gives
     * [2a_(m'), x_(n')] = (1/2)(m' - 2n') x_(m'+n'-1); on L(m) = 2a_(m+1),
     * G(r) = 2x_(r+1/2) the Neveu-Schwarz form reads (1/2)(m-2r) G(m+r). */
    for (int m = -grid; m <= grid; ++m) {
        for (int rr = -grid; rr < grid; ++rr) {
            Rational r = Rational(2 * rr + 1, 2);
            Rational mp(m + 1);
            Rational np = r + Rational(1, 2);
            Rational derived = Rational(1, 2) * (mp - Rational(2) * np); /* on x_(m+r+1/2...) */
            Rational normal = Rational(1, 2) * (Rational(m) - Rational(2) * r);
            report.entries.push_back(
                {"[L(" + std::to_string(m) + "),G(" + r.str() + ")]", derived == normal});
        }
    }

    /* Odd-odd anticommutator central term: derived 4 * (2/3) p(p-1) (a|a) at
     * p = r + 1/2 against the normal form (4r^2 - 1)/12 c_a. */
    for (int rr = -grid; rr < grid; ++rr) {
        Rational r = Rational(2 * rr + 1, 2);
        Rational p = r + Rational(1, 2);
        Rational derived = Rational(4) * Rational(2, 3) * p * (p - Rational(1)) * norm_a;
        Rational normal = (Rational(4) * r * r - Rational(1)) / Rational(12) * c_a;
        report.entries.push_back({"[G(" + r.str() + "),G(" + (-r).str() + ")]+ central", derived == normal});
    }
    return report;
}

MinimalSeriesEntry minimal_series(unsigned p, unsigned q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        fail("NotCoprime", "minimal series needs coprime p, q >= 2");
    MinimalSeriesEntry e;
    e.p = p;
    e.q = q;
    long diff = static_cast<long>(p) - static_cast<long>(q);
    e.c = Rational(1) - Rational(6 * diff * diff, static_cast<long>(p) * static_cast<long>(q));
    for (unsigned r = 1; r < p; ++r) {
        for (unsigned s = 1; s < q; ++s) {
            long rq_sp = static_cast<long>(r) * q - static_cast<long>(s) * p;
            e.weights[{r, s}] = Rational(rq_sp * rq_sp - diff * diff, 4L * p * q);
        }
    }
    return e;
}

std::vector<Rational> MinimalSeriesEntry::distinct_weights() {
    std::vector<Rational> out;
    for (const auto& [rs, w] : weights) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace griess
