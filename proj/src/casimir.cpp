#include "griess/casimir.hpp"

#include "griess/data.hpp"

namespace griess {

Poly kappa_pairing(const Partition& p, unsigned m) {
    if (p.degree() != m) fail("DegreeMismatch", p.str() + " is not a partition of " + std::to_string(m));
    /* Peel parts left to right; running weight m_i drops by each part. */
    Poly prod(1);
    unsigned rest = m;
    Poly h = var_h();
    for (unsigned n : p.parts) {
        prod *= Rational(static_cast<long>(n) - 1) * h + Poly(static_cast<long>(rest) - static_cast<long>(n));
        rest -= n;
        if (rest == 1) return Poly(0); /* kappa_1 = 0 */
    }
    return prod * var_d();
}

CasimirExpansion casimir_expansion(unsigned m, unsigned cap) {
    CasimirExpansion row;
    row.m = m;
    if (m == 0) {
        row.denominator = Poly(1);
        row.coeffs[Partition{}] = var_d();
        return row;
    }
    if (m == 1) {
        row.denominator = Poly(1);
        return row;
    }
    if (m > cap) fail("UnsupportedDegree", "casimir degree " + std::to_string(m) + " exceeds cap");

    auto basis = partitions(m);
    PolyMatrix gram = gram_matrix(m, cap);
    PolyVector rhs;
    rhs.reserve(basis.size());
    for (const auto& p : basis) rhs.push_back(kappa_pairing(p, m));

    RatFuncVector x = linsolve(gram, rhs);
    row.denominator = d_polynomial(2 * (m / 2));
    for (size_t i = 0; i < basis.size(); ++i) {
        RatFunc cleared = x[i] * RatFunc(row.denominator);
        if (!cleared.is_poly())
            fail("SingularGram", "clearing D did not yield a polynomial for " + basis[i].str());
        row.coeffs[basis[i]] = cleared.num();
    }
    return row;
}

std::map<Partition, Rational> casimir_expansion_at(const Rational& c0, const Rational& d0,
                                                   const Rational& h0, unsigned m) {
    auto basis = partitions(m);
    PolyMatrix gram = gram_matrix(m);
    const size_t n = basis.size();
    RatFuncMatrix a(n, RatFuncVector(n));
    RatFuncVector b(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = RatFunc(Poly(gram[i][j].eval(c0, d0, h0)));
        b[i] = RatFunc(Poly(kappa_pairing(basis[i], m).eval(c0, d0, h0)));
    }
    RatFuncVector x;
    try {
        x = linsolve(a, b);
    } catch (const Error& e) {
        if (e.code() == "SingularMatrix")
            fail("SingularGram", "Gram matrix is singular at c = " + c0.str());
        throw;
    }
    std::map<Partition, Rational> out;
    for (size_t i = 0; i < n; ++i) out[basis[i]] = x[i].num().constant_term();
    return out;
}

VerifyReport verify_appendix_a(unsigned max_m) {
    VerifyReport report;
    const auto& table = appendix_a_table();
    for (unsigned m = 2; m <= max_m; ++m) {
        CasimirExpansion derived = casimir_expansion(m);
        auto it = table.find(m);
        if (it == table.end()) fail("DataFileMissing", "appendix_a has no rows for m = " + std::to_string(m));
        for (const auto& [p, expected] : it->second) {
            VerifyEntry e{m, p, false, ""};
            auto dit = derived.coeffs.find(p);
            if (dit == derived.coeffs.end()) {
                e.detail = "derived row misses " + p.str();
            } else if (dit->second == expected) {
                e.pass = true;
            } else {
                e.detail = "derived " + dit->second.str() + " != table " + expected.str();
            }
            report.entries.push_back(std::move(e));
        }
        for (const auto& [p, _] : derived.coeffs) {
            if (!it->second.count(p))
                report.entries.push_back({m, p, false, "table misses partition " + p.str()});
        }
    }
    return report;
}

} // namespace griess
