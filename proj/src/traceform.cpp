#include "griess/traceform.hpp"

#include <algorithm>

#include "griess/data.hpp"

namespace griess {

std::vector<ZhuTerm> zhu_expand(unsigned k) {
    if (k < 1 || k > 5) fail("UnsupportedDegree", "zhu_expand degree must be 1..5");
    std::vector<ZhuTerm> out;
    std::vector<int> idx(k - 1, -1);
    while (true) {
        ZhuTerm t;
        t.indices = idx;
        int sum = 0;
        Rational coef = 1;
        for (int i : idx) {
            sum += i;
            coef *= binomial(2, static_cast<unsigned>(i + 1));
        }
        t.weight = k + 1 - sum;
        t.sign = (t.weight % 2 == 0) ? 1 : -1;
        t.coefficient = coef;
        out.push_back(std::move(t));

        size_t j = 0;
        for (; j < idx.size(); ++j) {
            if (idx[j] < 1) {
                ++idx[j];
                break;
            }
            idx[j] = -1;
        }
        if (j == idx.size()) break;
    }
    return out;
}

std::vector<PatternClass> pattern_classes(unsigned degree) {
    std::vector<PatternClass> out;
    for (const auto& sc : appendix_b_table().sym) {
        if (sc.degree != degree) continue;
        PatternClass pc;
        pc.degree = degree;
        pc.id = sc.id;
        for (const auto& m : sc.members) pc.members.push_back(parse_product(m));
        out.push_back(std::move(pc));
    }
    if (out.empty()) fail("UnsupportedDegree", "no pattern classes for degree " + std::to_string(degree));
    return out;
}

TraceFormulaTable derive_trace_formula(unsigned k) {
    if (k < 1 || k > 3) fail("UnsupportedDegree", "derivation supports degrees 1..3");
    std::vector<int> ids(k);
    for (unsigned i = 0; i < k; ++i) ids[i] = static_cast<int>(i);

    /* Everything over the common denominator D_2k(c). */
    Poly d2k = d_polynomial(2 * k);
    InvComb total;
    for (const auto& term : zhu_expand(k)) {
        unsigned m = term.weight;
        CasimirExpansion row = casimir_expansion(m);
        Poly mult = *d2k.divide_exact(row.denominator);
        for (const auto& [part, acoef] : row.coeffs) {
            InvComb pairing = zhu_kappa_pairing(ids, term.indices, part);
            Poly scale = Poly(term.coefficient * Rational(term.sign)) * acoef * mult;
            comb_add_scaled(total, pairing, scale);
        }
    }

    TraceFormulaTable table;
    table.degree = k;
    table.denominator = d2k;
    table.patterns = pattern_classes(k);
    for (const auto& pc : table.patterns) {
        std::optional<Poly> common;
        for (const auto& member : pc.members) {
            auto it = total.find(member);
            Poly coef = it == total.end() ? Poly(0) : it->second;
            if (!common) {
                common = coef;
            } else if (!(*common == coef)) {
                fail("IrreducibleTerm", "asymmetric coefficients within pattern class " + pc.id +
                                            " of degree " + std::to_string(k));
            }
            if (it != total.end()) total.erase(it);
        }
        table.coeffs[pc.id] = *common;
    }
    if (!total.empty())
        fail("IrreducibleTerm", "derivation produced a monomial outside the pattern list: " +
                                    product_str(total.begin()->first));
    return table;
}

TraceFormulaTable formula_table(unsigned k) {
    if (k < 1 || k > 5) fail("UnsupportedDegree", "formula_table degree must be 1..5");
    if (k <= 3) return derive_trace_formula(k);
    TraceFormulaTable table;
    table.degree = k;
    table.denominator = d_polynomial(2 * k);
    table.patterns = pattern_classes(k);
    const auto& fdata = appendix_b_table().f;
    auto it = fdata.find(k);
    if (it == fdata.end()) fail("DataFileMissing", "no F rows for degree " + std::to_string(k));
    for (const auto& pc : table.patterns) {
        auto fit = it->second.find(pc.id);
        if (fit == it->second.end()) fail("DataFileMissing", "missing F " + std::to_string(k) + " " + pc.id);
        table.coeffs[pc.id] = fit->second;
    }
    return table;
}

Rational FactorValues::value_of(const Invariant& inv) const {
    const std::optional<Rational>* slot = nullptr;
    switch (inv.kind) {
        case Invariant::Kind::OmegaPair: slot = &omega_pair; break;
        case Invariant::Kind::Bilinear: slot = &bilinear; break;
        case Invariant::Kind::Trilinear: slot = &trilinear; break;
        case Invariant::Kind::QuadPair: slot = &quad_pair; break;
        case Invariant::Kind::QuinPair: slot = &quin_pair; break;
        case Invariant::Kind::Quinary: slot = &quinary; break;
    }
    if (!slot->has_value()) fail("MissingInvariant", "no value bound for pattern " + inv.str());
    return **slot;
}

FactorValues FactorValues::virasoro_vector(const Rational& kappa) {
    FactorValues v;
    v.omega_pair = kappa;          /* (e|w) = (e|e) */
    v.bilinear = kappa;            /* (e|e) */
    v.trilinear = Rational(2) * kappa;  /* (ee|e) = (2e|e) */
    v.quad_pair = Rational(4) * kappa;  /* (ee|ee) = (2e|2e) */
    v.quin_pair = Rational(8) * kappa;  /* (ee|e|ee) = (2e|e(2e)) */
    v.quinary = Rational(12) * kappa;   /* e_(3)e_(2)e_(1)e_(0)e = 6 c_e = 12 (e|e) */
    return v;
}

Rational evaluate_trace(const TraceFormulaTable& table, const FactorValues& values,
                        const Rational& c, const Rational& d, const Rational& h) {
    Rational den = table.denominator.eval(c, d, h);
    if (den.is_zero()) fail("ZeroDenominator", "D_" + std::to_string(2 * table.degree) + " vanishes at c = " + c.str());
    Rational num = 0;
    for (const auto& pc : table.patterns) {
        const Poly& coef = table.coeffs.at(pc.id);
        if (coef.is_zero()) continue;
        Rational classval = 0;
        for (const auto& member : pc.members) {
            Rational prod = 1;
            for (const auto& factor : member) prod *= values.value_of(factor);
            classval += prod;
        }
        num += coef.eval(c, d, h) * classval;
    }
    return num / den;
}

std::map<unsigned, Poly> specialize_virasoro(unsigned t) {
    if (t < 1 || t > 5) fail("UnsupportedDegree", "specialization degree must be 1..5");
    TraceFormulaTable table = formula_table(t);
    /* kappa := (e|e); each factor contributes (multiplier) * kappa. */
    auto multiplier = [](const Invariant& inv) -> Rational {
        switch (inv.kind) {
            case Invariant::Kind::OmegaPair: return 1;
            case Invariant::Kind::Bilinear: return 1;
            case Invariant::Kind::Trilinear: return 2;
            case Invariant::Kind::QuadPair: return 4;
            case Invariant::Kind::QuinPair: return 8;
            case Invariant::Kind::Quinary: return 12;
        }
        return 0;
    };
    std::map<unsigned, Poly> rows;
    for (const auto& pc : table.patterns) {
        const Poly& coef = table.coeffs.at(pc.id);
        for (const auto& member : pc.members) {
            Rational mult = 1;
            for (const auto& factor : member) mult *= multiplier(factor);
            unsigned j = static_cast<unsigned>(member.size());
            auto [it, fresh] = rows.emplace(j, Poly(0));
            it->second += Poly(mult) * coef;
        }
    }
    for (auto it = rows.begin(); it != rows.end();) {
        if (it->second.is_zero()) it = rows.erase(it);
        else ++it;
    }
    return rows;
}

namespace {

/* Substitute argument 0 := omega into one invariant factor.
 * Result: scalar polynomial times an optional remaining factor.  Quinary
 * substitution goes through the rewriting engine. */
struct OmegaSubstituted {
    Poly scalar;
    std::vector<Invariant> factors;
    InvComb engine_terms; /* when the engine was needed (quinary) */
    bool used_engine = false;
};

OmegaSubstituted substitute_omega(const Invariant& inv) {
    OmegaSubstituted out;
    out.scalar = Poly(1);
    using Kind = Invariant::Kind;
    const auto& a = inv.args;
    auto count0 = std::count(a.begin(), a.end(), 0);
    if (count0 == 0) {
        out.factors.push_back(inv);
        return out;
    }
    if (count0 != 1) fail("IrreducibleTerm", "argument 0 appears twice in " + inv.str());
    switch (inv.kind) {
        case Kind::OmegaPair:
            out.scalar = Rational(1, 2) * var_c(); /* (w|w) = c/2 */
            return out;
        case Kind::Bilinear:
            out.factors.push_back(Invariant::omega_pair(a[0] == 0 ? a[1] : a[0]));
            return out;
        case Kind::Trilinear: {
            std::vector<int> rest;
            for (int x : a)
                if (x != 0) rest.push_back(x);
            out.scalar = Poly(2); /* (w x|y) = 2 (x|y) */
            out.factors.push_back(Invariant::bilinear(rest[0], rest[1]));
            return out;
        }
        case Kind::QuadPair: {
            /* (0x|yz) -> 2 (x|y|z): x is the pair partner of the omega slot. */
            int x;
            std::vector<int> rest;
            if (a[0] == 0 || a[1] == 0) {
                x = (a[0] == 0) ? a[1] : a[0];
                rest = {a[2], a[3]};
            } else {
                x = (a[2] == 0) ? a[3] : a[2];
                rest = {a[0], a[1]};
            }
            out.scalar = Poly(2);
            out.factors.push_back(Invariant::trilinear(x, rest[0], rest[1]));
            return out;
        }
        case Kind::QuinPair: {
            /* args {p,q, w, r,s}: (pq|w|rs) */
            out.scalar = Poly(2);
            if (a[2] == 0) {
                /* middle: (xy|w|zt) -> 2 (xy|zt) */
                out.factors.push_back(Invariant::quad_pair(a[0], a[1], a[3], a[4]));
            } else if (a[0] == 0 || a[1] == 0) {
                int x = (a[0] == 0) ? a[1] : a[0];
                out.factors.push_back(Invariant::quad_pair(x, a[2], a[3], a[4]));
            } else {
                int x = (a[3] == 0) ? a[4] : a[3];
                out.factors.push_back(Invariant::quad_pair(x, a[2], a[0], a[1]));
            }
            return out;
        }
        case Kind::Quinary: {
            /* Replace slot p by the Virasoro letter and reduce. */
            Word w;
            for (size_t i = 0; i < 5; ++i) {
                int mode = 3 - static_cast<int>(i);
                if (a[i] == 0) {
                    w.push_back(Letter::vir(mode - 1)); /* w_(n) = L(n-1) */
                } else {
                    w.push_back(Letter::gr(Elem::leaf_of(a[i]), mode));
                }
            }
            out.used_engine = true;
            out.engine_terms = reduce_word(w);
            return out;
        }
    }
    fail("IrreducibleTerm", "unhandled substitution " + inv.str());
}

InvProduct relabel_down(const InvProduct& p) {
    InvProduct q;
    for (const auto& f : p) {
        Invariant g = f;
        for (int& x : g.args) {
            if (x == 0) fail("IrreducibleTerm", "argument 0 survived substitution");
            --x;
        }
        q.push_back(g);
    }
    return product_of(std::move(q));
}

} // namespace

ReductionReport reduction_check(unsigned k) {
    if (k < 2 || k > 5) fail("UnsupportedDegree", "reduction_check degree must be 2..5");
    TraceFormulaTable high = formula_table(k);
    TraceFormulaTable low = formula_table(k - 1);

    /* LHS: substitute a^0 = w into degree k; identity to verify is
     * sum_P F_P subst(P) = h * (D_2k / D_2(k-1)) * sum_Q F_Q Q. */
    InvComb lhs;
    for (const auto& pc : high.patterns) {
        const Poly& coef = high.coeffs.at(pc.id);
        if (coef.is_zero()) continue;
        for (const auto& member : pc.members) {
            Poly scalar(1);
            std::vector<Invariant> fixed;
            InvComb engine;
            bool used_engine = false;
            for (const auto& factor : member) {
                OmegaSubstituted sub = substitute_omega(factor);
                scalar *= sub.scalar;
                for (auto& f : sub.factors) fixed.push_back(f);
                if (sub.used_engine) {
                    if (used_engine) fail("IrreducibleTerm", "two engine factors in one product");
                    used_engine = true;
                    engine = std::move(sub.engine_terms);
                }
            }
            if (!used_engine) {
                comb_add(lhs, relabel_down(product_of(std::move(fixed))), coef * scalar);
            } else {
                for (const auto& [p, ecoef] : engine) {
                    InvProduct full = fixed;
                    full.insert(full.end(), p.begin(), p.end());
                    comb_add(lhs, relabel_down(product_of(std::move(full))), coef * scalar * ecoef);
                }
            }
        }
    }

    Poly mult = *high.denominator.divide_exact(low.denominator);
    InvComb rhs;
    for (const auto& pc : low.patterns) {
        const Poly& coef = low.coeffs.at(pc.id);
        for (const auto& member : pc.members) comb_add(rhs, member, var_h() * mult * coef);
    }

    ReductionReport report;
    report.k = k;
    report.pass = (lhs == rhs);
    if (!report.pass) {
        for (const auto& [p, coef] : lhs) {
            auto it = rhs.find(p);
            if (it == rhs.end() || !(it->second == coef)) {
                report.detail = "first mismatch at " + product_str(p);
                break;
            }
        }
        if (report.detail.empty()) report.detail = "rhs has extra monomials";
    }
    return report;
}

bool omega_saturation(unsigned k) {
    TraceFormulaTable table = formula_table(k);
    /* All-omega values, each a polynomial in c. */
    auto value = [](const Invariant& inv) -> Poly {
        Poly c = var_c();
        switch (inv.kind) {
            case Invariant::Kind::OmegaPair: return Rational(1, 2) * c;
            case Invariant::Kind::Bilinear: return Rational(1, 2) * c;
            case Invariant::Kind::Trilinear: return c;
            case Invariant::Kind::QuadPair: return Rational(2) * c;
            case Invariant::Kind::QuinPair: return Rational(4) * c;
            case Invariant::Kind::Quinary: return Rational(6) * c;
        }
        return Poly(0);
    };
    Poly num(0);
    for (const auto& pc : table.patterns) {
        const Poly& coef = table.coeffs.at(pc.id);
        if (coef.is_zero()) continue;
        for (const auto& member : pc.members) {
            Poly prod(1);
            for (const auto& factor : member) prod *= value(factor);
            num += coef * prod;
        }
    }
    Poly expected = var_h().pow(k) * var_d() * table.denominator;
    return num == expected;
}

} // namespace griess
