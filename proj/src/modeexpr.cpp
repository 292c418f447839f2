#include "griess/modeexpr.hpp"

#include <algorithm>
#include <map>

namespace griess {

std::string Letter::str() const {
    switch (kind) {
        case Kind::Vir: return "L(" + std::to_string(n) + ")";
        case Kind::Gr: return (frozen ? "~" : "") + a.str() + "_(" + std::to_string(n) + ")";
        case Kind::Zr: return "Z[" + a.str() + "," + b.str() + "]_(" + std::to_string(n) + ")";
    }
    return "?";
}

std::string word_str(const Word& w) {
    std::string s;
    for (const auto& l : w) s += l.str() + " ";
    return s + "|0>";
}

namespace {

bool letter_less(const Letter& x, const Letter& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.n != y.n) return x.n < y.n;
    if (x.frozen != y.frozen) return x.frozen < y.frozen;
    if (x.a < y.a || y.a < x.a) return x.a < y.a;
    return x.b < y.b;
}

struct WordLess {
    bool operator()(const Word& u, const Word& v) const {
        return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(), letter_less);
    }
};

int suffix_weight(const Word& w, size_t from) {
    int s = 0;
    for (size_t i = from; i < w.size(); ++i) s += w[i].weight_shift();
    return s;
}

Rational binom(int n, unsigned k) { return binomial(n, k); }

struct Engine {
    std::map<Word, InvComb, WordLess> memo;

    InvComb eval(const Word& w) {
        auto hit = memo.find(w);
        if (hit != memo.end()) return hit->second;
        InvComb r = eval_uncached(w);
        memo.emplace(w, r);
        return r;
    }

    /* contribution  coef * factor * eval(word) */
    void accum(InvComb& out, const Word& w, const Poly& coef) {
        if (coef.is_zero()) return;
        comb_add_scaled(out, eval(w), coef);
    }
    void accum_factor(InvComb& out, const Word& w, const Poly& coef, const Invariant& inv) {
        if (coef.is_zero()) return;
        comb_add_scaled(out, comb_mul_factor(eval(w), inv), coef);
    }

    static Word splice(const Word& w, size_t p, std::initializer_list<Letter> repl) {
        Word r(w.begin(), w.begin() + static_cast<long>(p));
        r.insert(r.end(), repl);
        r.insert(r.end(), w.begin() + static_cast<long>(p) + 2, w.end());
        return r;
    }

    /* Whether a carrier with no first-class letter annihilates: either on
     * the vacuum directly or by weight (V_{<0} = 0 and V_1 = 0). */
    bool carrier_dies(const Word& w, size_t p, int cw, int q) {
        if (at_vacuum(w, p + 2) && q >= 0) return true; /* x_(q)|0> = 0 */
        int res = suffix_weight(w, p + 2) + cw - q - 1;
        return res < 0 || res == 1;
    }

    /* Whether suffix of w starting at `from` is empty (the vacuum). */
    static bool at_vacuum(const Word& w, size_t from) { return from >= w.size(); }

    /* Disposition of a weight-3 composite carrier (no first-class letter)
     * placed at mode index q in front of the suffix. Unsupported placements
     * freeze the active letter instead of expanding the bracket. */
    enum class Fate { Dies, StateAtVacuum, Unsupported };
    Fate composite_fate(const Word& w, size_t p, int q) {
        if (at_vacuum(w, p + 2)) {
            if (q >= 0) return Fate::Dies;
            if (q == -1) return Fate::StateAtVacuum;
            return Fate::Unsupported;
        }
        int res = suffix_weight(w, p + 2) + 3 - q - 1;
        if (res < 0 || res == 1) return Fate::Dies;
        return Fate::Unsupported;
    }

    /* Defers a blocked active letter: upper letters still commute through it
     * by the bracket rules; a fully blocked word pairs to zero by weight. */
    InvComb freeze_and_retry(const Word& w, size_t p) {
        Word fw = w;
        fw[p].frozen = true;
        return eval(fw);
    }

    /* Whether the bracket of w[p] with w[p+1] can be fully expanded. */
    bool expansion_feasible(const Word& w, size_t p) {
        const Letter& l = w[p];
        const Letter& r = w[p + 1];
        const int m = l.n, n = r.n;
        using K = Letter::Kind;
        if ((l.kind == K::Gr && r.kind == K::Zr) || (l.kind == K::Zr && r.kind == K::Gr))
            return carrier_dies(w, p, 4, m + n) && composite_fate(w, p, m + n - 1) != Fate::Unsupported;
        if (l.kind == K::Zr && r.kind == K::Zr) {
            for (int i = 0; i <= 3; ++i)
                if (!binom(m, static_cast<unsigned>(i)).is_zero() && !carrier_dies(w, p, 5 - i, m + n - i))
                    return false;
        }
        return true;
    }

    InvComb eval_uncached(const Word& w) {
        InvComb out;
        if (w.empty()) {
            comb_add(out, InvProduct{}, Poly(1));
            return out;
        }

        /* Canonical irreducible degree-5 normal form (a0 a1 a2 a3 a4). */
        if (w.size() == 5) {
            bool quin = true;
            for (size_t i = 0; i < 5; ++i) {
                const Letter& l = w[i];
                if (l.kind != Letter::Kind::Gr || l.frozen || !l.a.is_leaf() ||
                    l.n != 3 - static_cast<int>(i))
                    quin = false;
            }
            if (quin) {
                comb_add(out, {Invariant::quinary({w[0].a.leaf, w[1].a.leaf, w[2].a.leaf, w[3].a.leaf, w[4].a.leaf})},
                         Poly(1));
                return out;
            }
        }

        /* Rightmost active letter. */
        size_t p = w.size();
        for (size_t i = w.size(); i-- > 0;) {
            const Letter& l = w[i];
            bool annihilates = (l.kind == Letter::Kind::Vir && l.n >= -1) ||
                               (l.kind == Letter::Kind::Gr && l.n >= 0) ||
                               (l.kind == Letter::Kind::Zr && l.n >= 0);
            if (i + 1 == w.size() && annihilates) return out; /* dies on the vacuum */
            if (l.frozen || !annihilates) continue;
            /* Index-0 Gr/Zr over a non-vacuum state parks (it builds a
             * zero-product state). */
            if (l.n == 0 && l.kind != Letter::Kind::Vir) continue;
            p = i;
            break;
        }
        if (p == w.size()) {
            /* No processable letter. Words of nonzero weight have no vacuum
             * component. At weight zero a deferred letter may have become
             * expandable once its surroundings were consumed; otherwise the
             * word carries an unevaluated scalar and must not be dropped. */
            if (suffix_weight(w, 0) != 0) return out;
            for (size_t i = w.size(); i-- > 0;) {
                if (!w[i].frozen || i + 1 == w.size()) continue;
                if (!expansion_feasible(w, i)) continue;
                Word uw = w;
                uw[i].frozen = false;
                return eval(uw);
            }
            if (!w.empty())
                fail("IrreducibleTerm", "blocked word of weight 0: " + word_str(w));
            return out;
        }

        const Letter& l = w[p];
        const Letter& r = w[p + 1];
        const int m = l.n, n = r.n;
        using K = Letter::Kind;

        /* Carriers without first-class letters must be discharged by vacuum
         * or weight, else the bracket is deferred. */
        if (!expansion_feasible(w, p)) return freeze_and_retry(w, p);

        Word swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        accum(out, swapped, Poly(1));

        if (l.kind == K::Vir && r.kind == K::Vir) {
            accum(out, splice(w, p, {Letter::vir(m + n)}), Poly(Rational(m - n)));
            if (m + n == 0)
                accum(out, splice(w, p, {}), Rational(static_cast<long>(m) * m * m - m, 12) * var_c());
            return out;
        }
        if (l.kind == K::Vir && r.kind == K::Gr) {
            Letter moved = r;
            moved.n = m + n;
            moved.frozen = false; /* bracket results are fresh letters */
            accum(out, splice(w, p, {moved}), Poly(Rational(m - n + 1)));
            if (m + n == 1) {
                auto [cf, inv] = flatten_omega(r.a);
                accum_factor(out, splice(w, p, {}), Poly(cf * Rational(static_cast<long>(m) * m * m - m, 6)), inv);
            }
            return out;
        }
        if (l.kind == K::Gr && r.kind == K::Vir) {
            Letter moved = l;
            moved.n = m + n;
            moved.frozen = false;
            accum(out, splice(w, p, {moved}), Poly(-Rational(n - m + 1)));
            if (m + n == 1) {
                auto [cf, inv] = flatten_omega(l.a);
                accum_factor(out, splice(w, p, {}), Poly(-cf * Rational(static_cast<long>(n) * n * n - n, 6)), inv);
            }
            return out;
        }
        if (l.kind == K::Vir && r.kind == K::Zr) {
            accum(out, splice(w, p, {Letter::zr(r.a, r.b, m + n)}), Poly(Rational(2 * m - n + 2)));
            accum(out, splice(w, p, {Letter::gr(Elem::prod(r.a, r.b), m + n - 1)}), Poly(Rational(2) * binom(m + 1, 2)));
            if (m + n == 2)
                accum_factor(out, splice(w, p, {}), Poly(Rational(4) * binom(m + 1, 4)),
                             flatten_bilinear(r.a, r.b));
            return out;
        }
        if (l.kind == K::Zr && r.kind == K::Vir) {
            accum(out, splice(w, p, {Letter::zr(l.a, l.b, m + n)}), Poly(-Rational(2 * n - m + 2)));
            accum(out, splice(w, p, {Letter::gr(Elem::prod(l.a, l.b), m + n - 1)}), Poly(Rational(-2) * binom(n + 1, 2)));
            if (m + n == 2)
                accum_factor(out, splice(w, p, {}), Poly(Rational(-4) * binom(n + 1, 4)),
                             flatten_bilinear(l.a, l.b));
            return out;
        }
        if (l.kind == K::Gr && r.kind == K::Gr) {
            /* [s_(m), t_(n)] = sum_i C(m,i) (s_(i) t)_(m+n-i); s_(2)t in V_1 = 0. */
            accum(out, splice(w, p, {Letter::zr(l.a, r.a, m + n)}), Poly(1));
            accum(out, splice(w, p, {Letter::gr(Elem::prod(l.a, r.a), m + n - 1)}), Poly(binom(m, 1)));
            if (m + n == 2)
                accum_factor(out, splice(w, p, {}), Poly(binom(m, 3)), flatten_bilinear(l.a, r.a));
            return out;
        }
        if (l.kind == K::Gr && r.kind == K::Zr) {
            /* [s_(m), Z_(n)], Z = a_(0) b.  s_(2)Z = s(ab) - a(sb) + (sa)b;
             * s_(3)Z in V_1 = 0; s_(4)Z = 2 (ab|s) |0>. */
            const Elem &s = l.a, &a = r.a, &b = r.b;
            /* i = 0: the weight-4 carrier s_(0)Z dies (checked above).
             * i = 1: weight-3 composite o(s)Z. */
            if (composite_fate(w, p, m + n - 1) == Fate::StateAtVacuum)
                accum(out, splice(w, p, {Letter::gr(s, 1, true), Letter::zr(a, b, -1)}), Poly(binom(m, 1)));
            /* i = 2 */
            Poly c2(binom(m, 2));
            accum(out, splice(w, p, {Letter::gr(Elem::prod(s, Elem::prod(a, b)), m + n - 2)}), c2);
            accum(out, splice(w, p, {Letter::gr(Elem::prod(a, Elem::prod(s, b)), m + n - 2)}), -c2);
            accum(out, splice(w, p, {Letter::gr(Elem::prod(Elem::prod(s, a), b), m + n - 2)}), c2);
            /* i = 4 */
            if (m + n == 3)
                accum_factor(out, splice(w, p, {}), Poly(Rational(2) * binom(m, 4)),
                             flatten_bilinear(Elem::prod(a, b), s));
            return out;
        }
        if (l.kind == K::Zr && r.kind == K::Gr) {
            /* [Z_(m), t_(n)], Z = a_(0) b.  Z_(2)t = a(bt) - b(at) - (ab)t;
             * Z_(3)t in V_1 = 0; Z_(4)t = -2 (t|ab) |0>;
             * Z_(1)t = o(a)(b_(0)t) - b_(0)(a t) - (ab)_(0) t. */
            const Elem &a = l.a, &b = l.b, &t = r.a;
            /* i = 0 dies (checked above); i = 1 is the weight-3 composite
             * Z_(1)t = o(a)(b_(0)t) - b_(0)(at) - (ab)_(0)t. */
            if (composite_fate(w, p, m + n - 1) == Fate::StateAtVacuum) {
                Poly c1(binom(m, 1));
                accum(out, splice(w, p, {Letter::gr(a, 1, true), Letter::zr(b, t, -1)}), c1);
                accum(out, splice(w, p, {Letter::zr(b, Elem::prod(a, t), -1)}), -c1);
                accum(out, splice(w, p, {Letter::zr(Elem::prod(a, b), t, -1)}), -c1);
            }
            Poly c2(binom(m, 2));
            accum(out, splice(w, p, {Letter::gr(Elem::prod(a, Elem::prod(b, t)), m + n - 2)}), c2);
            accum(out, splice(w, p, {Letter::gr(Elem::prod(b, Elem::prod(a, t)), m + n - 2)}), -c2);
            accum(out, splice(w, p, {Letter::gr(Elem::prod(Elem::prod(a, b), t), m + n - 2)}), -c2);
            if (m + n == 3)
                accum_factor(out, splice(w, p, {}), Poly(Rational(-2) * binom(m, 4)),
                             flatten_bilinear(t, Elem::prod(a, b)));
            return out;
        }
        /* Zr against Zr: the i <= 3 carriers die (checked above) and
         * Z_(4)Z' lies in V_1 = 0; only the scalar i = 5 term remains. */
        {
            const Elem &a = l.a, &b = l.b, &c = r.a, &d = r.b;
            if (m + n == 4) {
                /* lambda = -(Z|Z') - 4 (ab|cd) with
                 * (Z|Z') = (b|a(cd)) - (b|c(ad)) + (b|(ac)d). */
                Poly c5(binom(m, 5));
                Word rest = splice(w, p, {});
                accum_factor(out, rest, -c5, flatten_bilinear(b, Elem::prod(a, Elem::prod(c, d))));
                accum_factor(out, rest, c5, flatten_bilinear(b, Elem::prod(c, Elem::prod(a, d))));
                accum_factor(out, rest, -c5, flatten_bilinear(b, Elem::prod(Elem::prod(a, c), d)));
                accum_factor(out, rest, Rational(-4) * c5, flatten_bilinear(Elem::prod(a, b), Elem::prod(c, d)));
            }
            return out;
        }
    }
};

} // namespace

InvComb reduce_word(const Word& w) {
    Engine engine;
    return engine.eval(w);
}

InvComb reduce_pairing(const ModeExpr& expr) {
    Engine engine;
    InvComb out;
    for (const auto& term : expr) comb_add_scaled(out, engine.eval(term.word), term.coef);
    return out;
}

InvComb zhu_kappa_pairing(const std::vector<int>& ids, const std::vector<int>& zhu_indices,
                          const Partition& part) {
    if (ids.size() != zhu_indices.size() + 1)
        fail("DimensionMismatch", "zhu word needs one more argument than mode indices");
    Word w;
    /* (x_(n) u | v) = (u | x_(2-n) v): the word's last element contributes
     * index 3, then the mode letters in reverse with adjoint indices. */
    w.push_back(Letter::gr(Elem::leaf_of(ids.back()), 3));
    for (size_t j = zhu_indices.size(); j-- > 0;)
        w.push_back(Letter::gr(Elem::leaf_of(ids[j]), 2 - zhu_indices[j]));
    for (unsigned part_n : part.parts) w.push_back(Letter::vir(-static_cast<int>(part_n)));
    return reduce_word(w);
}

} // namespace griess
