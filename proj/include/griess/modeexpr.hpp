#pragma once

#include "griess/invariants.hpp"
#include "griess/virasoro.hpp"

namespace griess {

/* One mode letter of a word applied to the vacuum.
 * Vir(n) is L(n); Gr(t, n) is t_(n) for a weight-2 element tree t;
 * Zr(a, b, n) is (a_(0) b)_(n), the mode of a weight-3 zero-product.
 * Frozen letters are part of a parked composite state and are never chosen
 * as the active letter themselves. */
struct Letter {
    enum class Kind { Vir, Gr, Zr };
    Kind kind;
    int n = 0;
    Elem a, b;
    bool frozen = false;

    static Letter vir(int n) { return {Kind::Vir, n, {}, {}, false}; }
    static Letter gr(Elem t, int n, bool frozen = false) { return {Kind::Gr, n, std::move(t), {}, frozen}; }
    static Letter zr(Elem a, Elem b, int n) { return {Kind::Zr, n, std::move(a), std::move(b), false}; }

    /* L(0)-weight shift of the letter. */
    int weight_shift() const {
        switch (kind) {
            case Kind::Vir: return -n;
            case Kind::Gr: return 1 - n;
            case Kind::Zr: return 2 - n;
        }
        return 0;
    }
    std::string str() const;
};

using Word = std::vector<Letter>;

struct ModeTerm {
    Poly coef;
    Word word;
};

/* Linear combination of mode words applied to the vacuum. */
using ModeExpr = std::vector<ModeTerm>;

std::string word_str(const Word& w);

/* Vacuum coefficient of the word, reduced to invariant scalars. */
InvComb reduce_word(const Word& w);

/* Linear extension over a mode expression. */
InvComb reduce_pairing(const ModeExpr& expr);

/* Pairing (a^{ids[0]}_(i_0) ... a^{ids[k-2]}_(i_{k-2}) a^{ids[k-1]} | L(-p)|0>)
 * as a word via the invariant form: adjoint letters applied to the kappa word. */
InvComb zhu_kappa_pairing(const std::vector<int>& ids, const std::vector<int>& zhu_indices,
                          const Partition& p);

} // namespace griess
