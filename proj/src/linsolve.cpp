#include "griess/linsolve.hpp"

namespace griess {

namespace {

/* Bareiss forward elimination on [A|b] (Poly entries). Division at each step
 * is exact by the Sylvester identity. Returns false when A is singular. */
bool bareiss(PolyMatrix& a, PolyVector& b) {
    const size_t n = a.size();
    Poly prev(1);
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return false;
            std::swap(a[k], a[piv]);
            std::swap(b[k], b[piv]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = *t.divide_exact(prev);
            }
            Poly t = a[k][k] * b[i] - a[i][k] * b[k];
            b[i] = *t.divide_exact(prev);
            a[i][k] = Poly(0);
        }
        prev = a[k][k];
    }
    return !a[n - 1][n - 1].is_zero();
}

} // namespace

Poly poly_det(const PolyMatrix& matrix) {
    PolyMatrix a = matrix;
    PolyVector b(a.size(), Poly(0));
    size_t n = a.size();
    if (n == 0) return Poly(1);
    /* Track row swaps for the sign. */
    Poly prev(1);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = *t.divide_exact(prev);
            }
            a[i][k] = Poly(0);
        }
        prev = a[k][k];
    }
    return sign == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

RatFuncVector linsolve(const PolyMatrix& matrix, const PolyVector& rhs) {
    const size_t n = matrix.size();
    if (rhs.size() != n) fail("DimensionMismatch", "matrix/rhs size mismatch");
    for (const auto& row : matrix)
        if (row.size() != n) fail("DimensionMismatch", "matrix is not square");
    if (n == 0) return {};

    PolyMatrix a = matrix;
    PolyVector b = rhs;
    if (!bareiss(a, b)) fail("SingularMatrix", "zero determinant");

    /* Back substitution over the fraction field. */
    RatFuncVector x(n);
    for (size_t i = n; i-- > 0;) {
        RatFunc acc(b[i]);
        for (size_t j = i + 1; j < n; ++j) acc -= RatFunc(a[i][j]) * x[j];
        x[i] = acc / RatFunc(a[i][i]);
    }

    /* Exact re-check against the original system. */
    for (size_t i = 0; i < n; ++i) {
        RatFunc acc(0);
        for (size_t j = 0; j < n; ++j) acc += RatFunc(matrix[i][j]) * x[j];
        if (!(acc == RatFunc(rhs[i]))) fail("SingularMatrix", "back-substitution check failed");
    }
    return x;
}

RatFuncVector linsolve(const RatFuncMatrix& matrix, const RatFuncVector& rhs) {
    const size_t n = matrix.size();
    if (rhs.size() != n) fail("DimensionMismatch", "matrix/rhs size mismatch");
    for (const auto& row : matrix)
        if (row.size() != n) fail("DimensionMismatch", "matrix is not square");
    if (n == 0) return {};

    /* Clear denominators row by row, then run the Poly solver. */
    PolyMatrix a(n, PolyVector(n));
    PolyVector b(n);
    for (size_t i = 0; i < n; ++i) {
        Poly scale(1);
        for (const auto& e : matrix[i]) scale *= e.den();
        scale *= rhs[i].den();
        for (size_t j = 0; j < n; ++j) {
            RatFunc scaled = matrix[i][j] * RatFunc(scale);
            a[i][j] = scaled.num();
        }
        RatFunc srhs = rhs[i] * RatFunc(scale);
        b[i] = srhs.num();
    }
    RatFuncVector x = linsolve(a, b);

    for (size_t i = 0; i < n; ++i) {
        RatFunc acc(0);
        for (size_t j = 0; j < n; ++j) acc += matrix[i][j] * x[j];
        if (!(acc == rhs[i])) fail("SingularMatrix", "back-substitution check failed");
    }
    return x;
}

} // namespace griess
