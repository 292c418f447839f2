#pragma once

#include <vector>

#include "griess/ratfunc.hpp"

namespace griess {

using RatFuncMatrix = std::vector<std::vector<RatFunc>>;
using RatFuncVector = std::vector<RatFunc>;
using PolyMatrix = std::vector<std::vector<Poly>>;
using PolyVector = std::vector<Poly>;

/* Exact solve A x = b by fraction-free (Bareiss) elimination after clearing
 * denominators row-wise. Throws SingularMatrix; the solution is re-checked
 * against the original system before returning. */
RatFuncVector linsolve(const RatFuncMatrix& matrix, const RatFuncVector& rhs);

/* Poly-entry convenience overload. */
RatFuncVector linsolve(const PolyMatrix& matrix, const PolyVector& rhs);

/* Determinant by Bareiss elimination (used for singularity diagnostics). */
Poly poly_det(const PolyMatrix& matrix);

} // namespace griess
