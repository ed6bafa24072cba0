#ifndef VERMA_LINALG_HPP
#define VERMA_LINALG_HPP

#include <vector>

#include "verma/rational.hpp"

namespace verma {

using QMatrix = std::vector<std::vector<Rational>>;

// Exact kernel basis {v : A v = 0} by fraction-free (Bareiss) elimination
// after row-wise denominator clearing.  Basis vectors are primitive
// integer vectors with positive leading entry, ordered by free column;
// the result is identical across execution modes.
std::vector<std::vector<Rational>> nullspace(const QMatrix& a);
std::vector<std::vector<Rational>> nullspace_serial(const QMatrix& a);
std::vector<std::vector<Rational>> nullspace_parallel(const QMatrix& a);

// Canonical reduced row-echelon form over Q: unit pivots, zero rows
// dropped, rows ordered by pivot column.  Two row spans are equal iff
// their rrefs are equal.
QMatrix rref(QMatrix a);

} // namespace verma

#endif
