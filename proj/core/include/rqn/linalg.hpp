#pragma once

#include <optional>
#include <vector>

#include "rqn/poly_matrix.hpp"

namespace rqn {

using QMatrix = std::vector<std::vector<Rational>>;
using QVec = std::vector<Rational>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);

// Particular solution with free unknowns set to zero, or nullopt.
std::optional<QVec> solve_rational(const QMatrix& a, const QVec& b);

QMatrix to_qmatrix(const PolyMatrix& m);
PolyMatrix from_qmatrix(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
// Inverse of a parameter-free matrix; throws NotInvertible.
PolyMatrix inverse(const PolyMatrix& m);

// Solves A s = b where A is parameter-free and b may carry parameters. Each
// monomial of b gives an independent rational system.
std::optional<Vec> solve_linear_exact(const PolyMatrix& a, const Vec& b);

}  // namespace rqn
