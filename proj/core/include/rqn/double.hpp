#pragma once

#include <memory>

#include "rqn/structures.hpp"

namespace rqn {

// g + g* with basis (X_1..X_n, X^1..X^n).
struct DoubleLie {
  std::shared_ptr<const LieAlgebra> base;
  DualStructure dual;
  LieAlgebra algebra;  // the 2n-dimensional bracket table
  PolyMatrix pairing;  // [[0, I], [I, 0]]
};

// Throws NotAnRMatrix when CYBE fails and JacobiViolation if the assembled
// table is not a Lie algebra.
DoubleLie build_double(std::shared_ptr<const LieAlgebra> L, const Bivector& r);
Poly pairing(const DoubleLie& d, const Vec& v, const Vec& w);

// The matrix theta# with column i equal to theta(X_i, .).
PolyMatrix theta_sharp(const KCochain& theta);

struct RMatrixJ {
  PolyMatrix J;
};
// [[n, r#], [theta#, -n^t]]
RMatrixJ assemble_J(const Endo& n, const Bivector& r, const KCochain& theta);

// [Jv,Jw] - J[Jv,w] - J[v,Jw] + k[v,w] over basis pairs v < w.
ConditionResult check_mybe(const DoubleLie& d, const RMatrixJ& R, const Poly& k);
// n^t theta# - theta# n and n^2 + r# theta# - k Id.
ConditionResult check_gc_conditions(const LieAlgebra& L, const Bivector& r, const Endo& n, const KCochain& theta,
                                    const Poly& k);
// J^2 - k Id, plus J^t P J - P when k = -1.
VerificationReport check_j_algebraic(const RMatrixJ& R, const DoubleLie& d, const Poly& k);

}  // namespace rqn
