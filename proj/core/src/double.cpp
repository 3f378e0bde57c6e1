#include "rqn/double.hpp"

#include "rqn/errors.hpp"

namespace rqn {

DoubleLie build_double(std::shared_ptr<const LieAlgebra> L, const Bivector& r) {
  const std::size_t n = L->dim();
  if (r.dim() != n) throw DimensionMismatch("bivector and algebra dimensions differ");
  auto cy = check_cybe(*L, r);
  if (!cy.pass())
    throw NotAnRMatrix("CYBE fails at " + cy.residuals[0].where + ": " + cy.residuals[0].value.to_string());
  DoubleLie d;
  d.base = L;
  d.dual = sklyanin_bracket(*L, r);
  const std::size_t m = 2 * n;
  std::vector<Poly> c(m * m * m);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Poly& { return c[(i * m + j) * m + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        at(i, j, k) = L->f(i, j, k);
        at(n + i, n + j, n + k) = d.dual.at(i, j, k);
        // [X_i, X^j] = ad*_{X_i} X^j - ad*_{X^j} X_i
        //           = -f_{ik}^j X^k + ft^{jk}_i X_k
        at(i, n + j, n + k) = -L->f(i, k, j);
        at(i, n + j, k) = d.dual.at(j, k, i);
        at(n + j, i, n + k) = L->f(i, k, j);
        at(n + j, i, k) = -d.dual.at(j, k, i);
      }
  d.algebra = LieAlgebra::from_constants(L->name() + "_double", m, std::move(c), L->params());
  d.algebra.require_jacobi();
  d.pairing = PolyMatrix::blocks(PolyMatrix(n, n), PolyMatrix::identity(n), PolyMatrix::identity(n), PolyMatrix(n, n));
  return d;
}

Poly pairing(const DoubleLie& d, const Vec& v, const Vec& w) {
  if (v.size() != d.pairing.rows() || w.size() != d.pairing.rows())
    throw DimensionMismatch("pairing arguments must have length 2n");
  return dot(v, d.pairing * w);
}

PolyMatrix theta_sharp(const KCochain& theta) {
  if (theta.degree() != 2) throw DimensionMismatch("theta must be a 2-cochain");
  const std::size_t n = theta.dim();
  PolyMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(j, i) = theta.at({i, j});
  return t;
}

RMatrixJ assemble_J(const Endo& n, const Bivector& r, const KCochain& theta) {
  if (n.dim() != r.dim() || theta.dim() != r.dim()) throw DimensionMismatch("J blocks have different sizes");
  return {PolyMatrix::blocks(n.n, r.sharp(), theta_sharp(theta), -n.n.transpose())};
}

ConditionResult check_mybe(const DoubleLie& d, const RMatrixJ& R, const Poly& k) {
  const LieAlgebra& D = d.algebra;
  const std::size_t m = D.dim();
  const PolyMatrix& J = R.J;
  if (J.rows() != m || J.cols() != m) throw DimensionMismatch("J does not match the double");
  ConditionResult c{"mybe", {}};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec v = unit_vec(m, i), w = unit_vec(m, j);
      Vec Jv = J.col(i), Jw = J.col(j);
      Vec res = bracket(D, Jv, Jw);
      res = vec_sub(res, J * bracket(D, Jv, w));
      res = vec_sub(res, J * bracket(D, v, Jw));
      res = vec_add(res, vec_scale(bracket(D, v, w), k));
      for (std::size_t q = 0; q < m; ++q)
        if (!res[q].is_zero())
          c.residuals.push_back({"(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") component " +
                                     std::to_string(q + 1),
                                 res[q]});
    }
  return c;
}

ConditionResult check_gc_conditions(const LieAlgebra& L, const Bivector& r, const Endo& n, const KCochain& theta,
                                    const Poly& k) {
  const std::size_t d = L.dim();
  if (r.dim() != d || n.dim() != d || theta.dim() != d) throw DimensionMismatch("gc inputs have different sizes");
  PolyMatrix T = theta_sharp(theta);
  const PolyMatrix& N = n.n;
  ConditionResult c{"gc", {}};
  collect(c.residuals, "n^t theta# - theta# n ", N.transpose() * T - T * N);
  collect(c.residuals, "n^2 + r# theta# - k Id ", N * N + r.sharp() * T - PolyMatrix::identity(d) * k);
  return c;
}

VerificationReport check_j_algebraic(const RMatrixJ& R, const DoubleLie& d, const Poly& k) {
  const PolyMatrix& J = R.J;
  const std::size_t m = J.rows();
  VerificationReport rep;
  ConditionResult sq{"j_squared", {}};
  collect(sq.residuals, "", J * J - PolyMatrix::identity(m) * k);
  rep.conditions.push_back(std::move(sq));
  if (k == Poly(-1)) {
    ConditionResult orth{"orthogonal", {}};
    collect(orth.residuals, "", J.transpose() * d.pairing * J - d.pairing);
    rep.conditions.push_back(std::move(orth));
  }
  return rep;
}

}  // namespace rqn
