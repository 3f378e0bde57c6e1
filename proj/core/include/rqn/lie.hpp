#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rqn/poly_matrix.hpp"

namespace rqn {

// [X_i, X_j] = c X_k, 1-based, i < j.
struct BracketEntry {
  int i = 0, j = 0, k = 0;
  Poly c;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;

  // Dense constants, index (i*dim + j)*dim + k, 0-based, must be antisymmetric
  // in (i, j). Jacobi is not checked here.
  static LieAlgebra from_constants(std::string name, std::size_t dim, std::vector<Poly> c,
                                   std::vector<std::string> params = {});
  // Validates indices and the Jacobi identity.
  static LieAlgebra from_brackets(std::string name, std::size_t dim, const std::vector<BracketEntry>& brackets,
                                  std::vector<std::string> params = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& params() const { return params_; }

  // f_{ij}^k, 0-based.
  const Poly& f(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  std::vector<BracketEntry> brackets() const;
  bool is_parameter_free() const;

  struct JacobiFailure {
    std::size_t i, j, l, s;  // 1-based triple and output component
    Poly residual;
  };
  std::optional<JacobiFailure> jacobi_failure() const;
  void require_jacobi() const;

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> params_;
  std::vector<Poly> c_;
};

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y);
// Column j is [x, X_j].
PolyMatrix ad(const LieAlgebra& L, const Vec& x);
// Matrix of ad*_x on the dual, equal to -(ad_x)^t.
PolyMatrix coadjoint(const LieAlgebra& L, const Vec& x);

struct AdjointData {
  std::vector<PolyMatrix> X;  // (X_i)_{jk} = -f_{ij}^k
  std::vector<PolyMatrix> Y;  // (Y^k)_{ij} = -f_{ij}^k
};
AdjointData adjoint_matrices(const LieAlgebra& L);

// Antisymmetric 2-vector. R(i, j) is the coefficient of X_i ^ X_j, so
// r#(X^i) = sum_j R(i, j) X_j and the matrix of r# acting on columns is R^t.
class Bivector {
 public:
  Bivector() = default;
  explicit Bivector(PolyMatrix r);
  static Bivector zero(std::size_t n) { return Bivector(PolyMatrix(n, n)); }
  // Entries (i, j, c) with 1-based i < j.
  static Bivector from_entries(std::size_t n, const std::vector<std::tuple<int, int, Poly>>& entries);

  const PolyMatrix& matrix() const { return r_; }
  PolyMatrix sharp() const { return r_.transpose(); }
  std::size_t dim() const { return r_.rows(); }
  bool operator==(const Bivector& o) const { return r_ == o.r_; }

 private:
  PolyMatrix r_;
};

// Endomorphism of the algebra; column j holds n(X_j).
struct Endo {
  PolyMatrix n;
  std::size_t dim() const { return n.rows(); }
  bool operator==(const Endo& o) const { return n == o.n; }
};

// [X^i, X^j] = ft(i, j, k) X^k on the dual.
struct DualStructure {
  std::size_t dim = 0;
  std::vector<Poly> c;
  const Poly& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }
  LieAlgebra as_algebra(std::string name) const { return LieAlgebra::from_constants(std::move(name), dim, c); }
};

DualStructure sklyanin_bracket(const LieAlgebra& L, const Bivector& r);

}  // namespace rqn
