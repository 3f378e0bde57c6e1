#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rqn/poly.hpp"

namespace rqn {

using Vec = std::vector<Poly>;

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  static PolyMatrix identity(std::size_t n);
  static PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows);
  static PolyMatrix column(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  const std::vector<Poly>& entries() const { return e_; }

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator*(const Poly& s) const;
  PolyMatrix operator-() const;
  Vec operator*(const Vec& v) const;
  PolyMatrix& operator+=(const PolyMatrix& o) { return *this = *this + o; }
  PolyMatrix& operator-=(const PolyMatrix& o) { return *this = *this - o; }
  PolyMatrix transpose() const;

  bool is_zero() const;
  bool is_antisymmetric() const;
  bool is_constant() const;
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  PolyMatrix substitute(const std::map<std::string, Poly>& with) const;
  PolyMatrix eval(const std::map<std::string, Rational>& at) const;
  // Block [[a, b], [c, d]].
  static PolyMatrix blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

enum class MatOp { add, sub, mul, transpose, scalar_mul };
// Binary ops use both A and B; transpose ignores B; scalar_mul scales A by
// the 1x1 matrix B.
PolyMatrix mat_ops(const PolyMatrix& a, const PolyMatrix& b, MatOp op);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Poly& s);
Vec unit_vec(std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
Poly dot(const Vec& a, const Vec& b);

// Determinant by fraction-free cofactor expansion; fine for the small sizes used here.
Poly det(const PolyMatrix& m);

}  // namespace rqn
