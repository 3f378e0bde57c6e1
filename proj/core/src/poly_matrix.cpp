#include "rqn/poly_matrix.hpp"

#include "rqn/errors.hpp"

namespace rqn {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1);
  return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Poly>>& rows) {
  if (rows.empty()) return {};
  PolyMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::column(const Vec& v) {
  PolyMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vec PolyMatrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec PolyMatrix::row(std::size_t i) const {
  return Vec(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

static void same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  same_shape(*this, o);
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  same_shape(*this, o);
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product inner dimensions differ");
  PolyMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Poly& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator*(const Poly& s) const {
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
  return r;
}

Vec PolyMatrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_antisymmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool PolyMatrix::is_constant() const {
  for (const auto& p : e_)
    if (!p.is_constant()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

PolyMatrix PolyMatrix::substitute(const std::map<std::string, Poly>& with) const {
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].substitute(with);
  return r;
}

PolyMatrix PolyMatrix::eval(const std::map<std::string, Rational>& at) const {
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = Poly(e_[k].eval(at));
  return r;
}

PolyMatrix PolyMatrix::blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw DimensionMismatch("incompatible blocks");
  PolyMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&m](const PolyMatrix& x, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m(r0 + i, c0 + j) = x(i, j);
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return m;
}

PolyMatrix mat_ops(const PolyMatrix& a, const PolyMatrix& b, MatOp op) {
  switch (op) {
    case MatOp::add: return a + b;
    case MatOp::sub: return a - b;
    case MatOp::mul: return a * b;
    case MatOp::transpose: return a.transpose();
    case MatOp::scalar_mul:
      if (b.rows() != 1 || b.cols() != 1) throw DimensionMismatch("scalar must be 1x1");
      return a * b(0, 0);
  }
  return {};
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Vec& a, const Poly& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Poly(1);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

Poly dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Poly s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

Poly det_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return Poly(1);
  Poly sum;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& a = m(row, cols[k]);
    if (a.is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Poly minor = det_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (k % 2) sum -= a * minor;
    else sum += a * minor;
  }
  return sum;
}

}  // namespace

Poly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return det_rec(m, cols, 0);
}

}  // namespace rqn
