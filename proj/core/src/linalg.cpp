#include "rqn/linalg.hpp"

#include <set>

#include "rqn/errors.hpp"

namespace rqn {

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::optional<QVec> solve_rational(const QMatrix& a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("system rows and right-hand side differ");
  const std::size_t n = a.empty() ? 0 : a[0].size();
  QMatrix aug(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != n) throw DimensionMismatch("ragged system matrix");
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  QVec x(n, Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][n];
  return x;
}

QMatrix to_qmatrix(const PolyMatrix& m) {
  QMatrix q(m.rows(), QVec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = m(i, j).constant_value();
  return q;
}

PolyMatrix from_qmatrix(const QMatrix& m) {
  PolyMatrix p(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) p(i, j) = Poly(m[i][j]);
  return p;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix aug(n, QVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionMismatch("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

PolyMatrix inverse(const PolyMatrix& m) {
  auto inv = inverse(to_qmatrix(m));
  if (!inv) throw NotInvertible("matrix is singular");
  return from_qmatrix(*inv);
}

std::optional<Vec> solve_linear_exact(const PolyMatrix& a, const Vec& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("system rows and right-hand side differ");
  QMatrix q = to_qmatrix(a);
  std::set<Monomial, GrlexGreater> monos;
  for (const auto& p : b)
    for (const auto& [m, _] : p.terms()) monos.insert(m);
  Vec x(a.cols());
  for (const auto& m : monos) {
    QVec rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = b[i].coefficient(m);
    auto s = solve_rational(q, rhs);
    if (!s) return std::nullopt;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += Poly::monomial(m, (*s)[j]);
  }
  return x;
}

}  // namespace rqn
