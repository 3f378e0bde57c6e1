#include "rqn/lie.hpp"

#include <tuple>

#include "rqn/errors.hpp"

namespace rqn {

LieAlgebra LieAlgebra::from_constants(std::string name, std::size_t dim, std::vector<Poly> c,
                                      std::vector<std::string> params) {
  if (c.size() != dim * dim * dim) throw DimensionMismatch("structure constant table has wrong size");
  LieAlgebra L;
  L.name_ = std::move(name);
  L.dim_ = dim;
  L.params_ = std::move(params);
  L.c_ = std::move(c);
  return L;
}

LieAlgebra LieAlgebra::from_brackets(std::string name, std::size_t dim, const std::vector<BracketEntry>& brackets,
                                     std::vector<std::string> params) {
  if (dim == 0) throw SchemaError("dimension must be positive");
  std::vector<Poly> c(dim * dim * dim);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Poly& { return c[(i * dim + j) * dim + k]; };
  for (const auto& b : brackets) {
    auto n = static_cast<int>(dim);
    if (b.i < 1 || b.j < 1 || b.k < 1 || b.i > n || b.j > n || b.k > n)
      throw SchemaError("bracket index out of range in " + name);
    if (b.i >= b.j) throw SchemaError("bracket entries need i < j in " + name);
    auto i = static_cast<std::size_t>(b.i - 1), j = static_cast<std::size_t>(b.j - 1),
         k = static_cast<std::size_t>(b.k - 1);
    at(i, j, k) += b.c;
    at(j, i, k) -= b.c;
  }
  LieAlgebra L = from_constants(std::move(name), dim, std::move(c), std::move(params));
  L.require_jacobi();
  return L;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!f(i, j, k).is_zero())
          out.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1), f(i, j, k)});
  return out;
}

bool LieAlgebra::is_parameter_free() const {
  for (const auto& p : c_)
    if (!p.is_constant()) return false;
  return true;
}

std::optional<LieAlgebra::JacobiFailure> LieAlgebra::jacobi_failure() const {
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        for (std::size_t s = 0; s < n; ++s) {
          Poly sum;
          for (std::size_t m = 0; m < n; ++m) {
            sum += f(i, j, m) * f(m, l, s);
            sum += f(j, l, m) * f(m, i, s);
            sum += f(l, i, m) * f(m, j, s);
          }
          if (!sum.is_zero()) return JacobiFailure{i + 1, j + 1, l + 1, s + 1, sum};
        }
  return std::nullopt;
}

void LieAlgebra::require_jacobi() const {
  if (auto bad = jacobi_failure())
    throw JacobiViolation(name_ + ": Jacobi fails on (X" + std::to_string(bad->i) + ", X" + std::to_string(bad->j) +
                          ", X" + std::to_string(bad->l) + "), component " + std::to_string(bad->s) +
                          ", residual " + bad->residual.to_string());
}

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket arguments must have length dim");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      Poly xy;
      for (std::size_t k = 0; k < n; ++k) {
        const Poly& c = L.f(i, j, k);
        if (c.is_zero()) continue;
        if (xy.is_zero()) xy = x[i] * y[j];
        out[k] += xy * c;
      }
    }
  }
  return out;
}

PolyMatrix ad(const LieAlgebra& L, const Vec& x) {
  const std::size_t n = L.dim();
  PolyMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = bracket(L, x, unit_vec(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

PolyMatrix coadjoint(const LieAlgebra& L, const Vec& x) { return -ad(L, x).transpose(); }

AdjointData adjoint_matrices(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  AdjointData d;
  d.X.assign(n, PolyMatrix(n, n));
  d.Y.assign(n, PolyMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        d.X[i](j, k) = -L.f(i, j, k);
        d.Y[k](i, j) = -L.f(i, j, k);
      }
  return d;
}

Bivector::Bivector(PolyMatrix r) : r_(std::move(r)) {
  if (r_.rows() != r_.cols()) throw DimensionMismatch("bivector matrix must be square");
  if (!r_.is_antisymmetric()) throw SchemaError("bivector matrix must be antisymmetric");
}

Bivector Bivector::from_entries(std::size_t n, const std::vector<std::tuple<int, int, Poly>>& entries) {
  PolyMatrix r(n, n);
  for (const auto& [i, j, c] : entries) {
    if (i < 1 || j < 1 || i > static_cast<int>(n) || j > static_cast<int>(n))
      throw SchemaError("bivector index out of range");
    if (i >= j) throw SchemaError("bivector entries need i < j");
    r(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) += c;
    r(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) -= c;
  }
  return Bivector(std::move(r));
}

DualStructure sklyanin_bracket(const LieAlgebra& L, const Bivector& r) {
  const std::size_t n = L.dim();
  if (r.dim() != n) throw DimensionMismatch("bivector and algebra dimensions differ");
  const PolyMatrix sharp = r.sharp();
  // ad*_{r# X^i} for each i
  std::vector<PolyMatrix> co(n);
  for (std::size_t i = 0; i < n; ++i) co[i] = coadjoint(L, sharp.col(i));
  DualStructure d;
  d.dim = n;
  d.c.assign(n * n * n, Poly());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k) d.c[(i * n + j) * n + k] = co[i](k, j) - co[j](k, i);
    }
  return d;
}

}  // namespace rqn
