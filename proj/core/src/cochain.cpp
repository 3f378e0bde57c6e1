#include "rqn/cochain.hpp"

#include <algorithm>

#include "rqn/errors.hpp"
#include "rqn/linalg.hpp"

namespace rqn {

namespace {

// Sorts idx in place and returns the permutation sign, or 0 on a repeat.
int sort_sign(Index& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

}  // namespace

KCochain::KCochain(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

Poly KCochain::at(const Index& idx) const {
  if (idx.size() != degree_) throw DimensionMismatch("cochain evaluated on wrong number of arguments");
  Index s = idx;
  int sign = sort_sign(s);
  if (sign == 0) return {};
  auto it = c_.find(s);
  if (it == c_.end()) return {};
  return sign > 0 ? it->second : -it->second;
}

void KCochain::set(const Index& idx, const Poly& v) {
  if (idx.size() != degree_) throw DimensionMismatch("cochain index has wrong length");
  for (auto i : idx)
    if (i >= dim_) throw DimensionMismatch("cochain index out of range");
  Index s = idx;
  int sign = sort_sign(s);
  if (sign == 0) {
    if (!v.is_zero()) throw SchemaError("cochain index has a repeated entry");
    return;
  }
  Poly val = sign > 0 ? v : -v;
  if (val.is_zero())
    c_.erase(s);
  else
    c_[s] = val;
}

void KCochain::add(const Index& idx, const Poly& v) {
  if (v.is_zero()) return;
  set(idx, at(idx) + v);
}

KCochain KCochain::operator+(const KCochain& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw DimensionMismatch("cochain shapes differ");
  KCochain r = *this;
  for (const auto& [k, v] : o.c_) r.add(k, v);
  return r;
}

KCochain KCochain::operator-(const KCochain& o) const { return *this + (-o); }

KCochain KCochain::operator*(const Poly& s) const {
  KCochain r(dim_, degree_);
  for (const auto& [k, v] : c_) r.set(k, v * s);
  return r;
}

KCochain KCochain::substitute(const std::map<std::string, Poly>& with) const {
  KCochain r(dim_, degree_);
  for (const auto& [k, v] : c_) r.set(k, v.substitute(with));
  return r;
}

KCochain KCochain::eval(const std::map<std::string, Rational>& at) const {
  KCochain r(dim_, degree_);
  for (const auto& [k, v] : c_) r.set(k, Poly(v.eval(at)));
  return r;
}

std::vector<Index> ascending_tuples(std::size_t n, std::size_t k) {
  std::vector<Index> out;
  if (k > n) return out;
  Index cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    if (k == 0) return out;
    std::size_t p = k;
    while (p > 0 && cur[p - 1] == n - k + p - 1) --p;
    if (p == 0) return out;
    ++cur[p - 1];
    for (std::size_t q = p; q < k; ++q) cur[q] = cur[q - 1] + 1;
  }
}

// (dc)(X_0..X_k) = sum_{s<t} (-1)^{s+t} c([X_s, X_t], X_0..^s..^t..X_k).
// For k = 1, 2, 3 this gives -c([Xi,Xj]), then -c([Xi,Xj],Xk) + c([Xi,Xk],Xj)
// - c([Xj,Xk],Xi), and the six-term degree-3 formula.
KCochain coboundary(const LieAlgebra& L, const KCochain& c) {
  const std::size_t n = L.dim(), k = c.degree();
  if (c.dim() != n) throw DimensionMismatch("cochain and algebra dimensions differ");
  KCochain out(n, k + 1);
  if (k == 0 || k + 1 > n) return out;
  for (const auto& idx : ascending_tuples(n, k + 1)) {
    Poly sum;
    for (std::size_t s = 0; s < idx.size(); ++s)
      for (std::size_t t = s + 1; t < idx.size(); ++t) {
        Index rest;
        for (std::size_t q = 0; q < idx.size(); ++q)
          if (q != s && q != t) rest.push_back(idx[q]);
        Poly term;
        for (std::size_t m = 0; m < n; ++m) {
          const Poly& f = L.f(idx[s], idx[t], m);
          if (f.is_zero()) continue;
          Index args{m};
          args.insert(args.end(), rest.begin(), rest.end());
          Poly v = c.at(args);
          if (!v.is_zero()) term += f * v;
        }
        if ((s + t) % 2)
          sum -= term;
        else
          sum += term;
      }
    out.set(idx, sum);
  }
  return out;
}

bool is_cocycle(const LieAlgebra& L, const KCochain& c) { return coboundary(L, c).is_zero(); }

KCochain interior_n(const KCochain& phi, const Endo& n) {
  const std::size_t d = phi.dim(), k = phi.degree();
  if (n.dim() != d) throw DimensionMismatch("endomorphism and cochain dimensions differ");
  KCochain out(d, k);
  for (const auto& idx : ascending_tuples(d, k)) {
    Poly sum;
    for (std::size_t s = 0; s < k; ++s) {
      // n X_{idx[s]} = sum_m n(m, idx[s]) X_m
      for (std::size_t m = 0; m < d; ++m) {
        const Poly& a = n.n(m, idx[s]);
        if (a.is_zero()) continue;
        Index args = idx;
        args[s] = m;
        Poly v = phi.at(args);
        if (!v.is_zero()) sum += a * v;
      }
    }
    out.set(idx, sum);
  }
  return out;
}

PolyMatrix coboundary_matrix(const LieAlgebra& L, std::size_t k) {
  const std::size_t n = L.dim();
  auto cols = ascending_tuples(n, k);
  auto rows = ascending_tuples(n, k + 1);
  PolyMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    KCochain e(n, k);
    e.set(cols[c], Poly(1));
    KCochain de = coboundary(L, e);
    for (std::size_t r = 0; r < rows.size(); ++r) m(r, c) = de.at(rows[r]);
  }
  return m;
}

std::optional<KCochain> solve_coboundary(const LieAlgebra& L, const KCochain& target) {
  const std::size_t n = L.dim(), k = target.degree();
  if (target.dim() != n) throw DimensionMismatch("cochain and algebra dimensions differ");
  if (k < 1 || k > n) throw DimensionMismatch("target degree must be between 1 and dim");
  if (!L.is_parameter_free()) throw ParameterizedAlgebra("coboundary solving needs parameter-free constants");
  if (target.is_zero()) return KCochain(n, k - 1);
  if (!is_cocycle(L, target)) return std::nullopt;
  PolyMatrix a = coboundary_matrix(L, k - 1);
  auto rows = ascending_tuples(n, k);
  Vec b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) b[r] = target.at(rows[r]);
  auto x = solve_linear_exact(a, b);
  if (!x) return std::nullopt;
  auto cols = ascending_tuples(n, k - 1);
  KCochain theta(n, k - 1);
  for (std::size_t c = 0; c < cols.size(); ++c) theta.set(cols[c], (*x)[c]);
  return theta;
}

CohomologyDims cohomology_dims(const LieAlgebra& L, std::size_t k) {
  if (!L.is_parameter_free()) throw ParameterizedAlgebra(L.name() + " has parameterized structure constants");
  const std::size_t n = L.dim();
  if (k > n) throw DimensionMismatch("degree exceeds dimension");
  CohomologyDims d{};
  d.cochains = ascending_tuples(n, k).size();
  std::size_t rank_out = k + 1 <= n ? rank(to_qmatrix(coboundary_matrix(L, k))) : 0;
  d.cocycles = d.cochains - rank_out;
  d.coboundaries = k >= 1 ? rank(to_qmatrix(coboundary_matrix(L, k - 1))) : 0;
  return d;
}

std::vector<PolyMatrix> phi_slices(const KCochain& phi) {
  if (phi.degree() != 3) throw DimensionMismatch("slices need a 3-cochain");
  const std::size_t n = phi.dim();
  std::vector<PolyMatrix> out(n, PolyMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i](j, k) = phi.at({i, j, k});
  return out;
}

KCochain slices_to_cochain(const std::vector<PolyMatrix>& slices) {
  const std::size_t n = slices.size();
  for (const auto& s : slices)
    if (s.rows() != n || s.cols() != n) throw DimensionMismatch("slice shapes differ from slice count");
  KCochain phi(n, 3);
  for (const auto& idx : ascending_tuples(n, 3)) phi.set(idx, slices[idx[0]](idx[1], idx[2]));
  // every slice entry must agree with the assembled form
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (slices[i](j, k) != phi.at({i, j, k}))
          throw InconsistentSlices("slice " + std::to_string(i + 1) + " entry (" + std::to_string(j + 1) + "," +
                                   std::to_string(k + 1) + ") is " + slices[i](j, k).to_string() +
                                   " but the assembled form gives " + phi.at({i, j, k}).to_string());
  return phi;
}

}  // namespace rqn
