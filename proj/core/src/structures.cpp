#include "rqn/structures.hpp"

#include "rqn/errors.hpp"

namespace rqn {

bool VerificationReport::pass() const {
  for (const auto& c : conditions)
    if (!c.pass()) return false;
  return true;
}

const ConditionResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

RqnStructure RqnStructure::zero(std::shared_ptr<const LieAlgebra> L) {
  const std::size_t n = L->dim();
  return {std::move(L), Bivector::zero(n), KCochain(n, 3), Endo{PolyMatrix(n, n)}};
}

void RqnStructure::check_shapes() const {
  if (!algebra) throw SchemaError("structure has no algebra");
  const std::size_t d = algebra->dim();
  if (r.dim() != d || n.n.rows() != d || n.n.cols() != d || phi.dim() != d)
    throw DimensionMismatch("structure components do not match the algebra dimension");
  if (phi.degree() != 3) throw DimensionMismatch("phi must be a 3-cochain");
}

RqnStructure RqnStructure::substitute(const std::map<std::string, Poly>& with) const {
  return {algebra, Bivector(r.matrix().substitute(with)), phi.substitute(with), Endo{n.n.substitute(with)}};
}

RqnStructure RqnStructure::eval(const std::map<std::string, Rational>& at) const {
  return {algebra, Bivector(r.matrix().eval(at)), phi.eval(at), Endo{n.n.eval(at)}};
}

void collect(std::vector<Residual>& out, const std::string& prefix, const PolyMatrix& m) {
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b)
      if (!m(a, b).is_zero())
        out.push_back({prefix + "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")", m(a, b)});
}

namespace {

std::string at_i(std::size_t i) { return "i=" + std::to_string(i + 1) + " "; }

void need_dims(const LieAlgebra& L, std::size_t d) {
  if (L.dim() != d) throw DimensionMismatch("tensor and algebra dimensions differ");
}

// R Y^i R - sum_l R X_l R(i,l) - sum_l R(i,l) X_l^t R
std::vector<PolyMatrix> cybe_residuals(const LieAlgebra& L, const PolyMatrix& R) {
  const std::size_t n = L.dim();
  auto ad = adjoint_matrices(L);
  std::vector<PolyMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix m = R * ad.Y[i] * R;
    for (std::size_t l = 0; l < n; ++l) {
      if (R(i, l).is_zero()) continue;
      m -= R * ad.X[l] * R(i, l);
      m -= ad.X[l].transpose() * R * R(i, l);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

ConditionResult check_cybe(const LieAlgebra& L, const Bivector& r) {
  need_dims(L, r.dim());
  ConditionResult c{"cybe", {}};
  auto res = cybe_residuals(L, r.matrix());
  for (std::size_t i = 0; i < res.size(); ++i) collect(c.residuals, at_i(i), res[i]);
  return c;
}

std::vector<PolyMatrix> schouten_oracle(const LieAlgebra& L, const Bivector& r) {
  const std::size_t n = L.dim();
  need_dims(L, r.dim());
  const PolyMatrix sharp = r.sharp();
  const DualStructure dual = sklyanin_bracket(L, r);
  std::vector<PolyMatrix> S(n, PolyMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = bracket(L, sharp.col(i), sharp.col(j));
      Vec dij(n);
      for (std::size_t k = 0; k < n; ++k) dij[k] = dual.at(i, j, k);
      Vec v = vec_sub(lhs, sharp * dij);
      for (std::size_t k = 0; k < n; ++k) S[k](i, j) = v[k];
    }
  return S;
}

Vec torsion_on(const LieAlgebra& L, const Endo& n, const Vec& u, const Vec& v) {
  const PolyMatrix& N = n.n;
  Vec nu = N * u, nv = N * v;
  Vec t = bracket(L, nu, nv);
  t = vec_sub(t, N * bracket(L, nu, v));
  t = vec_sub(t, N * bracket(L, u, nv));
  t = vec_add(t, N * (N * bracket(L, u, v)));
  return t;
}

std::vector<PolyMatrix> nijenhuis_torsion(const LieAlgebra& L, const Endo& n) {
  const std::size_t d = L.dim();
  need_dims(L, n.dim());
  std::vector<PolyMatrix> T(d, PolyMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec t = torsion_on(L, n, unit_vec(d, i), unit_vec(d, j));
      for (std::size_t m = 0; m < d; ++m) {
        T[m](i, j) = t[m];
        T[m](j, i) = -t[m];
      }
    }
  return T;
}

std::vector<PolyMatrix> torsion_source(const Bivector& r, const KCochain& phi) {
  const std::size_t d = r.dim();
  const PolyMatrix& R = r.matrix();
  std::vector<PolyMatrix> out(d, PolyMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t m = 0; m < d; ++m) {
        Poly s;
        for (std::size_t k = 0; k < d; ++k)
          if (!R(k, m).is_zero()) s += R(k, m) * phi.at({i, j, k});
        out[m](i, j) = s;
      }
  return out;
}

// sum_l (-n^l_i n^t X_l + n^l_i X_l n^t) - X_i n^t n^t + n^t X_i n^t - phi_i r,
// with n^l_i = N(l, i).
ConditionResult check_torsion_matrix_form(const LieAlgebra& L, const Bivector& r, const Endo& n, const KCochain& phi) {
  const std::size_t d = L.dim();
  need_dims(L, r.dim());
  need_dims(L, n.dim());
  auto ad = adjoint_matrices(L);
  const PolyMatrix& N = n.n;
  const PolyMatrix Nt = N.transpose();
  auto slices = phi_slices(phi);
  ConditionResult c{"torsion", {}};
  for (std::size_t i = 0; i < d; ++i) {
    PolyMatrix m = Nt * ad.X[i] * Nt - ad.X[i] * Nt * Nt - slices[i] * r.matrix();
    for (std::size_t l = 0; l < d; ++l) {
      if (N(l, i).is_zero()) continue;
      m += (ad.X[l] * Nt - Nt * ad.X[l]) * N(l, i);
    }
    collect(c.residuals, at_i(i), m);
  }
  return c;
}

ConditionResult check_torsion_direct(const LieAlgebra& L, const Bivector& r, const Endo& n, const KCochain& phi) {
  auto T = nijenhuis_torsion(L, n);
  auto S = torsion_source(r, phi);
  ConditionResult c{"torsion_direct", {}};
  for (std::size_t m = 0; m < T.size(); ++m) collect(c.residuals, "component " + std::to_string(m + 1) + " ", T[m] - S[m]);
  return c;
}

ConditionResult check_closed(const LieAlgebra& L, const KCochain& phi, const std::string& name) {
  ConditionResult c{name, {}};
  KCochain d = coboundary(L, phi);
  for (const auto& [idx, v] : d.components()) {
    std::string w = "(";
    for (std::size_t q = 0; q < idx.size(); ++q) w += (q ? "," : "") + std::to_string(idx[q] + 1);
    c.residuals.push_back({w + ")", v});
  }
  return c;
}

ConditionResult check_compat_nr(const Bivector& r, const Endo& n) {
  if (r.dim() != n.dim()) throw DimensionMismatch("bivector and endomorphism dimensions differ");
  ConditionResult c{"compat_nr", {}};
  collect(c.residuals, "", n.n * r.matrix() - r.matrix() * n.n.transpose());
  return c;
}

// sum_j (r X_j n^j_i + X_j^t n^j_i r) - r X_i n^t - n X_i^t r
ConditionResult check_concomitant(const LieAlgebra& L, const Bivector& r, const Endo& n) {
  const std::size_t d = L.dim();
  need_dims(L, r.dim());
  need_dims(L, n.dim());
  auto ad = adjoint_matrices(L);
  const PolyMatrix& R = r.matrix();
  const PolyMatrix& N = n.n;
  ConditionResult c{"concomitant", {}};
  for (std::size_t i = 0; i < d; ++i) {
    PolyMatrix m = -(R * ad.X[i] * N.transpose()) - N * ad.X[i].transpose() * R;
    for (std::size_t j = 0; j < d; ++j) {
      if (N(j, i).is_zero()) continue;
      m += (R * ad.X[j] + ad.X[j].transpose() * R) * N(j, i);
    }
    collect(c.residuals, at_i(i), m);
  }
  return c;
}

// ad*_{r#a} n^t b - ad*_{r#b} n^t a - n^t ad*_{r#a} b + n^t ad*_{r#b} a
ConditionResult check_concomitant_direct(const LieAlgebra& L, const Bivector& r, const Endo& n) {
  const std::size_t d = L.dim();
  const PolyMatrix sharp = r.sharp();
  const PolyMatrix Nt = n.n.transpose();
  std::vector<PolyMatrix> co(d);
  for (std::size_t i = 0; i < d; ++i) co[i] = coadjoint(L, sharp.col(i));
  ConditionResult c{"concomitant_direct", {}};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec a = unit_vec(d, i), b = unit_vec(d, j);
      Vec v = co[i] * (Nt * b);
      v = vec_sub(v, co[j] * (Nt * a));
      v = vec_sub(v, Nt * (co[i] * b));
      v = vec_add(v, Nt * (co[j] * a));
      for (std::size_t k = 0; k < d; ++k)
        if (!v[k].is_zero())
          c.residuals.push_back({"(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") component " +
                                     std::to_string(k + 1),
                                 v[k]});
    }
  return c;
}

// X_j phi_k - X_k phi_j + Y^m (phi_m)_{jk} + (Y^m)_{jk} phi_m + phi_k X_j^t - phi_j X_k^t
ConditionResult closed_phi_matrix_form(const LieAlgebra& L, const KCochain& phi) {
  const std::size_t d = L.dim();
  auto ad = adjoint_matrices(L);
  auto s = phi_slices(phi);
  ConditionResult c{"closed_phi_matrix_form", {}};
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      PolyMatrix m = ad.X[j] * s[k] - ad.X[k] * s[j] + s[k] * ad.X[j].transpose() - s[j] * ad.X[k].transpose();
      for (std::size_t q = 0; q < d; ++q) {
        if (!s[q](j, k).is_zero()) m += ad.Y[q] * s[q](j, k);
        if (!ad.Y[q](j, k).is_zero()) m += s[q] * ad.Y[q](j, k);
      }
      collect(c.residuals, "j=" + std::to_string(j + 1) + " k=" + std::to_string(k + 1) + " ", m);
    }
  return c;
}

// The expanded closedness condition for i_n phi, term for term as printed,
// including its repeated summands. n_k^s is read as N(s, k) and (A)_k^s as A(k, s).
ConditionResult closed_inphi_printed_form(const LieAlgebra& L, const Endo& n, const KCochain& phi) {
  const std::size_t d = L.dim();
  auto ad = adjoint_matrices(L);
  auto s = phi_slices(phi);
  const PolyMatrix& N = n.n;
  const PolyMatrix Nt = N.transpose();
  auto ns = [&](std::size_t k) {  // sum_s n_k^s phi_s
    PolyMatrix m(d, d);
    for (std::size_t q = 0; q < d; ++q)
      if (!N(q, k).is_zero()) m += s[q] * N(q, k);
    return m;
  };
  ConditionResult c{"closed_inphi_printed_form", {}};
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const PolyMatrix& Xj = ad.X[j];
      const PolyMatrix& Xk = ad.X[k];
      PolyMatrix m = Xj * N * s[k] + Xj * ns(k) + Xj * s[k] * Nt - Xk * N * s[j] - Xk * ns(j) - Xk * s[j] * Nt;
      PolyMatrix XjN = Xj * N;
      for (std::size_t q = 0; q < d; ++q) {
        PolyMatrix nj = N * s[j], nq = N * s[q];
        m -= ad.Y[q] * nj(q, k);
        m += ad.Y[q] * nq(j, k);
        m -= ad.Y[q] * nq(k, j);
        if (!XjN(k, q).is_zero()) m += s[q] * XjN(k, q);
        if (!ad.Y[q](j, k).is_zero()) {
          m += N * s[q] * ad.Y[q](j, k);
          m += s[q] * Nt * ad.Y[q](j, k);
        }
      }
      m += N * s[k] * Xj.transpose() + N * s[k] * Xj.transpose() + ns(k) * Xj.transpose();
      m -= N * s[j] * Xk.transpose() + N * s[j] * Xk.transpose() + ns(j) * Xk.transpose();
      collect(c.residuals, "j=" + std::to_string(j + 1) + " k=" + std::to_string(k + 1) + " ", m);
    }
  return c;
}

VerificationReport verify_rqn(const RqnStructure& s) {
  s.check_shapes();
  const LieAlgebra& L = *s.algebra;
  VerificationReport rep;
  rep.conditions.push_back(check_cybe(L, s.r));
  rep.conditions.push_back(check_torsion_matrix_form(L, s.r, s.n, s.phi));
  rep.conditions.push_back(check_closed(L, s.phi, "closed_phi"));
  rep.conditions.push_back(check_closed(L, interior_n(s.phi, s.n), "closed_inphi"));
  rep.conditions.push_back(check_compat_nr(s.r, s.n));
  rep.conditions.push_back(check_concomitant(L, s.r, s.n));
  return rep;
}

NrRmatrix check_nr_rmatrix(const LieAlgebra& L, const Bivector& r, const Endo& n) {
  if (!check_compat_nr(r, n).pass()) throw PreconditionFailed("n r differs from r n^t");
  if (!check_concomitant(L, r, n).pass()) throw PreconditionFailed("concomitant of r and n does not vanish");
  PolyMatrix nr = n.n * r.matrix();
  if (!nr.is_antisymmetric()) throw PreconditionFailed("n r is not antisymmetric");
  NrRmatrix out{};
  out.is_rmatrix = check_cybe(L, Bivector(nr)).pass();
  const std::size_t d = L.dim();
  const PolyMatrix sharp = r.sharp();
  out.torsion_on_image_zero = true;
  for (std::size_t i = 0; i < d && out.torsion_on_image_zero; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!vec_is_zero(torsion_on(L, n, sharp.col(i), sharp.col(j)))) {
        out.torsion_on_image_zero = false;
        break;
      }
  return out;
}

ConditionResult check_schouten_pair(const LieAlgebra& L, const Bivector& r1, const Bivector& r2) {
  auto both = cybe_residuals(L, r1.matrix() + r2.matrix());
  auto a = cybe_residuals(L, r1.matrix());
  auto b = cybe_residuals(L, r2.matrix());
  ConditionResult c{"schouten_pair", {}};
  for (std::size_t i = 0; i < both.size(); ++i) collect(c.residuals, at_i(i), both[i] - a[i] - b[i]);
  return c;
}

ConditionResult check_nijenhuis_concomitant(const LieAlgebra& L, const RqnStructure& s1, const RqnStructure& s2) {
  const std::size_t d = L.dim();
  const Endo& n = s1.n;
  const Endo& m = s2.n;
  const PolyMatrix& N = n.n;
  const PolyMatrix& M = m.n;
  auto lhs_on = [&](const Vec& u, const Vec& v) {
    Vec t = vec_add(torsion_on(L, n, u, v), torsion_on(L, m, u, v));
    t = vec_add(t, bracket(L, M * u, N * v));
    t = vec_add(t, bracket(L, N * u, M * v));
    t = vec_sub(t, M * bracket(L, N * u, v));
    t = vec_sub(t, M * bracket(L, u, N * v));
    t = vec_sub(t, N * bracket(L, M * u, v));
    t = vec_sub(t, N * bracket(L, u, M * v));
    Vec uv = bracket(L, u, v);
    t = vec_add(t, N * (M * uv));
    t = vec_add(t, M * (N * uv));
    return t;
  };
  auto rhs = torsion_source(s1.r, s1.phi);
  auto add = [&](const std::vector<PolyMatrix>& x) {
    for (std::size_t k = 0; k < d; ++k) rhs[k] += x[k];
  };
  add(torsion_source(s1.r, s2.phi));
  add(torsion_source(s2.r, s1.phi));
  add(torsion_source(s2.r, s2.phi));
  ConditionResult c{"nijenhuis_concomitant", {}};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec t = lhs_on(unit_vec(d, i), unit_vec(d, j));
      for (std::size_t k = 0; k < d; ++k) {
        Poly v = t[k] - rhs[k](i, j);
        if (!v.is_zero())
          c.residuals.push_back({"(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") component " +
                                     std::to_string(k + 1),
                                 v});
      }
    }
  return c;
}

VerificationReport check_pair_compat(const RqnStructure& s1, const RqnStructure& s2) {
  s1.check_shapes();
  s2.check_shapes();
  if (!(*s1.algebra == *s2.algebra)) throw AlgebraMismatch("structures live on different algebras");
  const LieAlgebra& L = *s1.algebra;
  RqnStructure sum{s1.algebra, Bivector(s1.r.matrix() + s2.r.matrix()), s1.phi + s2.phi, Endo{s1.n.n + s2.n.n}};
  VerificationReport rep;
  for (auto c : verify_rqn(sum).conditions) {
    c.name = "sum." + c.name;
    rep.conditions.push_back(std::move(c));
  }
  rep.conditions.push_back(check_schouten_pair(L, s1.r, s2.r));
  rep.conditions.push_back(check_nijenhuis_concomitant(L, s1, s2));
  return rep;
}

}  // namespace rqn
