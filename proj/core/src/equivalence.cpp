#include "rqn/equivalence.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>

#include "rqn/errors.hpp"
#include "rqn/linalg.hpp"

namespace rqn {

PhiAction parse_phi_action(const std::string& s) {
  if (s == "fifth-step") return PhiAction::fifth_step;
  if (s == "diagram") return PhiAction::diagram;
  throw InputError("unknown phi action '" + s + "' (expected fifth-step or diagram)");
}

std::string to_string(PhiAction a) { return a == PhiAction::fifth_step ? "fifth-step" : "diagram"; }

std::vector<Residual> automorphism_residuals(const LieAlgebra& L, const PolyMatrix& A) {
  const std::size_t n = L.dim();
  if (A.rows() != n || A.cols() != n) throw DimensionMismatch("automorphism matrix has the wrong size");
  std::vector<Residual> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = A * bracket(L, unit_vec(n, i), unit_vec(n, j));
      Vec v = vec_sub(lhs, bracket(L, A.col(i), A.col(j)));
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero())
          out.push_back({"[X" + std::to_string(i + 1) + ",X" + std::to_string(j + 1) + "] component " +
                             std::to_string(k + 1),
                         v[k]});
    }
  return out;
}

AutoFamily::AutoFamily(std::string name, std::shared_ptr<const LieAlgebra> algebra, std::vector<std::string> params,
                       PolyMatrix matrix, std::vector<Poly> nonvanishing)
    : name_(std::move(name)),
      algebra_(std::move(algebra)),
      params_(std::move(params)),
      matrix_(std::move(matrix)),
      nonvanishing_(std::move(nonvanishing)) {
  auto bad = automorphism_residuals(*algebra_, matrix_);
  if (!bad.empty())
    throw NotAutomorphism(name_ + " is not an automorphism family: " + bad[0].where + " leaves " +
                          bad[0].value.to_string());
}

void Witness::validate() const {
  if (!family) throw SchemaError("witness without a family");
  for (const auto& p : family->params())
    if (!assignment.count(p)) throw SchemaError("witness does not assign " + p);
  for (const auto& c : family->nonvanishing())
    if (c.eval(assignment) == 0) throw SchemaError("witness violates " + c.to_string() + " != 0");
}

PolyMatrix Witness::instance() const {
  validate();
  return family->matrix().eval(assignment);
}

namespace {

// (A^* phi)_{ijk} = sum A_{ai} A_{bj} A_{ck} phi_{abc}
KCochain pullback(const PolyMatrix& A, const KCochain& phi) {
  const std::size_t n = phi.dim();
  KCochain out(n, 3);
  for (const auto& idx : ascending_tuples(n, 3)) {
    Poly sum;
    for (const auto& [abc, v] : phi.components()) {
      // antisymmetrise over the orderings of abc
      const std::size_t a = abc[0], b = abc[1], c = abc[2];
      auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
        return A(x, idx[0]) * A(y, idx[1]) * A(z, idx[2]);
      };
      Poly det3 = term(a, b, c) - term(a, c, b) - term(b, a, c) + term(b, c, a) + term(c, a, b) - term(c, b, a);
      if (!det3.is_zero()) sum += det3 * v;
    }
    out.set(idx, sum);
  }
  return out;
}

std::vector<PolyMatrix> fifth_step_slices(const PolyMatrix& A, const KCochain& phi) {
  auto s = phi_slices(phi);
  const PolyMatrix At = A.transpose();
  for (auto& m : s) m = At * m * A;
  return s;
}

void require_auto(const LieAlgebra& L, const PolyMatrix& A) {
  auto bad = automorphism_residuals(L, A);
  if (!bad.empty()) throw NotAutomorphism("matrix is not an automorphism: " + bad[0].where + " leaves " +
                                          bad[0].value.to_string());
}

}  // namespace

RqnStructure apply_auto(const PolyMatrix& A, const RqnStructure& s, PhiAction action) {
  s.check_shapes();
  const LieAlgebra& L = *s.algebra;
  if (A.rows() != L.dim() || A.cols() != L.dim()) throw DimensionMismatch("automorphism matrix has the wrong size");
  if (!A.is_constant()) throw InputError("apply_auto needs a concrete matrix");
  PolyMatrix Ainv = inverse(A);
  require_auto(L, A);
  RqnStructure out;
  out.algebra = s.algebra;
  out.r = Bivector(A * s.r.matrix() * A.transpose());
  out.n = Endo{A * s.n.n * Ainv};
  if (action == PhiAction::fifth_step)
    out.phi = slices_to_cochain(fifth_step_slices(A, s.phi));
  else
    out.phi = pullback(Ainv, s.phi);
  return out;
}

bool verify_equivalence(const Witness& w, const RqnStructure& s, const RqnStructure& s2, PhiAction action) {
  if (!(*s.algebra == *s2.algebra)) throw AlgebraMismatch("structures live on different algebras");
  try {
    return apply_auto(w.instance(), s, action) == s2;
  } catch (const InconsistentSlices&) {
    return false;
  }
}

std::vector<Poly> equivalence_constraints(const AutoFamily& f, const RqnStructure& s, const RqnStructure& s2,
                                          PhiAction action) {
  s.check_shapes();
  s2.check_shapes();
  if (!(*s.algebra == *s2.algebra) || !(*f.algebra() == *s.algebra))
    throw AlgebraMismatch("family and structures live on different algebras");
  const PolyMatrix& A = f.matrix();
  std::vector<Poly> raw;
  auto take = [&raw](const PolyMatrix& m) {
    for (const auto& p : m.entries())
      if (!p.is_zero()) raw.push_back(p);
  };
  take(A * s.r.matrix() * A.transpose() - s2.r.matrix());
  take(A * s.n.n - s2.n.n * A);
  if (action == PhiAction::fifth_step) {
    auto sl = fifth_step_slices(A, s.phi);
    auto target = phi_slices(s2.phi);
    for (std::size_t i = 0; i < sl.size(); ++i) take(sl[i] - target[i]);
  } else {
    KCochain dphi = s.phi - pullback(A, s2.phi);
    for (const auto& [_, v] : dphi.components()) raw.push_back(v);
  }
  std::vector<Poly> out;
  std::set<std::string> seen;
  for (const auto& p : raw) {
    // canonical sign: leading coefficient positive
    Poly q = p.terms().front().second < 0 ? -p : p;
    if (seen.insert(q.to_string()).second) out.push_back(q);
  }
  return out;
}

namespace {

Rational draw(std::mt19937_64& rng, unsigned height, bool nonzero) {
  std::uniform_int_distribution<long> num(-static_cast<long>(height), static_cast<long>(height));
  std::uniform_int_distribution<long> den(1, std::max<long>(1, height));
  for (;;) {
    long p = num(rng);
    if (nonzero && p == 0) continue;
    return make_rational(p, den(rng));
  }
}

// One attempt: propagate linear constraints, otherwise fix the free parameter
// of highest degree. `rng == nullptr` gives the deterministic probe that
// prefers 1 for parameters in nonvanishing constraints and 0 elsewhere.
std::optional<std::map<std::string, Rational>> attempt(const AutoFamily& f, const std::vector<Poly>& system,
                                                       std::mt19937_64* rng, unsigned height) {
  std::set<std::string> fam(f.params().begin(), f.params().end());
  std::set<std::string> nonzero;
  for (const auto& c : f.nonvanishing())
    for (const auto& v : c.variables()) nonzero.insert(v);
  std::map<std::string, Rational> at;
  for (;;) {
    std::map<std::string, Poly> sub;
    for (const auto& [k, v] : at) sub[k] = Poly(v);
    std::vector<Poly> live;
    for (const auto& p : system) {
      Poly q = p.substitute(sub);
      if (q.is_zero()) continue;
      if (q.is_constant()) return std::nullopt;
      live.push_back(q);
    }
    if (at.size() == fam.size()) {
      if (!live.empty()) return std::nullopt;
      return at;
    }
    bool progressed = false;
    for (const auto& q : live) {
      auto vars = q.variables();
      if (vars.size() != 1) continue;
      const std::string& v = *vars.begin();
      if (!fam.count(v) || q.degree_in(v) != 1) continue;
      Rational a = q.coefficient(Monomial::var(v)), b = q.coefficient(Monomial{});
      Rational x = -b / a;
      x.canonicalize();
      at[v] = x;
      progressed = true;
      break;
    }
    if (progressed) continue;
    std::string pick;
    std::uint32_t best = 0;
    for (const auto& v : f.params()) {
      if (at.count(v)) continue;
      std::uint32_t deg = 0;
      for (const auto& q : live) deg = std::max(deg, q.degree_in(v));
      if (pick.empty() || deg > best) {
        pick = v;
        best = deg;
      }
    }
    if (rng)
      at[pick] = draw(*rng, height, nonzero.count(pick) > 0);
    else
      at[pick] = nonzero.count(pick) ? Rational(1) : Rational(0);
  }
}

}  // namespace

std::optional<Witness> sample_search(const std::shared_ptr<const AutoFamily>& f, const RqnStructure& s,
                                     const RqnStructure& s2, const SearchOptions& opt) {
  // Split every constraint by monomials in the structure parameters: each
  // coefficient must vanish on its own.
  std::set<std::string> outer;
  auto cons = equivalence_constraints(*f, s, s2, opt.action);
  for (const auto& p : cons)
    for (const auto& v : p.variables())
      if (std::find(f->params().begin(), f->params().end(), v) == f->params().end()) outer.insert(v);
  std::vector<Poly> system;
  for (const auto& p : cons)
    for (auto& [_, c] : p.split(outer)) system.push_back(c);

  auto check = [&](const std::optional<std::map<std::string, Rational>>& at) -> std::optional<Witness> {
    if (!at) return std::nullopt;
    Witness w{f, *at};
    try {
      w.validate();
      if (verify_equivalence(w, s, s2, opt.action)) return w;
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  if (auto w = check(attempt(*f, system, nullptr, opt.height))) return w;

  auto run = [&](std::size_t idx) {
    std::seed_seq seq{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(idx)};
    std::mt19937_64 rng(seq);
    return check(attempt(*f, system, &rng, opt.height));
  };
  const std::size_t jobs = std::max(1u, opt.jobs);
  for (std::size_t base = 0; base < opt.budget; base += jobs) {
    std::vector<std::future<std::optional<Witness>>> batch;
    for (std::size_t k = base; k < std::min(opt.budget, base + jobs); ++k)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run, k));
    // first success in sample order keeps the result independent of scheduling
    for (auto& fut : batch)
      if (auto w = fut.get()) return w;
  }
  return std::nullopt;
}

}  // namespace rqn
