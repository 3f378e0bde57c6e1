#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rqn/cochain.hpp"

namespace rqn {

struct Residual {
  std::string where;  // 1-based location, e.g. "i=2 (3,4)"
  Poly value;
};

// One named condition. Only nonzero residual entries are listed, so an
// empty list is the same as every residual vanishing identically.
struct ConditionResult {
  std::string name;
  std::vector<Residual> residuals;
  bool pass() const { return residuals.empty(); }
};

struct VerificationReport {
  std::vector<ConditionResult> conditions;
  bool pass() const;
  const ConditionResult* find(const std::string& name) const;
};

struct RqnStructure {
  std::shared_ptr<const LieAlgebra> algebra;
  Bivector r;
  KCochain phi;
  Endo n;

  static RqnStructure zero(std::shared_ptr<const LieAlgebra> L);
  void check_shapes() const;
  RqnStructure substitute(const std::map<std::string, Poly>& with) const;
  RqnStructure eval(const std::map<std::string, Rational>& at) const;
  bool operator==(const RqnStructure& o) const { return r == o.r && phi == o.phi && n == o.n; }
};

// Appends the nonzero entries of m labelled with `prefix`.
void collect(std::vector<Residual>& out, const std::string& prefix, const PolyMatrix& m);

ConditionResult check_cybe(const LieAlgebra& L, const Bivector& r);
// <r,r>(X^i, X^j, X^k) as S[k](i, j), built from the bracket and the dual bracket.
std::vector<PolyMatrix> schouten_oracle(const LieAlgebra& L, const Bivector& r);

// T(u, v) = [nu, nv] - n[nu, v] - n[u, nv] + n^2[u, v].
Vec torsion_on(const LieAlgebra& L, const Endo& n, const Vec& u, const Vec& v);
// T[m](i, j) is the m-th component of T(X_i, X_j).
std::vector<PolyMatrix> nijenhuis_torsion(const LieAlgebra& L, const Endo& n);
// Same layout for r#(phi#(X_i, X_j)).
std::vector<PolyMatrix> torsion_source(const Bivector& r, const KCochain& phi);

ConditionResult check_torsion_matrix_form(const LieAlgebra& L, const Bivector& r, const Endo& n, const KCochain& phi);
ConditionResult check_torsion_direct(const LieAlgebra& L, const Bivector& r, const Endo& n, const KCochain& phi);
ConditionResult check_closed(const LieAlgebra& L, const KCochain& phi, const std::string& name = "closed_phi");
ConditionResult check_compat_nr(const Bivector& r, const Endo& n);
ConditionResult check_concomitant(const LieAlgebra& L, const Bivector& r, const Endo& n);
// C(r,n)(X^i, X^j) from coadjoint actions; C[i][j] is a dual vector.
ConditionResult check_concomitant_direct(const LieAlgebra& L, const Bivector& r, const Endo& n);

// Matrix forms of closedness, kept as cross-checks against the direct coboundary.
ConditionResult closed_phi_matrix_form(const LieAlgebra& L, const KCochain& phi);
ConditionResult closed_inphi_printed_form(const LieAlgebra& L, const Endo& n, const KCochain& phi);

// cybe, torsion, closed_phi, closed_inphi, compat_nr, concomitant.
VerificationReport verify_rqn(const RqnStructure& s);

struct NrRmatrix {
  bool is_rmatrix;
  bool torsion_on_image_zero;
};
// Throws PreconditionFailed unless compat_nr and concomitant hold.
NrRmatrix check_nr_rmatrix(const LieAlgebra& L, const Bivector& r, const Endo& n);

// <<r, r'>> by polarising the CYBE residual.
ConditionResult check_schouten_pair(const LieAlgebra& L, const Bivector& r1, const Bivector& r2);
// [n,n'] (torsion of the sum, written out term by term) against the four r#phi# products.
ConditionResult check_nijenhuis_concomitant(const LieAlgebra& L, const RqnStructure& s1, const RqnStructure& s2);
VerificationReport check_pair_compat(const RqnStructure& s1, const RqnStructure& s2);

}  // namespace rqn
