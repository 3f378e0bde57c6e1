#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rqn/structures.hpp"

namespace rqn {

// How an automorphism acts on the 3-form.
//   fifth_step: phi'_i = A^t phi_i A on each slice, slice index untouched.
//   diagram:    phi' = (A^{-1})^* phi, the pushforward of phi as a 3-form.
enum class PhiAction { fifth_step, diagram };
PhiAction parse_phi_action(const std::string& s);
std::string to_string(PhiAction a);

class AutoFamily {
 public:
  // Checks A[x,y] = [Ax,Ay] identically in the parameters; throws NotAutomorphism.
  AutoFamily(std::string name, std::shared_ptr<const LieAlgebra> algebra, std::vector<std::string> params,
             PolyMatrix matrix, std::vector<Poly> nonvanishing);

  const std::string& name() const { return name_; }
  const std::shared_ptr<const LieAlgebra>& algebra() const { return algebra_; }
  const std::vector<std::string>& params() const { return params_; }
  const PolyMatrix& matrix() const { return matrix_; }
  const std::vector<Poly>& nonvanishing() const { return nonvanishing_; }

 private:
  std::string name_;
  std::shared_ptr<const LieAlgebra> algebra_;
  std::vector<std::string> params_;
  PolyMatrix matrix_;
  std::vector<Poly> nonvanishing_;
};

// Residual entries of A[X_i,X_j] - [AX_i,AX_j]; empty when A is an automorphism.
std::vector<Residual> automorphism_residuals(const LieAlgebra& L, const PolyMatrix& A);

struct Witness {
  std::shared_ptr<const AutoFamily> family;
  std::map<std::string, Rational> assignment;

  // Throws SchemaError if a nonvanishing constraint evaluates to zero or a
  // parameter is missing.
  void validate() const;
  PolyMatrix instance() const;
};

RqnStructure apply_auto(const PolyMatrix& A, const RqnStructure& s, PhiAction action = PhiAction::fifth_step);
bool verify_equivalence(const Witness& w, const RqnStructure& s, const RqnStructure& s2,
                        PhiAction action = PhiAction::fifth_step);

// Cleared residual system: A r A^t - r', A n - n' A, and for phi either
// A^t phi_i A - phi'_i (fifth_step) or phi - A^* phi' (diagram). Deduplicated
// up to sign, in a fixed order.
std::vector<Poly> equivalence_constraints(const AutoFamily& f, const RqnStructure& s, const RqnStructure& s2,
                                          PhiAction action = PhiAction::fifth_step);

struct SearchOptions {
  std::size_t budget = 200;
  std::uint64_t seed = 0;
  unsigned height = 3;  // numerators and denominators drawn from 0..height
  unsigned jobs = 1;
  PhiAction action = PhiAction::fifth_step;
};

// Best effort. nullopt means nothing was found within budget, not that the
// structures are inequivalent.
std::optional<Witness> sample_search(const std::shared_ptr<const AutoFamily>& f, const RqnStructure& s,
                                     const RqnStructure& s2, const SearchOptions& opt);

}  // namespace rqn
