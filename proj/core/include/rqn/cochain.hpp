#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rqn/lie.hpp"

namespace rqn {

using Index = std::vector<std::size_t>;  // 0-based

// Skew k-linear form on a dim-dimensional algebra, stored on strictly
// ascending index tuples. X^{i1} ^ ... ^ X^{ik} evaluates to 1 on
// (X_{i1}, ..., X_{ik}).
class KCochain {
 public:
  KCochain() = default;
  KCochain(std::size_t dim, std::size_t degree);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<Index, Poly>& components() const { return c_; }

  // Value on basis vectors in any order; repeated indices give 0.
  Poly at(const Index& idx) const;
  // Set by any ordering of distinct indices; the sign follows the permutation.
  void set(const Index& idx, const Poly& v);
  void add(const Index& idx, const Poly& v);

  bool is_zero() const { return c_.empty(); }
  KCochain operator+(const KCochain& o) const;
  KCochain operator-(const KCochain& o) const;
  KCochain operator*(const Poly& s) const;
  KCochain operator-() const { return *this * Poly(-1); }
  bool operator==(const KCochain& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && c_ == o.c_;
  }
  bool operator!=(const KCochain& o) const { return !(*this == o); }
  KCochain substitute(const std::map<std::string, Poly>& with) const;
  KCochain eval(const std::map<std::string, Rational>& at) const;

 private:
  std::size_t dim_ = 0, degree_ = 0;
  std::map<Index, Poly> c_;
};

// All strictly ascending k-tuples from {0..n-1} in lexicographic order.
std::vector<Index> ascending_tuples(std::size_t n, std::size_t k);

KCochain coboundary(const LieAlgebra& L, const KCochain& c);
bool is_cocycle(const LieAlgebra& L, const KCochain& c);
KCochain interior_n(const KCochain& phi, const Endo& n);

// Matrix of the coboundary from degree k to k+1 in the ascending-tuple bases.
// Entries are polynomials when the algebra is parameterized.
PolyMatrix coboundary_matrix(const LieAlgebra& L, std::size_t k);

// nullopt when the target is not a coboundary (or not even a cocycle).
std::optional<KCochain> solve_coboundary(const LieAlgebra& L, const KCochain& target);

struct CohomologyDims {
  std::size_t cochains;    // dim C^k
  std::size_t cocycles;    // dim Z^k
  std::size_t coboundaries;  // dim B^k, image of C^{k-1}
  std::size_t betti() const { return cocycles - coboundaries; }
};
CohomologyDims cohomology_dims(const LieAlgebra& L, std::size_t k);

// (phi_i)_{jk} = phi_{ijk}.
std::vector<PolyMatrix> phi_slices(const KCochain& phi);
KCochain slices_to_cochain(const std::vector<PolyMatrix>& slices);

}  // namespace rqn
