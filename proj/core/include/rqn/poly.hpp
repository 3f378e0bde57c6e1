#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rqn/rational.hpp"

namespace rqn {

// Total order on parameter names: alphabetic prefix first, then the numeric
// suffix as a number, so n2 < n10 and a4 < a11 < a16.
bool var_less(std::string_view a, std::string_view b);

// Power product, kept sorted by var_less with positive exponents only.
class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  static Monomial var(std::string name, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return f_; }
  std::uint32_t degree() const;
  std::uint32_t degree_in(std::string_view name) const;
  bool is_one() const { return f_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial without(std::string_view name) const;
  // Factors named in `keep` only.
  Monomial restrict_to(const std::set<std::string>& keep) const;

  bool operator==(const Monomial& o) const { return f_ == o.f_; }
  std::string to_string() const;

 private:
  std::vector<Factor> f_;
};

// Graded lexicographic comparison; true when a ranks strictly above b.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

// Multivariate polynomial over Q. Terms are stored leading-first in grlex
// order with no zero coefficients, so equality is structural.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly var(const std::string& name);
  static Poly monomial(const Monomial& m, const Rational& c);
  static Poly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; throws ParameterizedAlgebra otherwise.
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;
  const std::vector<Term>& terms() const { return terms_; }
  std::set<std::string> variables() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::string_view name) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(const std::map<std::string, Rational>& at) const;
  // Replace the listed variables; others stay symbolic.
  Poly substitute(const std::map<std::string, Poly>& with) const;
  // den^d * p(name = num/den) where d is the degree of p in name.
  Poly substitute_cleared(const std::string& name, const Poly& num, const Poly& den) const;

  // Group terms by their part in `outer`: returns outer-monomial -> coefficient
  // polynomial in the remaining variables.
  std::map<Monomial, Poly, GrlexGreater> split(const std::set<std::string>& outer) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);
Rational poly_eval(const Poly& p, const std::map<std::string, Rational>& at);

}  // namespace rqn
