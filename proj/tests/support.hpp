#pragma once

#include <random>
#include <string>
#include <vector>

#include "rqn/catalog.hpp"

namespace rqn::test {

inline const Catalog& catalog() {
  static const Catalog c = Catalog::load(RQN_TEST_DATA_DIR);
  return c;
}

inline std::shared_ptr<const LieAlgebra> alg(const std::string& name) { return catalog().algebra(name); }

inline Poly P(const std::string& s) { return Poly::parse(s); }

inline Vec basis(std::size_t n, std::size_t i) { return unit_vec(n, i); }

inline Rational rand_q(std::mt19937_64& g, int h = 5) {
  std::uniform_int_distribution<int> num(-h, h), den(1, h);
  return make_rational(num(g), den(g));
}

// Small random polynomial in the given variables.
inline Poly rand_poly(std::mt19937_64& g, const std::vector<std::string>& vars, int terms = 3, int maxdeg = 2) {
  std::uniform_int_distribution<int> deg(0, maxdeg), pick(0, static_cast<int>(vars.size()) - 1);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Poly m(rand_q(g));
    int d = deg(g);
    for (int k = 0; k < d && !vars.empty(); ++k) m *= Poly::var(vars[pick(g)]);
    p += m;
  }
  return p;
}

inline Bivector rand_bivector(std::mt19937_64& g, std::size_t n, int h = 2) {
  std::vector<std::tuple<int, int, Poly>> e;
  std::uniform_int_distribution<int> keep(0, 2);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (keep(g)) e.emplace_back(static_cast<int>(i), static_cast<int>(j), Poly(rand_q(g, h)));
  return Bivector::from_entries(n, e);
}

inline Endo rand_endo(std::mt19937_64& g, std::size_t n, int h = 2) {
  PolyMatrix m(n, n);
  std::uniform_int_distribution<int> keep(0, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(g)) m(i, j) = Poly(rand_q(g, h));
  return Endo{m};
}

inline KCochain rand_cochain(std::mt19937_64& g, std::size_t n, std::size_t k, const std::vector<std::string>& vars) {
  KCochain c(n, k);
  for (const auto& idx : ascending_tuples(n, k)) c.set(idx, rand_poly(g, vars, 2, 1));
  return c;
}

inline Fixture fixture(const std::string& id) { return catalog().fixture(id); }

inline RqnStructure structure_of(const std::string& id) {
  return structure_from_json(catalog().fixture(id).doc, catalog().resolver());
}

}  // namespace rqn::test

namespace rqn {

// Readable gtest failure messages.
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const KCochain& c, std::ostream* os) { *os << to_json(c).dump(); }
inline void PrintTo(const PolyMatrix& m, std::ostream* os) { *os << to_json(m).dump(); }

}  // namespace rqn
