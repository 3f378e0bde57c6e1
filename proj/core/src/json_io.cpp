#include "rqn/json_io.hpp"

#include <fstream>

#include "rqn/errors.hpp"

namespace rqn {

namespace {

template <class F>
auto schema(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

std::size_t index1(const json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  auto v = j.get<long>();
  if (v < 1 || v > static_cast<long>(dim)) throw SchemaError(std::string(what) + " out of range");
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

Poly poly_from_json(const json& j) {
  if (j.is_string()) return Poly::parse(j.get<std::string>());
  if (j.is_number_integer()) return Poly(j.get<long>());
  throw SchemaError("expected a polynomial literal string, got " + j.dump());
}

PolyMatrix matrix_from_json(const json& rows) {
  return schema("matrix", [&] {
    if (!rows.is_array() || rows.empty()) throw SchemaError("matrix must be a non-empty array of rows");
    std::vector<std::vector<Poly>> r;
    for (const auto& row : rows) {
      if (!row.is_array()) throw SchemaError("matrix row must be an array");
      std::vector<Poly> pr;
      for (const auto& e : row) pr.push_back(poly_from_json(e));
      r.push_back(std::move(pr));
    }
    return PolyMatrix::from_rows(r);
  });
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

LieAlgebra algebra_from_json(const json& j) {
  return schema("algebra", [&] {
    if (!j.is_object()) throw SchemaError("algebra document must be an object");
    auto name = j.at("name").get<std::string>();
    auto dim = j.at("dim").get<long>();
    if (dim < 1) throw SchemaError("dim must be positive");
    std::vector<std::string> params;
    if (j.contains("params")) params = j.at("params").get<std::vector<std::string>>();
    std::vector<BracketEntry> br;
    for (const auto& b : j.at("brackets"))
      br.push_back({b.at("i").get<int>(), b.at("j").get<int>(), b.at("k").get<int>(), poly_from_json(b.at("c"))});
    return LieAlgebra::from_brackets(name, static_cast<std::size_t>(dim), br, params);
  });
}

json to_json(const LieAlgebra& L) {
  json br = json::array();
  for (const auto& b : L.brackets()) br.push_back({{"i", b.i}, {"j", b.j}, {"k", b.k}, {"c", b.c.to_string()}});
  return {{"name", L.name()}, {"dim", L.dim()}, {"params", L.params()}, {"brackets", br}};
}

KCochain cochain_from_json(const json& j, std::size_t dim) {
  return schema("cochain", [&] {
    auto deg = j.at("degree").get<long>();
    if (deg < 0 || deg > static_cast<long>(dim)) throw SchemaError("cochain degree out of range");
    KCochain c(dim, static_cast<std::size_t>(deg));
    for (const auto& comp : j.at("components")) {
      Index idx;
      for (const auto& v : comp.at("idx")) idx.push_back(index1(v, dim, "cochain index"));
      if (idx.size() != c.degree()) throw SchemaError("cochain index has the wrong length");
      for (std::size_t q = 1; q < idx.size(); ++q)
        if (idx[q - 1] >= idx[q]) throw SchemaError("cochain indices must be strictly ascending");
      c.add(idx, poly_from_json(comp.at("c")));
    }
    return c;
  });
}

json to_json(const KCochain& c) {
  json comps = json::array();
  for (const auto& [idx, v] : c.components()) {
    json ix = json::array();
    for (auto i : idx) ix.push_back(i + 1);
    comps.push_back({{"idx", ix}, {"c", v.to_string()}});
  }
  return {{"degree", c.degree()}, {"components", comps}};
}

Bivector bivector_from_json(const json& entries, std::size_t dim) {
  return schema("bivector", [&] {
    std::vector<std::tuple<int, int, Poly>> e;
    for (const auto& x : entries) e.emplace_back(x.at("i").get<int>(), x.at("j").get<int>(), poly_from_json(x.at("c")));
    return Bivector::from_entries(dim, e);
  });
}

json to_json(const Bivector& r) {
  json out = json::array();
  const auto& R = r.matrix();
  for (std::size_t i = 0; i < R.rows(); ++i)
    for (std::size_t j = i + 1; j < R.cols(); ++j)
      if (!R(i, j).is_zero()) out.push_back({{"i", i + 1}, {"j", j + 1}, {"c", R(i, j).to_string()}});
  return out;
}

Endo endo_from_json(const json& rows, std::size_t dim) {
  PolyMatrix m = matrix_from_json(rows);
  if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("n must be dim x dim");
  return Endo{m};
}

RqnStructure structure_from_json(const json& j, const AlgebraResolver& resolve) {
  return schema("structure", [&] {
    if (!j.is_object()) throw SchemaError("structure document must be an object");
    auto L = resolve(j.at("algebra"));
    RqnStructure s = RqnStructure::zero(L);
    const std::size_t d = L->dim();
    if (j.contains("r")) s.r = bivector_from_json(j.at("r"), d);
    if (j.contains("n")) s.n = endo_from_json(j.at("n"), d);
    if (j.contains("phi")) s.phi = cochain_from_json(j.at("phi"), d);
    s.check_shapes();
    return s;
  });
}

json to_json(const RqnStructure& s) {
  return {{"algebra", s.algebra->name()}, {"r", to_json(s.r)}, {"n", to_json(s.n.n)}, {"phi", to_json(s.phi)}};
}

AutoFamily autofamily_from_json(const json& j, const AlgebraResolver& resolve) {
  return schema("automorphism family", [&] {
    auto L = resolve(j.at("algebra"));
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : L->name() + "_aut";
    auto params = j.at("params").get<std::vector<std::string>>();
    PolyMatrix m = matrix_from_json(j.at("matrix"));
    std::vector<Poly> nv;
    if (j.contains("nonvanishing"))
      for (const auto& p : j.at("nonvanishing")) nv.push_back(poly_from_json(p));
    return AutoFamily(name, L, params, m, nv);
  });
}

json to_json(const ConditionResult& c) {
  json res = json::array();
  for (const auto& r : c.residuals) res.push_back({{"where", r.where}, {"value", r.value.to_string()}});
  return {{"name", c.name}, {"pass", c.pass()}, {"residuals", res}};
}

json to_json(const VerificationReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions) conds.push_back(to_json(c));
  return {{"pass", r.pass()}, {"conditions", conds}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace rqn
