#pragma once

#include <functional>
#include <memory>
#include <string>

#include <json.hpp>

#include "rqn/double.hpp"
#include "rqn/equivalence.hpp"

namespace rqn {

using json = nlohmann::json;
using AlgebraResolver = std::function<std::shared_ptr<const LieAlgebra>(const json&)>;

Poly poly_from_json(const json& j);
PolyMatrix matrix_from_json(const json& rows);
json to_json(const PolyMatrix& m);

LieAlgebra algebra_from_json(const json& j);
json to_json(const LieAlgebra& L);

KCochain cochain_from_json(const json& j, std::size_t dim);
json to_json(const KCochain& c);

Bivector bivector_from_json(const json& entries, std::size_t dim);
json to_json(const Bivector& r);

Endo endo_from_json(const json& rows, std::size_t dim);

// {"algebra": name-or-inline, "r": [...], "n": [[...]], "phi": cochain}. Missing
// parts default to zero.
RqnStructure structure_from_json(const json& j, const AlgebraResolver& resolve);
json to_json(const RqnStructure& s);

AutoFamily autofamily_from_json(const json& j, const AlgebraResolver& resolve);

json to_json(const ConditionResult& c);
json to_json(const VerificationReport& r);

json read_json_file(const std::string& path);

}  // namespace rqn
