#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rqn/json_io.hpp"

namespace rqn {

struct Fixture {
  std::string id;
  std::string kind;  // cybe, rqn, coboundary, gc, double_j
  std::string algebra;
  std::string provenance;
  std::vector<std::string> params;
  std::vector<std::string> constraints;  // informational only
  json doc;
};

class Catalog {
 public:
  // A4_1, A4_8, II_plus_R, abelian4.
  static Catalog builtin();
  // Built-in algebras plus everything under data_dir/{algebras,automorphisms,fixtures}.
  static Catalog load(const std::filesystem::path& data_dir);
  // $RQN_DATA_DIR if set, otherwise the directory configured at build time.
  static std::filesystem::path default_data_dir();

  std::vector<std::string> algebra_names() const;
  std::vector<std::string> family_names() const;
  std::vector<std::string> fixture_ids() const;
  std::vector<std::string> list() const;

  std::shared_ptr<const LieAlgebra> algebra(const std::string& name) const;
  std::shared_ptr<const AutoFamily> family(const std::string& name) const;
  const Fixture& fixture(const std::string& id) const;

  using Entry = std::variant<std::shared_ptr<const LieAlgebra>, std::shared_ptr<const AutoFamily>, const Fixture*>;
  Entry get(const std::string& name) const;

  // Resolves a name or an inline algebra document.
  AlgebraResolver resolver() const;

  void add_algebra(std::shared_ptr<const LieAlgebra> L);
  void add_family(std::shared_ptr<const AutoFamily> f);
  void add_fixture(Fixture f);

 private:
  std::map<std::string, std::shared_ptr<const LieAlgebra>> algebras_;
  std::map<std::string, std::shared_ptr<const AutoFamily>> families_;
  std::map<std::string, Fixture> fixtures_;
};

Fixture fixture_from_json(const json& j);

struct FixtureOutcome {
  std::string id;
  std::string kind;
  std::string provenance;
  VerificationReport report;
  std::map<std::string, bool> expected;  // flag -> expected value
  std::map<std::string, bool> observed;
  json detail;  // kind-specific extras (solved theta, unsubstituted residuals, ...)
  bool as_expected() const { return expected == observed; }
};

FixtureOutcome run_fixture(const Catalog& c, const std::string& id);
// Runs in parallel on `jobs` threads; results come back in id order.
std::vector<FixtureOutcome> run_fixtures(const Catalog& c, const std::vector<std::string>& ids, unsigned jobs);

json to_json(const FixtureOutcome& o);

}  // namespace rqn
