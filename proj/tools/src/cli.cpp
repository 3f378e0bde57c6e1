#include "rqn_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>

#include "rqn/catalog.hpp"
#include "rqn/errors.hpp"

namespace rqn::cli {

namespace {

namespace fs = std::filesystem;

struct Config {
  bool json_out = false;
  std::string phi_action = "fifth-step";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string data_dir;
};

struct Ctx {
  const Config& cfg;
  std::ostream& out;
  Catalog catalog;
};

void emit(Ctx& c, const json& j) { c.out << j.dump(2) << "\n"; }

std::shared_ptr<const LieAlgebra> resolve_algebra(const Ctx& c, const std::string& arg) {
  if (fs::path(arg).extension() == ".json" || fs::is_regular_file(arg))
    return std::make_shared<const LieAlgebra>(algebra_from_json(read_json_file(arg)));
  return c.catalog.algebra(arg);
}

// Structure files carry their own "algebra"; --algebra overrides it.
RqnStructure load_structure(const Ctx& c, const std::string& path, const std::string& algebra) {
  json j = read_json_file(path);
  if (!algebra.empty()) {
    auto L = resolve_algebra(c, algebra);
    return structure_from_json(j, [L](const json&) { return L; });
  }
  if (!j.contains("algebra")) throw SchemaError(path + ": no algebra given (use --algebra)");
  return structure_from_json(j, c.catalog.resolver());
}

void print_condition(std::ostream& out, const ConditionResult& cr, bool residuals) {
  out << "  " << cr.name << std::string(cr.name.size() < 16 ? 16 - cr.name.size() : 1, ' ')
      << (cr.pass() ? "ok" : "FAIL (" + std::to_string(cr.residuals.size()) + " nonzero)") << "\n";
  if (!residuals) return;
  for (const auto& r : cr.residuals) out << "    " << r.where << ": " << r.value.to_string() << "\n";
}

void print_report(std::ostream& out, const VerificationReport& rep, bool residuals = true) {
  for (const auto& cr : rep.conditions) print_condition(out, cr, residuals);
}

int code(bool pass) { return pass ? 0 : 1; }

int cmd_verify(Ctx& c, const std::string& structure, const std::string& algebra) {
  RqnStructure s = load_structure(c, structure, algebra);
  VerificationReport rep = verify_rqn(s);
  if (c.cfg.json_out) {
    json j = to_json(rep);
    j["algebra"] = s.algebra->name();
    emit(c, j);
  } else {
    c.out << "algebra " << s.algebra->name() << "\n";
    print_report(c.out, rep);
    c.out << "result: " << (rep.pass() ? "pass" : "fail") << "\n";
  }
  return code(rep.pass());
}

std::vector<std::string> select_fixtures(const Catalog& cat, const std::vector<std::string>& ids,
                                         const std::string& table) {
  if (!ids.empty()) {
    for (const auto& id : ids) cat.fixture(id);
    return ids;
  }
  std::vector<std::string> out;
  for (const auto& id : cat.fixture_ids())
    if (table.empty() || id.rfind(table + ".", 0) == 0) out.push_back(id);
  if (out.empty()) throw NotFound("no fixtures match " + table);
  return out;
}

int run_and_report(Ctx& c, const std::vector<std::string>& ids, bool verbose) {
  auto outcomes = run_fixtures(c.catalog, ids, c.cfg.jobs);
  bool all = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.as_expected(); });
  std::size_t good = std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.as_expected(); });
  if (c.cfg.json_out) {
    json arr = json::array();
    for (const auto& o : outcomes) arr.push_back(to_json(o));
    emit(c, {{"fixtures", arr},
             {"pass", all},
             {"seed", c.cfg.seed},
             {"summary", {{"total", outcomes.size()}, {"as_expected", good}}}});
    return code(all);
  }
  for (const auto& o : outcomes) {
    c.out << (o.as_expected() ? "ok    " : "FAIL  ") << o.id << "  (" << o.kind << ")\n";
    c.out << "  provenance: " << o.provenance << "\n";
    for (const auto& [flag, want] : o.expected) {
      auto it = o.observed.find(flag);
      bool got = it != o.observed.end() && it->second;
      if (verbose || got != want)
        c.out << "  " << flag << ": expected " << (want ? "true" : "false") << ", got " << (got ? "true" : "false")
              << "\n";
    }
    if (verbose || !o.as_expected()) print_report(c.out, o.report, verbose || !o.as_expected());
  }
  c.out << good << "/" << outcomes.size() << " fixtures as expected\n";
  return code(all);
}

int cmd_catalog_list(Ctx& c) {
  if (c.cfg.json_out) {
    emit(c, {{"algebras", c.catalog.algebra_names()},
             {"families", c.catalog.family_names()},
             {"fixtures", c.catalog.fixture_ids()}});
  } else {
    for (const auto& line : c.catalog.list()) c.out << line << "\n";
  }
  return 0;
}

Bivector load_bivector(const json& j, std::size_t dim) {
  return bivector_from_json(j.is_object() && j.contains("r") ? j.at("r") : j, dim);
}

int cmd_double_build(Ctx& c, const std::string& algebra, const std::string& rfile) {
  json doc = read_json_file(rfile);
  std::string alg = algebra;
  if (alg.empty() && doc.is_object() && doc.contains("algebra")) alg = doc.at("algebra").get<std::string>();
  if (alg.empty()) throw SchemaError("no algebra given (use --algebra)");
  auto L = resolve_algebra(c, alg);
  DoubleLie d = build_double(L, load_bivector(doc, L->dim()));
  const std::size_t n = L->dim();
  auto label = [n](int i) { return i <= static_cast<int>(n) ? "X" + std::to_string(i) : "X^" + std::to_string(i - n); };
  if (c.cfg.json_out) {
    json j = to_json(d.algebra);
    j["base"] = L->name();
    j["jacobi"] = true;
    emit(c, j);
    return 0;
  }
  c.out << "double of " << L->name() << " (basis X1..X" << n << ", X^1..X^" << n << ")\n";
  for (const auto& b : d.algebra.brackets())
    c.out << "  [" << label(b.i) << ", " << label(b.j) << "] = (" << b.c.to_string() << ") " << label(b.k) << "\n";
  c.out << "jacobi: ok\n";
  return 0;
}

int cmd_double_mybe(Ctx& c, const std::string& jfile, const std::string& algebra, const std::string& rfile,
                    const std::string& kstr) {
  json doc = read_json_file(jfile);
  json jm = doc.is_object() ? doc.at("J") : doc;
  std::string alg = algebra;
  if (alg.empty() && doc.is_object() && doc.contains("algebra")) alg = doc.at("algebra").get<std::string>();
  if (alg.empty()) throw SchemaError("no algebra given (use --algebra)");
  auto L = resolve_algebra(c, alg);
  json rdoc = !rfile.empty() ? read_json_file(rfile) : doc.value("r", json::array());
  DoubleLie d = build_double(L, load_bivector(rdoc, L->dim()));
  if (kstr.empty() && !(doc.is_object() && doc.contains("k"))) throw SchemaError("no k given (use --k)");
  Poly k = kstr.empty() ? poly_from_json(doc.at("k")) : Poly::parse(kstr);
  RMatrixJ J{matrix_from_json(jm)};
  VerificationReport rep;
  rep.conditions.push_back(check_mybe(d, J, k));
  for (auto& cr : check_j_algebraic(J, d, k).conditions) rep.conditions.push_back(std::move(cr));
  bool mybe = rep.conditions.front().pass();
  if (c.cfg.json_out) {
    json j = to_json(rep);
    j["pass"] = mybe;
    emit(c, j);
  } else {
    print_report(c.out, rep);
    c.out << "result: " << (mybe ? "R-matrix" : "not an R-matrix") << " for k = " << k.to_string() << "\n";
  }
  return code(mybe);
}

int cmd_double_gc(Ctx& c, const std::string& file, const std::string& algebra, const std::string& kstr) {
  json doc = read_json_file(file);
  std::string alg = algebra.empty() ? doc.value("algebra", std::string()) : algebra;
  if (alg.empty()) throw SchemaError("no algebra given (use --algebra)");
  auto L = resolve_algebra(c, alg);
  const std::size_t n = L->dim();
  Bivector r = doc.contains("r") ? bivector_from_json(doc.at("r"), n) : Bivector::zero(n);
  Endo e = doc.contains("n") ? endo_from_json(doc.at("n"), n) : Endo{PolyMatrix(n, n)};
  KCochain theta = doc.contains("theta") ? cochain_from_json(doc.at("theta"), n) : KCochain(n, 2);
  if (kstr.empty() && !doc.contains("k")) throw SchemaError("no k given (use --k)");
  Poly k = kstr.empty() ? poly_from_json(doc.at("k")) : Poly::parse(kstr);
  if (doc.contains("substitution")) {
    std::map<std::string, Poly> sub;
    for (const auto& [name, v] : doc.at("substitution").items()) sub[name] = poly_from_json(v);
    r = Bivector(r.matrix().substitute(sub));
    e = Endo{e.n.substitute(sub)};
    theta = theta.substitute(sub);
    k = k.substitute(sub);
  }
  ConditionResult cr = check_gc_conditions(*L, r, e, theta, k);
  if (c.cfg.json_out) {
    emit(c, to_json(cr));
  } else {
    print_condition(c.out, cr, true);
    c.out << "result: " << (cr.pass() ? "pass" : "fail") << "\n";
  }
  return code(cr.pass());
}

std::map<std::string, Rational> load_assignment(const json& j) {
  std::map<std::string, Rational> a;
  for (const auto& [k, v] : j.items()) a[k] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
  return a;
}

json assignment_json(const std::map<std::string, Rational>& a) {
  json j = json::object();
  for (const auto& [k, v] : a) j[k] = to_string(v);
  return j;
}

int cmd_equiv(Ctx& c, const std::string& verb, const std::string& family, const std::string& s1file,
              const std::string& s2file, const std::string& wfile, std::size_t budget) {
  auto f = c.catalog.family(family);
  auto L = f->algebra();
  auto same = [L](const json&) { return L; };
  RqnStructure s1 = structure_from_json(read_json_file(s1file), same);
  RqnStructure s2 = structure_from_json(read_json_file(s2file), same);
  PhiAction act = parse_phi_action(c.cfg.phi_action);

  if (verb == "constraints") {
    auto cs = equivalence_constraints(*f, s1, s2, act);
    if (c.cfg.json_out) {
      json arr = json::array();
      for (const auto& p : cs) arr.push_back(p.to_string());
      emit(c, {{"family", family}, {"phi_action", to_string(act)}, {"constraints", arr}});
    } else {
      for (const auto& p : cs) c.out << p.to_string() << "\n";
    }
    return 0;
  }
  if (verb == "check") {
    json w = read_json_file(wfile);
    Witness wit{f, load_assignment(w.contains("assignment") ? w.at("assignment") : w)};
    wit.validate();
    bool ok = verify_equivalence(wit, s1, s2, act);
    if (c.cfg.json_out)
      emit(c, {{"equivalent", ok}, {"phi_action", to_string(act)}, {"assignment", assignment_json(wit.assignment)}});
    else
      c.out << (ok ? "equivalent" : "not equivalent under this witness") << " (phi-action " << to_string(act)
            << ")\n";
    return code(ok);
  }
  SearchOptions opt;
  opt.budget = budget;
  opt.seed = c.cfg.seed;
  opt.jobs = c.cfg.jobs;
  opt.action = act;
  auto w = sample_search(f, s1, s2, opt);
  if (c.cfg.json_out) {
    emit(c, {{"family", family},
             {"seed", c.cfg.seed},
             {"budget", budget},
             {"witness", w ? assignment_json(w->assignment) : json(nullptr)}});
  } else if (w) {
    c.out << "witness:";
    for (const auto& [k, v] : w->assignment) c.out << " " << k << "=" << to_string(v);
    c.out << "\n";
  } else {
    c.out << "None\n";
  }
  return code(w.has_value());
}

int cmd_cohomology(Ctx& c, const std::string& algebra, std::size_t k, const std::string& target) {
  auto L = resolve_algebra(c, algebra);
  CohomologyDims d = cohomology_dims(*L, k);
  json j = {{"algebra", L->name()},
            {"k", k},
            {"cochains", d.cochains},
            {"cocycles", d.cocycles},
            {"coboundaries", d.coboundaries},
            {"betti", d.betti()}};
  std::optional<KCochain> theta;
  bool have_target = !target.empty();
  if (have_target) {
    json t = read_json_file(target);
    KCochain phi = cochain_from_json(t.contains("target") ? t.at("target") : t, L->dim());
    theta = solve_coboundary(*L, phi);
    j["primitive"] = theta ? to_json(*theta) : json(nullptr);
  }
  if (c.cfg.json_out) {
    emit(c, j);
  } else {
    c.out << L->name() << " degree " << k << ": dim C = " << d.cochains << ", dim Z = " << d.cocycles
          << ", dim B = " << d.coboundaries << ", betti = " << d.betti() << "\n";
    if (have_target) {
      if (!theta) {
        c.out << "target is not a coboundary\n";
      } else {
        c.out << "primitive:";
        if (theta->is_zero()) c.out << " 0";
        for (const auto& [idx, v] : theta->components()) {
          c.out << " (" << v.to_string() << ")X^";
          for (std::size_t i = 0; i < idx.size(); ++i) c.out << (i ? "^X^" : "") << idx[i] + 1;
        }
        c.out << "\n";
      }
    }
  }
  return have_target ? code(theta.has_value()) : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact verification of r-qn structures on Lie algebras", "rqn"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json_out, "Key-sorted JSON output");
  app.add_option("--phi-action", cfg.phi_action, "How automorphisms act on the 3-form")
      ->check(CLI::IsMember({"fifth-step", "diagram"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled searches");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--data", cfg.data_dir, "Catalog data directory");

  std::string algebra, structure, rfile, jfile, kstr, family, s1, s2, wfile, target, table;
  std::vector<std::string> ids;
  std::size_t degree = 2, budget = 200;
  bool all = false;

  auto* verify = app.add_subcommand("verify", "Check the six defining conditions");
  verify->add_option("--structure", structure, "Structure JSON")->required();
  verify->add_option("--algebra", algebra, "Catalog name or algebra JSON file");

  auto* tables = app.add_subcommand("tables", "Run the tabulated fixtures");
  tables->add_flag("--all", all, "Every fixture (default)");
  tables->add_option("--id", ids, "Fixture id");
  tables->add_option("--table", table, "Id prefix, e.g. T2a");

  auto* dbl = app.add_subcommand("double", "Double Lie algebra and R-matrices");
  dbl->require_subcommand(1);
  auto* dbuild = dbl->add_subcommand("build", "Assemble the double bracket table");
  dbuild->add_option("--algebra", algebra);
  dbuild->add_option("--r", rfile, "Bivector JSON")->required();
  auto* dmybe = dbl->add_subcommand("mybe", "Modified Yang-Baxter check for a J matrix");
  dmybe->add_option("--j", jfile, "J JSON (matrix or {algebra, r, J, k})")->required();
  dmybe->add_option("--algebra", algebra);
  dmybe->add_option("--r", rfile);
  dmybe->add_option("--k", kstr, "Polynomial literal");
  auto* dgc = dbl->add_subcommand("gc", "Sufficient conditions for J assembled from (n, r, theta)");
  dgc->add_option("--structure", structure, "{algebra, r, n, theta, k}")->required();
  dgc->add_option("--algebra", algebra);
  dgc->add_option("--k", kstr, "Polynomial literal");

  auto* eq = app.add_subcommand("equiv", "Equivalence under an automorphism family");
  eq->require_subcommand(1);
  for (const char* v : {"check", "constraints", "search"}) {
    auto* sub = eq->add_subcommand(v);
    sub->add_option("--family", family)->required();
    sub->add_option("--s", s1)->required();
    sub->add_option("--s2", s2)->required();
    if (std::string(v) == "check") sub->add_option("--witness", wfile)->required();
    if (std::string(v) == "search") sub->add_option("--budget", budget);
  }

  auto* coh = app.add_subcommand("cohomology", "Cohomology dimensions and coboundary solving");
  coh->add_option("--algebra", algebra)->required();
  coh->add_option("--k", degree, "Degree")->required();
  coh->add_option("--target", target, "Cochain JSON to write as a coboundary");

  auto* cat = app.add_subcommand("catalog", "Registry of algebras, families and fixtures");
  cat->require_subcommand(1);
  cat->add_subcommand("list");
  auto* crun = cat->add_subcommand("run");
  crun->add_option("--id", ids);
  crun->add_flag("--all", all);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    fs::path data = cfg.data_dir.empty() ? Catalog::default_data_dir() : fs::path(cfg.data_dir);
    Ctx c{cfg, out, Catalog::load(data)};
    if (*verify) return cmd_verify(c, structure, algebra);
    if (*tables) return run_and_report(c, select_fixtures(c.catalog, ids, table), false);
    if (*dbuild) return cmd_double_build(c, algebra, rfile);
    if (*dmybe) return cmd_double_mybe(c, jfile, algebra, rfile, kstr);
    if (*dgc) return cmd_double_gc(c, structure, algebra, kstr);
    if (*eq) {
      for (auto* sub : eq->get_subcommands())
        if (*sub) return cmd_equiv(c, sub->get_name(), family, s1, s2, wfile, budget);
    }
    if (*coh) return cmd_cohomology(c, algebra, degree, target);
    if (cat->got_subcommand("list")) return cmd_catalog_list(c);
    if (*crun) {
      if (ids.empty() && !all) throw SchemaError("catalog run needs --id or --all");
      return run_and_report(c, select_fixtures(c.catalog, ids, ""), true);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rqn::cli
