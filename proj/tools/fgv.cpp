#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "fgv/catalog.hpp"
#include "fgv/classify.hpp"
#include "fgv/io.hpp"
#include "fgv/isomorphism.hpp"
#include "fgv/ledger.hpp"
#include "fgv/vconfig.hpp"

using nlohmann::json;
using namespace fgv;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LineConfiguration resolve(const std::string& name) {
  if (auto c = catalog::by_name(name)) return *c;
  if (std::ifstream(name).good()) return io::load_configuration(name);
  throw UsageError("unknown catalog name or unreadable file: " + name);
}

// q-minus<n> carries the quadric index in its name; used to attach the
// closed-form comparison rows to numeric reports
std::optional<int> quadric_level(const std::string& name) {
  const std::string prefix = "q-minus";
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  std::string rest = name.substr(prefix.size());
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  return std::stoi(rest);
}

struct Run {
  json manifest;
  std::ostringstream text;
  int code = kExitPass;

  Run(const std::string& command, const json& parameters) {
    manifest["command"] = command;
    manifest["parameters"] = parameters;
    manifest["version"] = kVersion;
    manifest["checks"] = json::array();
  }

  void check(const std::string& name, bool pass, const json& detail = {}) {
    json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!detail.is_null()) c["detail"] = detail;
    manifest["checks"].push_back(c);
    text << (pass ? "PASS" : "FAIL") << "  " << name;
    if (detail.is_string()) text << ": " << detail.get<std::string>();
    text << "\n";
    if (!pass && code == kExitPass) code = kExitCheckFailed;
  }

  void info(const std::string& key, const json& value) {
    manifest[key] = value;
    text << key << ": " << value.dump() << "\n";
  }
};

Run run_enumerate(const std::string& object, bool dot, bool with_profile) {
  Run r("enumerate", {{"object", object}});
  auto c = resolve(object);
  r.info("points", c.n);
  r.info("lines", static_cast<int>(c.lines.size()));
  r.manifest["configuration"] = io::to_json(c);
  if (dot) {
    r.manifest["dot"] = io::to_dot(c);
    r.text << io::to_dot(c);
  } else {
    r.text << io::to_json(c).dump(2) << "\n";
  }
  if (with_profile) {
    auto p = profile(c);
    r.manifest["profile"] = io::to_json(p);
    r.text << "profile: " << io::to_json(p).dump(2) << "\n";
  }
  r.manifest["result"] = "ok";
  return r;
}

Run run_verify(const std::string& what, const std::vector<std::string>& args,
               const std::string& against) {
  json params = {{"check", what}, {"args", args}};
  if (!against.empty()) params["against"] = against;
  Run r("verify", params);

  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw UsageError("verify " + what + " expects " + std::to_string(k) +
                       " object argument(s)");
  };

  if (what == "axioms") {
    need(1);
    auto c = resolve(args[0]);
    auto rep = validate(c);
    json viol = json::array();
    for (const auto& v : rep.violations) viol.push_back(v);
    r.check("two lines share at most one point", rep.valid,
            rep.valid ? json{} : json(viol));
  } else if (what == "numerics") {
    need(1);
    auto w = resolve(args[0]);
    std::optional<LineConfiguration> v;
    if (!against.empty()) v = resolve(against);
    auto entries = check_numeric_relations(w, v ? &*v : nullptr);
    for (const auto& e : entries) {
      if (!e.applicable) {
        r.check(e.id + " (inapplicable)", true, e.note);
        continue;
      }
      std::ostringstream os;
      os << e.lhs << " vs " << e.rhs;
      if (!e.note.empty()) os << " (" << e.note << ")";
      r.check(e.id, e.pass, os.str());
    }
    r.manifest["entries"] = io::to_json(entries);
    // closed forms at parameter n describe the q-minus(n+1) configuration
    if (auto n = quadric_level(args[0]); n && *n >= 3) {
      auto p = profile(w);
      auto rows = closed_form_discrepancies(*n - 1, p.vij_at(1, 1), p.vij_at(1, 2));
      json jr = json::array();
      for (const auto& row : rows)
        jr.push_back({{"name", row.name},
                      {"n", row.n},
                      {"measured", row.measured},
                      {"closed_form", row.closed_form},
                      {"difference", row.difference}});
      r.info("closed_form_discrepancies", jr);
    }
  } else if (what == "vconfig") {
    need(2);
    auto w = resolve(args[0]);
    auto v = resolve(args[1]);
    auto res = is_v_configuration(w, v);
    r.check("every pencil matches the collinearity graph of " + args[1], res.ok,
            res.ok ? json(static_cast<int>(res.witnesses.size())) : json(res.reason));
  } else if (what == "reconstruction") {
    need(2);
    auto w = resolve(args[0]);
    auto v = resolve(args[1]);
    auto rep = verify_reconstruction_argument(w, v);
    if (!rep.applicable) {
      r.check("reconstruction applicable", false, rep.detail);
    } else {
      r.check("lines off the root reaching W2 meet W1 once and W2 twice",
              rep.lines_split_ok);
      std::ostringstream os;
      os << rep.w12_measured << " = " << rep.half_w2;
      r.check("each W1 point meets w2/2 points of W2", rep.half_w2_ok, os.str());
      r.check("transversal map on W2 is injective", rep.transversal_injective,
              rep.detail.empty() ? json{} : json(rep.detail));
    }
  } else if (what == "iso") {
    need(2);
    auto a = resolve(args[0]);
    auto b = resolve(args[1]);
    auto wtn = are_isomorphic(a, b);
    r.check("configurations are isomorphic", wtn.has_value(),
            wtn ? json(*wtn) : json("no witness exists"));
  } else if (what == "aut") {
    need(1);
    auto a = resolve(args[0]);
    r.info("automorphism_group_order", automorphism_group_order(a));
  } else {
    throw UsageError("unknown verify check: " + what);
  }
  return r;
}

Run run_classify(const std::string& vname, double budget, double seconds) {
  Run r("classify", {{"V", vname}, {"budget", budget}, {"seconds", seconds}});
  auto v = resolve(vname);
  ClassifyOptions opts;
  opts.max_nodes = static_cast<std::uint64_t>(budget);
  opts.max_seconds = seconds;
  auto res = classify_v_configurations(v, opts);
  r.manifest["table"] = io::to_json(res.table);
  r.info("nodes", res.nodes);
  r.info("candidates_checked", res.candidates_checked);
  r.info("canonical_rejects", res.canonical_rejects);
  json classes = json::array();
  for (const auto& c : res.classes) classes.push_back(io::to_json(c));
  r.manifest["classes"] = classes;
  r.info("class_count", res.classes.size());
  if (res.verdict == ClassifyVerdict::BudgetExhausted) {
    r.text << "budget exhausted: " << res.note << "\n";
    r.manifest["result"] = "budget-exhausted";
    r.code = kExitBudget;
  } else {
    r.manifest["result"] = "complete";
    r.text << "search complete: " << res.classes.size()
           << " isomorphism class(es)\n";
  }
  return r;
}

ledger::IntersectionRules parse_rules(const std::vector<std::string>& overrides) {
  auto rules = ledger::IntersectionRules::defaults();
  for (const auto& s : overrides) {
    int a, b;
    long long val;
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> a >> c1 >> b >> c2 >> val) || c1 != ',' || c2 != '=')
      throw UsageError("bad --rules entry (want a,b=value): " + s);
    rules.top_values[{a, b}] = val;
  }
  return rules;
}

Run run_ledger(const std::vector<std::string>& overrides) {
  Run r("ledger", {{"rules", overrides}});
  auto rules = parse_rules(overrides);
  try {
    auto l = ledger::schottky_degree_ledger(rules);
    r.manifest["ledger"] = io::to_json(l);
    for (const auto& e : l.entries)
      r.text << e.name << ": " << e.degree << "  [" << e.anchor << "]\n";
    std::ostringstream os;
    os << l.total << " = " << l.q8_point_count << " = " << l.formula_count;
    r.check("total equals the enumerated and closed-form point counts",
            l.cross_checks_ok, os.str());
  } catch (const std::logic_error& e) {
    r.check("ledger cross-checks", false, e.what());
  }
  return r;
}

// the manifest minus timing; used by --seedless to compare two runs
std::string stable_dump(const json& manifest) {
  json j = manifest;
  j.erase("wall_time_seconds");
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite geometry verification toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // --json/--seedless may follow the subcommand

  bool as_json = false, dot = false, with_profile = false, seedless = false;
  app.add_flag("--json", as_json, "emit the run manifest as JSON");
  app.add_flag("--seedless", seedless, "run twice and assert identical output");

  std::string object;
  int index = -1;
  auto* enumerate = app.add_subcommand("enumerate", "emit a catalog configuration");
  enumerate->add_option("object", object)->required();
  enumerate->add_option("index", index, "appended to the object name");
  enumerate->add_flag("--dot", dot, "emit the incidence graph in DOT form");
  enumerate->add_flag("--profile", with_profile, "append the incidence profile");

  std::string check, against;
  std::vector<std::string> verify_args;
  auto* verify = app.add_subcommand("verify", "run a verification check");
  verify->add_option("check", check, "axioms|numerics|vconfig|reconstruction|iso|aut")
      ->required();
  verify->add_option("args", verify_args, "catalog names or schema files");
  verify->add_option("--against", against, "the V side for numerics");

  std::string vname;
  double budget = 1e6, seconds = 0;
  auto* classify = app.add_subcommand("classify", "isomorph-free search over a V");
  classify->add_option("V", vname)->required();
  classify->add_option("--budget", budget, "node budget");
  classify->add_option("--seconds", seconds, "wall-clock budget");

  std::vector<std::string> rule_overrides;
  auto* ledger_cmd = app.add_subcommand("ledger", "degree ledger with cross-checks");
  ledger_cmd->add_option("--rules", rule_overrides,
                         "intersection overrides, a,b=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  auto execute = [&]() -> Run {
    if (*enumerate) {
      std::string name = object;
      if (index >= 0) name += std::to_string(index);
      return run_enumerate(name, dot, with_profile);
    }
    if (*verify) return run_verify(check, verify_args, against);
    if (*classify) return run_classify(vname, budget, seconds);
    return run_ledger(rule_overrides);
  };

  try {
    auto t0 = std::chrono::steady_clock::now();
    Run r = execute();
    if (seedless) {
      Run again = execute();
      bool same = stable_dump(r.manifest) == stable_dump(again.manifest);
      r.check("repeated run is byte-identical outside timing", same);
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    r.manifest["wall_time_seconds"] = dt;
    if (as_json)
      std::cout << r.manifest.dump(2) << "\n";
    else
      std::cout << r.text.str();
    return r.code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
