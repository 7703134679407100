#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "cstar/bmy_checker.hpp"
#include "cstar/eliminator.hpp"
#include "cstar/generators.hpp"
#include "cstar/json_io.hpp"
#include "cstar/resolution.hpp"

using namespace cstar;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input;
  std::string format = "text";
  std::string filter;
  std::string registry = std::string(CSTAR_DATA_DIR) + "/scenarios";
  std::string stage = "resolved";
  std::uint64_t seed = 20240601;
  std::int64_t bounds_scale = 1;
  int max_vertices = 20;
};

bool as_json(const Options& o) { return o.format == "json"; }

int cmd_resolve(const Options& o) {
  const BranchInput in = branch_input_from_json(read_json_file(o.input));
  const json rep = resolve_report(in);

  std::vector<std::string> failed;
  if (rep["multiplicitySum"] != rep["closedFormSum"] ||
      rep["multiplicitySquareSum"] != rep["closedFormSquareSum"])
    failed.push_back("simulated multiplicities differ from the closed forms");
  if (rep["gammaPrime"] != rep["gammaPrimeB"]) failed.push_back("E'^2 differs from d^2 - sum m_i^2");
  if (!rep["resolved"]["violations"].empty()) failed.push_back("resolved scene violates invariants");
  const bool real = rep["realizable"].get<bool>();
  if (real && !rep["hPhiIdentity"]["holds"].get<bool>())
    failed.push_back("h_Phi = 6 - K.(K+D') = 2 + eps + gamma + h_Psi fails");
  if (real && !rep["twoReduction"]["identityHolds"].get<bool>())
    failed.push_back("(E_0 + 2K).(K + T) = 8 - 2 eps - gamma + t fails");
  if (rep["basicInequality"]["asserted"].get<bool>() && !rep["basicInequality"]["holds"].get<bool>())
    failed.push_back("7 + t >= 2 eps + gamma fails on a no-asymptote scene");

  if (as_json(o)) {
    json out = rep;
    out["failures"] = failed;
    std::cout << out.dump(2) << "\n";
  } else {
    const auto& r = rep["resolved"];
    const auto& m = rep["minimal"];
    std::cout << "d = " << rep["d"].get<std::string>() << "\n"
              << "multiplicities: " << rep["multiplicities"].dump() << "\n"
              << "E'^2 = " << r["eSquared"] << ", gamma' = " << rep["gammaPrime"].get<std::string>()
              << " (a: " << rep["gammaPrimeA"].get<std::string>()
              << ", b: " << rep["gammaPrimeB"].get<std::string>() << ")\n"
              << "E'.D' = " << r["eDotD"].get<std::string>() << "\n"
              << "components of D' = " << r["components"] << "\n"
              << "h_Phi = " << r["hPhi"] << ", h_Psi = " << m["hPsi"] << "\n"
              << "gamma = " << m["gamma"].get<std::string>()
              << ", eps = " << m["epsilon"].get<std::string>()
              << ", t = " << rep["twoReduction"]["t"] << "\n"
              << "r = " << rep["r"] << ", r~ = " << rep["rTilde"] << "\n"
              << "realizable = " << (real ? "yes" : "no") << "\n"
              << "twigs: " << rep["twigs"].dump() << "\n"
              << "sum e_i = " << rep["sumEi"]["value"].get<std::string>() << " (bound "
              << rep["sumEi"]["bound"].get<std::string>() << ")\n"
              << "slack of 7 + t >= 2 eps + gamma: "
              << rep["basicInequality"]["slack"].get<std::string>() << "\n";
    for (const auto& f : failed) std::cout << "FAILED: " << f << "\n";
  }
  return failed.empty() ? kOk : kFail;
}

int cmd_verify(const Options& o) {
  const auto registry = load_registry(o.registry);
  SolveOptions so;
  so.bounds_scale = o.bounds_scale;
  const RegistryReport rep = run_registry(registry, o.filter, so);
  if (rep.outcomes.empty()) {
    std::cerr << "no scenarios matched '" << o.filter << "'\n";
    return kUsage;
  }
  if (as_json(o)) {
    json out;
    out["allPass"] = rep.all_pass;
    out["scenarios"] = json::array();
    for (const auto& s : rep.outcomes)
      out["scenarios"].push_back({{"name", s.name},
                                  {"section", s.section},
                                  {"quote", s.quote},
                                  {"pass", s.pass},
                                  {"detail", s.detail},
                                  {"nodes", s.solutions.nodes},
                                  {"seconds", s.seconds}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& s : rep.outcomes)
      std::cout << (s.pass ? "PASS " : "FAIL ") << s.name << "  [" << s.section << "]  "
                << s.detail << "\n";
    std::cout << (rep.all_pass ? "all scenarios pass" : "MISMATCH") << " (" << rep.outcomes.size()
              << " scenarios)\n";
  }
  return rep.all_pass ? kOk : kFail;
}

int cmd_bmy(const Options& o) {
  const BMYInstance inst = bmy_instance_from_json(read_json_file(o.input));
  BMYReport r;
  try {
    r = check_bmy(inst);
  } catch (const BMYError& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  }
  if (as_json(o)) {
    std::cout << json{{"lhs", to_string(r.lhs)},
                      {"rhs", to_string(r.rhs)},
                      {"slack", to_string(r.slack)},
                      {"sumInverseOrders", to_string(r.sum_inverse_orders)},
                      {"holds", r.holds},
                      {"statement", "((K+D)^+)^2 <= 3 (chi + sum 1/|G_i|)"}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "sum 1/|G_i| = " << to_string(r.sum_inverse_orders) << "\n"
              << to_string(r.lhs) << " <= " << to_string(r.rhs) << ": "
              << (r.holds ? "holds" : "fails") << " (slack " << to_string(r.slack) << ")\n";
  }
  return r.holds ? kOk : kFail;
}

int cmd_graph(const Options& o) {
  const json j = read_json_file(o.input);
  WeightedTree t;
  if (j.contains("branches")) {
    const BranchInput in = branch_input_from_json(j);
    Scene sc = build_resolution(in.pair, in.choices);
    if (o.stage == "minimal") sc = minimalize(sc);
    t = sc.tree;
  } else {
    t = tree_from_json(j);
  }
  if (as_json(o))
    std::cout << tree_to_json(t).dump(2) << "\n";
  else
    std::cout << to_dot(t);
  return kOk;
}

int cmd_identities(const Options& o) {
  const auto checks = run_identity_checks(o.seed, o.max_vertices);
  bool ok = true;
  json out = json::array();
  for (const auto& c : checks) {
    ok = ok && c.failures == 0;
    out.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures},
                   {"firstFailure", c.first_failure}});
  }
  if (as_json(o)) {
    std::cout << json{{"seed", o.seed}, {"checks", out}, {"allPass", ok}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << (c.failures ? "FAIL " : "PASS ") << c.name << ": " << c.cases << " cases";
      if (c.failures) std::cout << ", " << c.failures << " failures, first " << c.first_failure;
      std::cout << "\n";
    }
  }
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolution combinatorics and case-elimination checks for C*-curves in the plane"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* sc) {
    sc->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* resolve = app.add_subcommand("resolve", "Resolve a branch pair and report invariants");
  resolve->add_option("--input", o.input, "Branch JSON")->required();
  add_format(resolve);

  auto* verify = app.add_subcommand("verify", "Run the scenario registry");
  verify->add_option("--filter", o.filter, "Substring of scenario names");
  verify->add_option("--bounds-scale", o.bounds_scale, "Multiply search bounds")
      ->check(CLI::PositiveNumber);
  verify->add_option("--registry", o.registry, "Scenario directory");
  add_format(verify);

  auto* bmy = app.add_subcommand("bmy", "Check a BMY instance");
  bmy->add_option("--input", o.input, "Instance JSON")->required();
  add_format(bmy);

  auto* graph = app.add_subcommand("graph", "Dump a tree or resolved branch pair as dot");
  graph->add_option("--input", o.input, "Tree or branch JSON")->required();
  graph->add_option("--stage", o.stage, "resolved or minimal")
      ->check(CLI::IsMember({"resolved", "minimal"}));
  add_format(graph);

  auto* ids = app.add_subcommand("check-identities", "Seeded randomized identity checks");
  ids->add_option("--seed", o.seed, "Random seed");
  ids->add_option("--max-vertices", o.max_vertices, "Largest random tree")
      ->check(CLI::Range(2, 200));
  add_format(ids);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*resolve) return cmd_resolve(o);
    if (*verify) return cmd_verify(o);
    if (*bmy) return cmd_bmy(o);
    if (*graph) return cmd_graph(o);
    if (*ids) return cmd_identities(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const ScenarioParseError& e) {
    std::cerr << "registry error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
