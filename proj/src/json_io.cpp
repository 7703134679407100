#include "cstar/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cstar {

using nlohmann::json;

json tree_to_json(const WeightedTree& t) {
  json j;
  j["vertices"] = json::array();
  for (int v : t.ids()) {
    json jv = {{"id", v}, {"weight", t.weight(v)}};
    if (t.tag(v) != Tag::None) jv["tag"] = tag_name(t.tag(v));
    j["vertices"].push_back(jv);
  }
  j["edges"] = json::array();
  for (auto [a, b] : t.edges()) j["edges"].push_back({a, b});
  return j;
}

WeightedTree tree_from_json(const json& j) {
  WeightedTree t;
  try {
    for (const auto& v : j.at("vertices"))
      t.add_vertex(v.at("id").get<int>(), v.at("weight").get<std::int64_t>(),
                   parse_tag(v.value("tag", std::string())));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of ids");
      t.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    t.validate();
  } catch (const json::exception& e) {
    throw InputError(std::string("tree: ") + e.what());
  } catch (const GraphError& e) {
    throw InputError(std::string("tree: ") + e.what());
  }
  return t;
}

static HNSequence sequence_from_json(const json& b) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& p : b.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw InputError("HN pair must be [c,p]");
    pairs.emplace_back(p[0].get<std::int64_t>(), p[1].get<std::int64_t>());
  }
  return validate(pairs);
}

BranchInput branch_input_from_json(const json& j) {
  BranchInput in;
  try {
    const auto& br = j.at("branches");
    if (!br.is_array() || br.size() != 2) throw InputError("exactly two branches are required");
    in.pair.lambda = sequence_from_json(br[0]);
    in.pair.lambda_t = sequence_from_json(br[1]);
    in.pair.same_point = j.value("samePoint", true);
    in.pair.s = j.value("s", 0);
    in.no_asymptote = j.value("noAsymptote", false);
    if (j.contains("tangencyChoices")) {
      const auto& tc = j.at("tangencyChoices");
      in.choices.labels = tc.value("labels", std::vector<int>{});
      in.choices.labels_t = tc.value("labelsTilde", std::vector<int>{});
    }
    validate_branch_pair(in.pair);
  } catch (const json::exception& e) {
    throw InputError(std::string("branch input: ") + e.what());
  } catch (const HNError& e) {
    throw InputError(std::string("branch input: ") + e.what());
  }
  return in;
}

json branch_pair_to_json(const BranchPair& bp) {
  auto seq = [](const HNSequence& s) {
    json pairs = json::array();
    for (const auto& p : s) pairs.push_back({p.c, p.p});
    return json{{"pairs", pairs}};
  };
  return {{"branches", {seq(bp.lambda), seq(bp.lambda_t)}}, {"samePoint", bp.same_point}, {"s", bp.s}};
}

json rational_to_json(const Rat& r) { return to_string(r); }

Rat rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (!j.is_string()) throw InputError("rational must be an integer or a \"p/q\" string");
  const std::string s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in " + s);
    return Rat(Int(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw InputError("malformed rational " + s);
  }
}

static ContractibilityClass parse_class(const std::string& s) {
  for (auto c : {ContractibilityClass::AdmissibleChain, ContractibilityClass::Fork22n,
                 ContractibilityClass::Fork233, ContractibilityClass::Fork234,
                 ContractibilityClass::Fork235, ContractibilityClass::NotContractible})
    if (class_name(c) == s) return c;
  throw InputError("unknown contractibility class " + s);
}

BMYInstance bmy_instance_from_json(const json& j) {
  BMYInstance inst;
  try {
    inst.chi_open = j.at("chiOpen").get<std::int64_t>();
    for (const auto& c : j.value("components", json::array()))
      inst.components.push_back({Int(c.at("determinant").get<std::int64_t>()),
                                 parse_class(c.value("class", std::string("AdmissibleChain")))});
    inst.p_squared = rational_from_json(j.at("pSquared"));
  } catch (const json::exception& e) {
    throw InputError(std::string("bmy instance: ") + e.what());
  }
  return inst;
}

static json scene_json(const Scene& s) {
  json j;
  j["stage"] = stage_name(s.stage);
  j["tree"] = tree_to_json(s.tree);
  j["eId"] = s.e_id;
  j["lineId"] = s.line_id;
  j["components"] = s.tree.size() - 1;
  j["eSquared"] = s.tree.weight(s.e_id);
  j["eDotD"] = to_string(e_dot_d(s));
  j["kSquared"] = to_string(s.k_squared);
  j["gamma"] = to_string(s.gamma);
  j["epsilon"] = to_string(s.epsilon);
  j["hPhi"] = s.h_phi;
  j["hPsi"] = s.h_psi;
  j["eTouched"] = s.e_touched;
  j["violations"] = scene_violations(s);
  return j;
}

json resolve_report(const BranchInput& in) {
  const BranchPair& bp = in.pair;
  Scene res = build_resolution(bp, in.choices);
  res.no_asymptote = in.no_asymptote;
  const JointMultiplicities tm = total_multiplicities(bp);

  json j;
  j["input"] = branch_pair_to_json(bp);
  j["d"] = to_string(degree_d(bp));
  j["multiplicities"] = res.multiplicities;
  Int sum = 0, sq = 0;
  for (auto m : res.multiplicities) {
    sum += m;
    sq += Int(m) * m;
  }
  j["multiplicitySum"] = to_string(sum);
  j["multiplicitySquareSum"] = to_string(sq);
  j["closedFormSum"] = to_string(tm.sum);
  j["closedFormSquareSum"] = to_string(tm.sum_squares);
  j["boundaryConvention"] = tm.boundary_convention || res.generic_separation;
  j["gammaPrimeA"] = to_string(gamma_prime_a(bp));
  j["gammaPrimeB"] = to_string(gamma_prime_b(bp));
  j["gammaPrime"] = to_string(-Int(res.tree.weight(res.e_id)));
  j["realizable"] = realizable(bp);
  j["r"] = res.r;
  j["rTilde"] = res.r_t;
  j["resolved"] = scene_json(res);

  Scene mini = minimalize(res);
  mini.no_asymptote = in.no_asymptote;
  j["minimal"] = scene_json(mini);
  const IdentityReport idr = check_h_phi(res, mini);
  j["hPhiIdentity"] = {{"fromKK", to_string(idr.h_phi_from_kk)},
                       {"fromCounters", to_string(idr.h_phi_from_counters)},
                       {"holds", idr.holds},
                       {"statement", "h_Phi = 6 - K.(K+D') = 2 + eps + gamma + h_Psi"}};

  const SumEiReport se = sum_ei(mini);
  json twigs = json::array();
  for (std::size_t i = 0; i < se.twigs.size(); ++i)
    twigs.push_back({{"ids", se.twigs[i].ids}, {"capacity", rational_to_json(se.capacities[i])}});
  j["twigs"] = twigs;
  j["sumEi"] = {{"value", rational_to_json(se.sum)},
                {"barkSquare", rational_to_json(se.bark_square)},
                {"bound", to_string(se.bound)},
                {"holds", se.bound_holds},
                {"statement", "-(Bk(D+E))^2 = sum e_i <= 1 + eps"}};

  const TwoReductionResult tr = two_reduction(mini);
  Scene reduced = tr.scene;
  j["twoReduction"] = {{"t", tr.t},
                       {"lhs", to_string(tr.lhs)},
                       {"rhs", to_string(tr.rhs)},
                       {"identityHolds", tr.identity_holds},
                       {"contracted", tr.contracted},
                       {"e0Squared", reduced.tree.weight(reduced.e_id)},
                       {"statement", "(E_0 + 2K).(K + T) = 8 - 2 eps - gamma + t"}};
  const InequalityReport ir = check_basic_inequality(reduced);
  j["basicInequality"] = {{"slack", to_string(ir.slack)},
                          {"holds", ir.holds},
                          {"asserted", ir.asserted},
                          {"statement", "7 + t >= 2 eps + gamma"}};
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace cstar
