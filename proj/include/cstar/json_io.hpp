#pragma once

#include <string>

#include <json.hpp>

#include "cstar/bmy_checker.hpp"
#include "cstar/graph_core.hpp"
#include "cstar/hn_model.hpp"
#include "cstar/resolution.hpp"

namespace cstar {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json tree_to_json(const WeightedTree& t);
WeightedTree tree_from_json(const nlohmann::json& j);

// {"branches":[{"pairs":[[c,p],...]},{...}],"samePoint":bool,"s":int,
//  optional "tangencyChoices":{"labels":[...],"labelsTilde":[...]},
//  optional "noAsymptote":bool}
struct BranchInput {
  BranchPair pair;
  TangencyChoices choices;
  bool no_asymptote = false;
};
BranchInput branch_input_from_json(const nlohmann::json& j);
nlohmann::json branch_pair_to_json(const BranchPair& bp);

// {"chiOpen":int,"components":[{"determinant":int,"class":"AdmissibleChain"}],
//  "pSquared":"p/q" or int}
BMYInstance bmy_instance_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rat& r);
Rat rational_from_json(const nlohmann::json& j);

// Invariant report for a branch pair: the resolved and minimal scenes, the
// 2-reduction and the inequalities.
nlohmann::json resolve_report(const BranchInput& in);

// Parses a JSON file, reporting the location of a syntax error.
nlohmann::json read_json_file(const std::string& path);

}  // namespace cstar
