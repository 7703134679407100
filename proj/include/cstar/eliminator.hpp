#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cstar/arith.hpp"

namespace cstar {

class EliminatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScenarioParseError : public EliminatorError {
 public:
  using EliminatorError::EliminatorError;
};

class BudgetExceeded : public EliminatorError {
 public:
  using EliminatorError::EliminatorError;
};

struct Variable {
  std::string name;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  // Bound taken from a hypothesis of the argument; never scaled.
  bool fixed = false;
};

struct Expr {
  enum Op { Const, Var, Add, Sub, Neg, Mul, Div, Pow, Min, Max, Abs };
  Op op = Const;
  Rat value;
  int var = -1;
  int exponent = 0;
  std::vector<Expr> args;
};

struct Condition {
  enum Op { Eq, Ne, Lt, Le, Gt, Ge, Divides, And, Or, Not, Implies, True };
  Op op = True;
  Expr lhs, rhs;
  std::vector<Condition> subs;
};

enum class ExpectedKind { Empty, ExactSet, Contains };
std::string expected_name(ExpectedKind k);

using Tuple = std::vector<std::int64_t>;

struct Expected {
  ExpectedKind kind = ExpectedKind::Empty;
  std::vector<std::string> project;  // empty: all variables in order
  std::vector<Tuple> tuples;
};

struct Scenario {
  std::string name;
  std::string section;
  std::string quote;
  std::string note;
  std::vector<Variable> variables;
  std::vector<Condition> constraints;
  Expected expected;
};

struct SolveOptions {
  std::uint64_t budget = 1000000000ULL;
  std::int64_t bounds_scale = 1;
};

struct SolutionSet {
  std::vector<std::string> names;
  std::vector<Tuple> tuples;  // lexicographic
  std::uint64_t nodes = 0;
};

SolutionSet solve(const Scenario& sc, const SolveOptions& opt = {});

// Projection of a solution set onto the named variables, sorted, without
// duplicates.
std::vector<Tuple> project(const SolutionSet& sol, const std::vector<std::string>& names);

bool outcome_matches(const Scenario& sc, const SolutionSet& sol, std::string* detail = nullptr);

Scenario parse_scenario(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& sc);
// Every *.json file in the directory, each holding one scenario or an array.
std::vector<Scenario> load_registry(const std::string& dir);

struct ScenarioOutcome {
  std::string name;
  std::string section;
  std::string quote;
  bool pass = false;
  std::string detail;
  SolutionSet solutions;
  double seconds = 0;
};

struct RegistryReport {
  std::vector<ScenarioOutcome> outcomes;
  bool all_pass = true;
};

RegistryReport run_registry(const std::vector<Scenario>& registry, const std::string& filter,
                            const SolveOptions& opt = {});

// 2 + (an+b)(2a-2) + a(n-2-an): vanishes exactly when E_0 ~ (an+b)T_1 + aT_2
// is rational.
Int hirzebruch_genus_defect(const Int& a, const Int& b, const Int& n);
// a(an+2b)
Int hirzebruch_e0_squared(const Int& a, const Int& b, const Int& n);

// Expression helpers for building scenarios in code.
Expr parse_expr(const nlohmann::json& j, const std::vector<Variable>& vars);
Condition parse_condition(const nlohmann::json& j, const std::vector<Variable>& vars);
Rat evaluate(const Expr& e, const std::vector<std::int64_t>& values);
bool evaluate(const Condition& c, const std::vector<std::int64_t>& values);

}  // namespace cstar
