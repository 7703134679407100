#include "cstar/eliminator.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>

namespace cstar {

using nlohmann::json;

std::string expected_name(ExpectedKind k) {
  switch (k) {
    case ExpectedKind::Empty: return "Empty";
    case ExpectedKind::ExactSet: return "ExactSet";
    case ExpectedKind::Contains: return "Contains";
  }
  return "?";
}

Int hirzebruch_genus_defect(const Int& a, const Int& b, const Int& n) {
  return 2 + (a * n + b) * (2 * a - 2) + a * (n - 2 - a * n);
}

Int hirzebruch_e0_squared(const Int& a, const Int& b, const Int& n) { return a * (a * n + 2 * b); }

// ---------------- parsing ----------------

namespace {

int var_index(const std::string& name, const std::vector<Variable>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name == name) return int(i);
  throw ScenarioParseError("undeclared variable '" + name + "'");
}

Expr make_const(const Rat& v) {
  Expr e;
  e.op = Expr::Const;
  e.value = v;
  return e;
}

}  // namespace

Expr parse_expr(const json& j, const std::vector<Variable>& vars) {
  if (j.is_number_integer()) return make_const(Rat(j.get<std::int64_t>()));
  if (j.is_string()) {
    Expr e;
    e.op = Expr::Var;
    e.var = var_index(j.get<std::string>(), vars);
    return e;
  }
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw ScenarioParseError("malformed expression: " + j.dump());
  const std::string op = j[0].get<std::string>();
  Expr e;
  for (std::size_t i = 1; i < j.size(); ++i) {
    if (op == "^" && i == 2) break;
    e.args.push_back(parse_expr(j[i], vars));
  }
  const std::size_t n = e.args.size();
  auto need = [&](bool ok) {
    if (!ok) throw ScenarioParseError("wrong arity for '" + op + "': " + j.dump());
  };
  if (op == "+") {
    e.op = Expr::Add;
    need(n >= 1);
  } else if (op == "-") {
    e.op = n == 1 ? Expr::Neg : Expr::Sub;
    need(n == 1 || n == 2);
  } else if (op == "*") {
    e.op = Expr::Mul;
    need(n >= 1);
  } else if (op == "/") {
    e.op = Expr::Div;
    need(n == 2);
  } else if (op == "^") {
    e.op = Expr::Pow;
    need(j.size() == 3 && j[2].is_number_integer() && j[2].get<int>() >= 0);
    e.exponent = j[2].get<int>();
  } else if (op == "min") {
    e.op = Expr::Min;
    need(n >= 1);
  } else if (op == "max") {
    e.op = Expr::Max;
    need(n >= 1);
  } else if (op == "abs") {
    e.op = Expr::Abs;
    need(n == 1);
  } else {
    throw ScenarioParseError("unknown operator '" + op + "'");
  }
  return e;
}

Condition parse_condition(const json& j, const std::vector<Variable>& vars) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw ScenarioParseError("malformed constraint: " + j.dump());
  const std::string op = j[0].get<std::string>();
  Condition c;
  static const std::map<std::string, Condition::Op> cmp = {
      {"=", Condition::Eq}, {"!=", Condition::Ne}, {"<", Condition::Lt},
      {"<=", Condition::Le}, {">", Condition::Gt}, {">=", Condition::Ge},
      {"divides", Condition::Divides}};
  if (auto it = cmp.find(op); it != cmp.end()) {
    if (j.size() != 3) throw ScenarioParseError("comparison needs two operands: " + j.dump());
    c.op = it->second;
    c.lhs = parse_expr(j[1], vars);
    c.rhs = parse_expr(j[2], vars);
    return c;
  }
  if (op == "true") {
    c.op = Condition::True;
    return c;
  }
  static const std::map<std::string, Condition::Op> logic = {
      {"and", Condition::And}, {"or", Condition::Or}, {"not", Condition::Not},
      {"implies", Condition::Implies}};
  auto it = logic.find(op);
  if (it == logic.end()) throw ScenarioParseError("unknown constraint operator '" + op + "'");
  c.op = it->second;
  for (std::size_t i = 1; i < j.size(); ++i) c.subs.push_back(parse_condition(j[i], vars));
  if ((c.op == Condition::Not && c.subs.size() != 1) ||
      (c.op == Condition::Implies && c.subs.size() != 2) || c.subs.empty())
    throw ScenarioParseError("wrong arity for '" + op + "': " + j.dump());
  return c;
}

namespace {

json expr_to_json(const Expr& e, const std::vector<Variable>& vars) {
  switch (e.op) {
    case Expr::Const: {
      const Int num = boost::multiprecision::numerator(e.value);
      const Int den = boost::multiprecision::denominator(e.value);
      if (den == 1) return json(static_cast<std::int64_t>(num));
      return json::array({"/", static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)});
    }
    case Expr::Var: return vars[std::size_t(e.var)].name;
    default: break;
  }
  static const std::map<Expr::Op, std::string> names = {
      {Expr::Add, "+"}, {Expr::Sub, "-"}, {Expr::Neg, "-"}, {Expr::Mul, "*"},
      {Expr::Div, "/"}, {Expr::Pow, "^"}, {Expr::Min, "min"}, {Expr::Max, "max"},
      {Expr::Abs, "abs"}};
  json out = json::array({names.at(e.op)});
  for (const auto& a : e.args) out.push_back(expr_to_json(a, vars));
  if (e.op == Expr::Pow) out.push_back(e.exponent);
  return out;
}

json condition_to_json(const Condition& c, const std::vector<Variable>& vars) {
  static const std::map<Condition::Op, std::string> names = {
      {Condition::Eq, "="}, {Condition::Ne, "!="}, {Condition::Lt, "<"},
      {Condition::Le, "<="}, {Condition::Gt, ">"}, {Condition::Ge, ">="},
      {Condition::Divides, "divides"}, {Condition::And, "and"}, {Condition::Or, "or"},
      {Condition::Not, "not"}, {Condition::Implies, "implies"}, {Condition::True, "true"}};
  json out = json::array({names.at(c.op)});
  if (c.op == Condition::True) return out;
  if (c.subs.empty()) {
    out.push_back(expr_to_json(c.lhs, vars));
    out.push_back(expr_to_json(c.rhs, vars));
  } else {
    for (const auto& s : c.subs) out.push_back(condition_to_json(s, vars));
  }
  return out;
}

}  // namespace

Scenario parse_scenario(const json& j) {
  Scenario sc;
  try {
    sc.name = j.at("name").get<std::string>();
  } catch (const json::exception& e) {
    throw ScenarioParseError(std::string("scenario without a name: ") + e.what());
  }
  try {
    const auto& loc = j.at("paperLocation");
    sc.section = loc.at("section").get<std::string>();
    sc.quote = loc.value("quote", "");
    sc.note = j.value("note", "");
    for (const auto& v : j.at("variables")) {
      Variable var;
      var.name = v.at("name").get<std::string>();
      var.lower = v.at("lower").get<std::int64_t>();
      var.upper = v.at("upper").get<std::int64_t>();
      var.fixed = v.value("fixed", false);
      if (var.lower > var.upper) throw ScenarioParseError("empty range for " + var.name);
      for (const auto& other : sc.variables)
        if (other.name == var.name) throw ScenarioParseError("duplicate variable " + var.name);
      sc.variables.push_back(var);
    }
    for (const auto& c : j.at("constraints")) sc.constraints.push_back(parse_condition(c, sc.variables));
    const auto& ex = j.at("expected");
    const std::string kind = ex.at("kind").get<std::string>();
    if (kind == "Empty")
      sc.expected.kind = ExpectedKind::Empty;
    else if (kind == "ExactSet")
      sc.expected.kind = ExpectedKind::ExactSet;
    else if (kind == "Contains")
      sc.expected.kind = ExpectedKind::Contains;
    else
      throw ScenarioParseError("unknown expected kind " + kind);
    if (ex.contains("project")) {
      for (const auto& p : ex.at("project")) {
        const auto name = p.get<std::string>();
        var_index(name, sc.variables);
        sc.expected.project.push_back(name);
      }
    }
    const std::size_t width =
        sc.expected.project.empty() ? sc.variables.size() : sc.expected.project.size();
    if (ex.contains("tuples"))
      for (const auto& t : ex.at("tuples")) {
        Tuple tup = t.get<Tuple>();
        if (tup.size() != width) throw ScenarioParseError("expected tuple has wrong width");
        sc.expected.tuples.push_back(tup);
      }
    if (sc.expected.kind != ExpectedKind::Empty && sc.expected.tuples.empty() &&
        sc.expected.kind == ExpectedKind::Contains)
      throw ScenarioParseError("Contains needs at least one tuple");
  } catch (const json::exception& e) {
    throw ScenarioParseError("scenario '" + sc.name + "': " + e.what());
  } catch (const ScenarioParseError& e) {
    throw ScenarioParseError("scenario '" + sc.name + "': " + e.what());
  }
  return sc;
}

json scenario_to_json(const Scenario& sc) {
  json j;
  j["name"] = sc.name;
  j["paperLocation"] = {{"section", sc.section}, {"quote", sc.quote}};
  if (!sc.note.empty()) j["note"] = sc.note;
  j["variables"] = json::array();
  for (const auto& v : sc.variables) {
    json jv = {{"name", v.name}, {"lower", v.lower}, {"upper", v.upper}};
    if (v.fixed) jv["fixed"] = true;
    j["variables"].push_back(jv);
  }
  j["constraints"] = json::array();
  for (const auto& c : sc.constraints) j["constraints"].push_back(condition_to_json(c, sc.variables));
  json ex = {{"kind", expected_name(sc.expected.kind)}};
  if (!sc.expected.project.empty()) ex["project"] = sc.expected.project;
  if (!sc.expected.tuples.empty()) ex["tuples"] = sc.expected.tuples;
  j["expected"] = ex;
  return j;
}

std::vector<Scenario> load_registry(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ScenarioParseError("registry directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Scenario> out;
  std::set<std::string> names;
  for (const auto& f : files) {
    std::ifstream in(f);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ScenarioParseError(f.string() + ": " + e.what());
    }
    auto add = [&](const json& item) {
      try {
        out.push_back(parse_scenario(item));
      } catch (const ScenarioParseError& e) {
        throw ScenarioParseError(f.string() + ": " + e.what());
      }
      if (!names.insert(out.back().name).second)
        throw ScenarioParseError(f.string() + ": duplicate scenario name " + out.back().name);
    };
    if (j.is_array())
      for (const auto& item : j) add(item);
    else
      add(j);
  }
  return out;
}

// ---------------- exact evaluation ----------------

Rat evaluate(const Expr& e, const std::vector<std::int64_t>& values) {
  switch (e.op) {
    case Expr::Const: return e.value;
    case Expr::Var: return Rat(values[std::size_t(e.var)]);
    case Expr::Add: {
      Rat s = 0;
      for (const auto& a : e.args) s += evaluate(a, values);
      return s;
    }
    case Expr::Sub: return evaluate(e.args[0], values) - evaluate(e.args[1], values);
    case Expr::Neg: return -evaluate(e.args[0], values);
    case Expr::Mul: {
      Rat p = 1;
      for (const auto& a : e.args) p *= evaluate(a, values);
      return p;
    }
    case Expr::Div: {
      const Rat den = evaluate(e.args[1], values);
      if (den == 0) throw EliminatorError("division by zero");
      return evaluate(e.args[0], values) / den;
    }
    case Expr::Pow: {
      const Rat b = evaluate(e.args[0], values);
      Rat r = 1;
      for (int i = 0; i < e.exponent; ++i) r *= b;
      return r;
    }
    case Expr::Min:
    case Expr::Max: {
      Rat r = evaluate(e.args[0], values);
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        Rat v = evaluate(e.args[i], values);
        if (e.op == Expr::Min ? v < r : v > r) r = v;
      }
      return r;
    }
    case Expr::Abs: {
      Rat v = evaluate(e.args[0], values);
      return v < 0 ? Rat(-v) : v;
    }
  }
  throw EliminatorError("bad expression");
}

namespace {

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

// Division by zero inside an atom makes the atom false.
bool evaluate_atom(const Condition& c, const std::vector<std::int64_t>& values) {
  Rat l, r;
  try {
    l = evaluate(c.lhs, values);
    r = evaluate(c.rhs, values);
  } catch (const EliminatorError&) {
    return false;
  }
  switch (c.op) {
    case Condition::Eq: return l == r;
    case Condition::Ne: return l != r;
    case Condition::Lt: return l < r;
    case Condition::Le: return l <= r;
    case Condition::Gt: return l > r;
    case Condition::Ge: return l >= r;
    case Condition::Divides: {
      if (!is_integer(l) || !is_integer(r)) return false;
      const Int a = boost::multiprecision::numerator(l);
      const Int b = boost::multiprecision::numerator(r);
      if (a == 0) return b == 0;
      return b % a == 0;
    }
    default: break;
  }
  throw EliminatorError("bad atom");
}

}  // namespace

bool evaluate(const Condition& c, const std::vector<std::int64_t>& values) {
  switch (c.op) {
    case Condition::True: return true;
    case Condition::And:
      for (const auto& s : c.subs)
        if (!evaluate(s, values)) return false;
      return true;
    case Condition::Or:
      for (const auto& s : c.subs)
        if (evaluate(s, values)) return true;
      return false;
    case Condition::Not: return !evaluate(c.subs[0], values);
    case Condition::Implies: return !evaluate(c.subs[0], values) || evaluate(c.subs[1], values);
    default: return evaluate_atom(c, values);
  }
}

// ---------------- polynomial form for comparisons ----------------

namespace {

using Exps = std::vector<int>;
using Poly = std::map<Exps, Rat>;

void add_into(Poly& p, const Exps& e, const Rat& c) {
  auto& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_into(out, e, ca * cb);
    }
  return out;
}

// num / den, where den is a single term with positive coefficient over
// variables whose range is >= 1, hence positive everywhere in the box.
struct Frac {
  Poly num;
  Poly den;
};

Poly poly_const(std::size_t n, const Rat& c) {
  Poly p;
  if (c != 0) p[Exps(n, 0)] = c;
  return p;
}

std::optional<Frac> to_frac(const Expr& e, const std::vector<Variable>& vars) {
  const std::size_t n = vars.size();
  switch (e.op) {
    case Expr::Const: return Frac{poly_const(n, e.value), poly_const(n, 1)};
    case Expr::Var: {
      Exps x(n, 0);
      x[std::size_t(e.var)] = 1;
      return Frac{Poly{{x, Rat(1)}}, poly_const(n, 1)};
    }
    case Expr::Add:
    case Expr::Sub:
    case Expr::Neg: {
      Frac out{{}, poly_const(n, 1)};
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        auto a = to_frac(e.args[i], vars);
        if (!a) return std::nullopt;
        const bool negate = e.op == Expr::Neg || (e.op == Expr::Sub && i == 1);
        Poly num = poly_mul(out.num, a->den);
        for (const auto& [x, c] : poly_mul(a->num, out.den)) add_into(num, x, negate ? Rat(-c) : c);
        out.num = std::move(num);
        out.den = poly_mul(out.den, a->den);
      }
      return out;
    }
    case Expr::Mul: {
      Frac out{poly_const(n, 1), poly_const(n, 1)};
      for (const auto& arg : e.args) {
        auto a = to_frac(arg, vars);
        if (!a) return std::nullopt;
        out.num = poly_mul(out.num, a->num);
        out.den = poly_mul(out.den, a->den);
      }
      return out;
    }
    case Expr::Pow: {
      auto a = to_frac(e.args[0], vars);
      if (!a) return std::nullopt;
      Frac out{poly_const(n, 1), poly_const(n, 1)};
      for (int i = 0; i < e.exponent; ++i) {
        out.num = poly_mul(out.num, a->num);
        out.den = poly_mul(out.den, a->den);
      }
      return out;
    }
    case Expr::Div: {
      auto a = to_frac(e.args[0], vars);
      auto b = to_frac(e.args[1], vars);
      if (!a || !b || b->num.size() != 1) return std::nullopt;
      const auto& [bx, bc] = *b->num.begin();
      for (std::size_t i = 0; i < n; ++i)
        if (bx[i] > 0 && vars[i].lower < 1) return std::nullopt;
      Frac out{poly_mul(a->num, b->den), poly_mul(a->den, b->num)};
      if (bc < 0) {
        for (auto& [x, c] : out.num) c = -c;
        for (auto& [x, c] : out.den) c = -c;
      }
      return out;
    }
    default: return std::nullopt;
  }
}

using i128 = __int128;

struct Term {
  std::vector<std::pair<int, int>> factors;  // (variable, exponent)
  Int coef;
  bool small = false;  // coef fits c64
  std::int64_t c64 = 0;
};

void cache_coef(Term& t) {
  t.small = t.coef <= Int("1000000000000000000") && t.coef >= Int("-1000000000000000000");
  if (t.small) t.c64 = static_cast<std::int64_t>(t.coef);
}

// P(x) op 0 with integer coefficients.
struct FastCmp {
  Condition::Op op = Condition::Eq;
  std::vector<Term> terms;
  int maxvar = -1;
  bool linear_in_max = false;
  std::vector<Term> a_terms, b_terms;  // P = A * x_max + B when linear_in_max
};

class Overflow {};

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

i128 eval_fast(const std::vector<Term>& terms, const std::vector<std::int64_t>& v) {
  i128 sum = 0;
  for (const auto& t : terms) {
    if (!t.small) throw Overflow{};
    i128 p = t.c64;
    for (auto [var, ex] : t.factors)
      for (int k = 0; k < ex; ++k) p = checked_mul(p, v[std::size_t(var)]);
    sum = checked_add(sum, p);
  }
  return sum;
}

Int eval_slow(const std::vector<Term>& terms, const std::vector<std::int64_t>& v) {
  Int sum = 0;
  for (const auto& t : terms) {
    Int p = t.coef;
    for (auto [var, ex] : t.factors)
      for (int k = 0; k < ex; ++k) p *= v[std::size_t(var)];
    sum += p;
  }
  return sum;
}

int sign_of(const std::vector<Term>& terms, const std::vector<std::int64_t>& v) {
  try {
    i128 s = eval_fast(terms, v);
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
  } catch (const Overflow&) {
    Int s = eval_slow(terms, v);
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
  }
}

bool cmp_holds(Condition::Op op, int sign) {
  switch (op) {
    case Condition::Eq: return sign == 0;
    case Condition::Ne: return sign != 0;
    case Condition::Lt: return sign < 0;
    case Condition::Le: return sign <= 0;
    case Condition::Gt: return sign > 0;
    case Condition::Ge: return sign >= 0;
    default: return false;
  }
}

Int lcm_int(const Int& a, const Int& b) { return a / boost::multiprecision::gcd(a, b) * b; }

std::optional<FastCmp> compile_fast(const Condition& c, const std::vector<Variable>& vars) {
  if (c.op < Condition::Eq || c.op > Condition::Ge) return std::nullopt;
  const std::size_t n = vars.size();
  auto l = to_frac(c.lhs, vars);
  auto r = to_frac(c.rhs, vars);
  if (!l || !r) return std::nullopt;
  // Both denominators are positive, so clearing them keeps the comparison.
  Poly p = poly_mul(l->num, r->den);
  for (const auto& [x, co] : poly_mul(r->num, l->den)) add_into(p, x, -co);
  Int den = 1;
  for (const auto& [x, co] : p) den = lcm_int(den, boost::multiprecision::denominator(co));
  FastCmp f;
  f.op = c.op;
  for (const auto& [x, co] : p) {
    Term t;
    t.coef = boost::multiprecision::numerator(co) * (den / boost::multiprecision::denominator(co));
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] > 0) {
        t.factors.emplace_back(int(i), x[i]);
        f.maxvar = std::max(f.maxvar, int(i));
      }
    cache_coef(t);
    f.terms.push_back(std::move(t));
  }
  f.linear_in_max = f.maxvar >= 0;
  for (const auto& t : f.terms) {
    int ex = 0;
    for (auto [var, e] : t.factors)
      if (var == f.maxvar) ex = e;
    if (ex > 1) {
      f.linear_in_max = false;
      break;
    }
    if (ex == 1) {
      Term a = t;
      a.factors.erase(std::remove_if(a.factors.begin(), a.factors.end(),
                                     [&](auto fe) { return fe.first == f.maxvar; }),
                      a.factors.end());
      f.a_terms.push_back(std::move(a));
    } else {
      f.b_terms.push_back(t);
    }
  }
  return f;
}

int max_var(const Expr& e) {
  int m = e.op == Expr::Var ? e.var : -1;
  for (const auto& a : e.args) m = std::max(m, max_var(a));
  return m;
}

int max_var(const Condition& c) {
  int m = std::max(max_var(c.lhs), max_var(c.rhs));
  for (const auto& s : c.subs) m = std::max(m, max_var(s));
  return m;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

// Logical combination with each comparison compiled when possible.
struct CompiledCond {
  Condition::Op op = Condition::True;
  std::optional<FastCmp> fast;
  const Condition* atom = nullptr;
  std::vector<CompiledCond> subs;
};

CompiledCond compile_cond(const Condition& c, const std::vector<Variable>& vars) {
  CompiledCond out;
  out.op = c.op;
  switch (c.op) {
    case Condition::And:
    case Condition::Or:
    case Condition::Not:
    case Condition::Implies:
      for (const auto& sub : c.subs) out.subs.push_back(compile_cond(sub, vars));
      break;
    case Condition::True: break;
    default:
      out.fast = compile_fast(c, vars);
      out.atom = &c;
  }
  return out;
}

bool holds(const CompiledCond& c, const std::vector<std::int64_t>& v) {
  switch (c.op) {
    case Condition::True: return true;
    case Condition::And:
      for (const auto& s : c.subs)
        if (!holds(s, v)) return false;
      return true;
    case Condition::Or:
      for (const auto& s : c.subs)
        if (holds(s, v)) return true;
      return false;
    case Condition::Not: return !holds(c.subs[0], v);
    case Condition::Implies: return !holds(c.subs[0], v) || holds(c.subs[1], v);
    default:
      if (c.fast) return cmp_holds(c.fast->op, sign_of(c.fast->terms, v));
      return evaluate(*c.atom, v);
  }
}

struct Level {
  std::vector<FastCmp> fast;       // checked once the level is assigned
  std::vector<const FastCmp*> linear;  // used to narrow the range
  std::vector<CompiledCond> slow;
};

// Narrows [lo, hi] by A x + B op 0. Returns false when nothing is left.
bool narrow(const FastCmp& f, const std::vector<std::int64_t>& v, i128& lo, i128& hi) {
  i128 a, b;
  try {
    a = eval_fast(f.a_terms, v);
    b = eval_fast(f.b_terms, v);
  } catch (const Overflow&) {
    return true;  // no narrowing; the full check still runs
  }
  Condition::Op op = f.op;
  if (a == 0) return true;  // full check decides
  if (a < 0) {
    a = -a;
    b = -b;
    switch (op) {
      case Condition::Lt: op = Condition::Gt; break;
      case Condition::Le: op = Condition::Ge; break;
      case Condition::Gt: op = Condition::Lt; break;
      case Condition::Ge: op = Condition::Le; break;
      default: break;
    }
  }
  // a > 0: a x + b op 0
  switch (op) {
    case Condition::Eq:
      if (b % a != 0) return false;
      lo = std::max(lo, -b / a);
      hi = std::min(hi, -b / a);
      break;
    case Condition::Lt: hi = std::min(hi, floor_div(-b - 1, a)); break;
    case Condition::Le: hi = std::min(hi, floor_div(-b, a)); break;
    case Condition::Gt: lo = std::max(lo, ceil_div(-b + 1, a)); break;
    case Condition::Ge: lo = std::max(lo, ceil_div(-b, a)); break;
    default: break;
  }
  return lo <= hi;
}

struct Search {
  const Scenario& sc;
  const SolveOptions& opt;
  std::vector<Variable> vars;
  std::vector<Level> levels;
  std::vector<std::int64_t> values;
  SolutionSet out;

  void run(std::size_t k) {
    if (k == vars.size()) {
      out.tuples.push_back(values);
      return;
    }
    i128 lo = vars[k].lower, hi = vars[k].upper;
    for (const FastCmp* f : levels[k].linear)
      if (!narrow(*f, values, lo, hi)) return;
    for (i128 x = lo; x <= hi; ++x) {
      if (++out.nodes > opt.budget) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < vars.size(); ++i)
          if (vars[i].upper - vars[i].lower > vars[worst].upper - vars[worst].lower) worst = i;
        throw BudgetExceeded("search budget exceeded in scenario '" + sc.name + "': variable " +
                             vars[worst].name + " in [" + std::to_string(vars[worst].lower) +
                             ", " + std::to_string(vars[worst].upper) + "]");
      }
      values[k] = static_cast<std::int64_t>(x);
      bool ok = true;
      for (const auto& f : levels[k].fast)
        if (!cmp_holds(f.op, sign_of(f.terms, values))) {
          ok = false;
          break;
        }
      if (ok)
        for (const auto& c : levels[k].slow)
          if (!holds(c, values)) {
            ok = false;
            break;
          }
      if (ok) run(k + 1);
    }
    values[k] = 0;
  }
};

}  // namespace

SolutionSet solve(const Scenario& sc, const SolveOptions& opt) {
  Search s{sc, opt, sc.variables, {}, {}, {}};
  for (auto& v : s.vars) {
    if (v.fixed || opt.bounds_scale == 1) continue;
    if (v.upper > 0) v.upper *= opt.bounds_scale;
    if (v.lower < 0) v.lower *= opt.bounds_scale;
  }
  const std::size_t n = s.vars.size();
  for (const auto& v : s.vars) s.out.names.push_back(v.name);
  s.values.assign(n, 0);
  s.levels.resize(n);

  for (const auto& c : sc.constraints) {
    const int mv = max_var(c);
    if (mv < 0) {
      if (!evaluate(c, s.values)) return s.out;
      continue;
    }
    auto f = compile_fast(c, s.vars);
    if (f && f->maxvar == mv)
      s.levels[std::size_t(mv)].fast.push_back(std::move(*f));
    else if (f && f->maxvar < 0) {
      if (!cmp_holds(f->op, sign_of(f->terms, s.values))) return s.out;
    } else if (f) {
      // Terms cancelled; the highest variable no longer appears.
      s.levels[std::size_t(f->maxvar)].fast.push_back(std::move(*f));
    } else {
      s.levels[std::size_t(mv)].slow.push_back(compile_cond(c, s.vars));
    }
  }
  for (auto& lv : s.levels)
    for (const auto& f : lv.fast)
      if (f.linear_in_max && f.op != Condition::Ne) lv.linear.push_back(&f);
  if (n == 0) {
    s.out.tuples.push_back({});
    return s.out;
  }
  s.run(0);
  std::sort(s.out.tuples.begin(), s.out.tuples.end());
  return s.out;
}

std::vector<Tuple> project(const SolutionSet& sol, const std::vector<std::string>& names) {
  if (names.empty()) return sol.tuples;
  std::vector<std::size_t> idx;
  for (const auto& nm : names) {
    auto it = std::find(sol.names.begin(), sol.names.end(), nm);
    if (it == sol.names.end()) throw EliminatorError("unknown projection variable " + nm);
    idx.push_back(std::size_t(it - sol.names.begin()));
  }
  std::set<Tuple> acc;
  for (const auto& t : sol.tuples) {
    Tuple p;
    for (auto i : idx) p.push_back(t[i]);
    acc.insert(p);
  }
  return {acc.begin(), acc.end()};
}

static std::string tuples_text(const std::vector<Tuple>& ts, std::size_t limit = 8) {
  std::string s = "{";
  for (std::size_t i = 0; i < ts.size() && i < limit; ++i) {
    if (i) s += ", ";
    s += "(";
    for (std::size_t k = 0; k < ts[i].size(); ++k) s += (k ? "," : "") + std::to_string(ts[i][k]);
    s += ")";
  }
  if (ts.size() > limit) s += ", ... " + std::to_string(ts.size()) + " total";
  return s + "}";
}

bool outcome_matches(const Scenario& sc, const SolutionSet& sol, std::string* detail) {
  const auto got = project(sol, sc.expected.project);
  std::vector<Tuple> want = sc.expected.tuples;
  std::sort(want.begin(), want.end());
  bool ok = false;
  switch (sc.expected.kind) {
    case ExpectedKind::Empty: ok = got.empty(); break;
    case ExpectedKind::ExactSet: ok = got == want; break;
    case ExpectedKind::Contains:
      ok = std::includes(got.begin(), got.end(), want.begin(), want.end());
      break;
  }
  if (detail) {
    *detail = "expected " + expected_name(sc.expected.kind);
    if (!want.empty()) *detail += " " + tuples_text(want);
    *detail += ", found " + tuples_text(got);
  }
  return ok;
}

RegistryReport run_registry(const std::vector<Scenario>& registry, const std::string& filter,
                            const SolveOptions& opt) {
  RegistryReport rep;
  for (const auto& sc : registry) {
    if (!filter.empty() && sc.name.find(filter) == std::string::npos) continue;
    ScenarioOutcome o;
    o.name = sc.name;
    o.section = sc.section;
    o.quote = sc.quote;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o.solutions = solve(sc, opt);
      o.pass = outcome_matches(sc, o.solutions, &o.detail);
    } catch (const EliminatorError& e) {
      o.pass = false;
      o.detail = e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.all_pass = rep.all_pass && o.pass;
    rep.outcomes.push_back(std::move(o));
  }
  return rep;
}

}  // namespace cstar
