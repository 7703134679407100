// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cstar/bmy_checker.hpp"
#include "cstar/eliminator.hpp"
#include "cstar/generators.hpp"
#include "cstar/resolution.hpp"
#include "oracles.hpp"

using namespace cstar;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why << what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome determinants() {
  Outcome o;
  Scene s = hirzebruch_scene(3, 13, -8, HirzebruchPlacement::NodeOnTangentT2);
  const WeightedTree& g = s.tree;
  // Tip F (-2), the section of weight -5, the chain R and E.
  std::vector<int> r{1};
  for (int v = 3; v <= 14; ++v) r.push_back(v);
  const std::vector<std::vector<int>> parts{{16}, {2}, r, {s.e_id}};
  const std::vector<Int> expect{2, 5, 27, 9};

  auto t0 = Clock::now();
  std::vector<Int> got;
  for (const auto& p : parts) got.push_back(determinant(g, p));
  const double dt = seconds_since(t0);

  for (std::size_t i = 0; i < parts.size(); ++i) {
    o.check(got[i] == expect[i], "determinant " + got[i].str() + " != " + expect[i].str());
    o.check(oracle::neg_det(g, parts[i]) == expect[i], "oracle disagrees");
  }
  std::vector<std::int64_t> chain{-3};
  for (int i = 0; i < 12; ++i) chain.push_back(-2);
  o.check(oracle::chain_det(chain) == 27, "chain recurrence");

  BMYInstance inst{-1, {}, 0};
  for (const auto& d : got) inst.components.push_back({d, ContractibilityClass::AdmissibleChain});
  auto rep = check_bmy(inst);
  o.check(rep.sum_inverse_orders == Rat(229, 270), "sum of inverses " + to_string(rep.sum_inverse_orders));
  o.check(rep.sum_inverse_orders < 1 && !rep.holds, "BMY should fail");
  o.check(dt < 1e-3, "took " + std::to_string(dt) + " s");
  o.why << "d = 2,5,27,9; sum 1/d = 229/270; " << dt * 1e6 << " us";
  return o;
}

Outcome capacities() {
  Outcome o;
  Scene s = hirzebruch_scene(3, 13, -8, HirzebruchPlacement::NodeOnTangentT1);
  auto rep = sum_ei(s);
  o.check(rep.sum == Rat(5, 4), "sum e = " + to_string(rep.sum));
  o.check(rep.bark_square == -Rat(5, 4), "bark square");
  std::vector<std::int64_t> eleven(11, -2);
  o.check(oracle::capacity({-3}) + oracle::capacity(eleven) == Rat(5, 4), "oracle capacities");
  o.check(rep.sum > 1, "sum should exceed 1");
  o.why << "sum e = 1/3 + 11/12 = " << to_string(rep.sum);
  return o;
}

Outcome registry() {
  Outcome o;
  auto t0 = Clock::now();
  auto reg = load_registry(std::string(CSTAR_DATA_DIR) + "/scenarios");
  auto rep = run_registry(reg, "");
  const double dt = seconds_since(t0);
  for (const auto& out : rep.outcomes) o.check(out.pass, out.name + ": " + out.detail);
  o.check(dt < 60, "took " + std::to_string(dt) + " s");

  auto find = [&](const std::string& name) -> const ScenarioOutcome* {
    for (const auto& out : rep.outcomes)
      if (out.name == name) return &out;
    return nullptr;
  };
  auto tuples_of = [&](const std::string& name) {
    const ScenarioOutcome* out = find(name);
    o.check(out != nullptr, "missing scenario " + name);
    return out ? out->solutions.tuples : std::vector<Tuple>{{-999}};
  };
  o.check(tuples_of("3.4-ct2-3").empty(), "4s+3b=28 system not empty");
  o.check(tuples_of("3.4-ct2-2") == std::vector<Tuple>{{5, 7, 0, 1}, {6, 6, 2, 2}}, "c~2=2 system");
  o.check(tuples_of("3.6-final-c3").empty(), "6+c^2<5c not empty");
  o.check(tuples_of("4.5-discriminant").empty(), "discriminant system not empty");
  const ScenarioOutcome* en = find("4.14-enumeration");
  o.check(en != nullptr, "missing 4.14 enumeration");
  if (en) {
    auto sol = project(en->solutions, {"gamma", "d1", "d2"});
    o.check(sol == std::vector<Tuple>{{6, 2, 2}, {6, 2, 3}, {6, 3, 2}, {7, 2, 2}, {8, 2, 2}},
            "4.14 enumeration");
  }
  o.why << rep.outcomes.size() << " scenarios in " << dt << " s";
  return o;
}

Outcome hn_sequences() {
  Outcome o;
  Rng rng(2024);
  int simulated = 0;
  for (int i = 0; i < 1000; ++i) {
    HNSequence seq = random_hn_sequence(rng, 50);
    Int sum_p = 0, sum_cp = 0;
    std::vector<std::int64_t> euclid;
    for (const auto& pr : seq) {
      sum_p += pr.p;
      sum_cp += Int(pr.c) * pr.p;
      auto e = oracle::euclid(pr.c, pr.p);
      euclid.insert(euclid.end(), e.begin(), e.end());
    }
    std::vector<std::int64_t> m = multiplicity_sequence(seq);
    if (!is_transversal_smooth(seq)) {
      BranchPair bp{seq, validate({{1, 1}}), false, 0};
      m = build_resolution(bp).multiplicities;
      ++simulated;
    }
    Int s1 = 0, s2 = 0;
    for (auto x : m) {
      s1 += x;
      s2 += Int(x) * x;
    }
    o.check(m == euclid, "multiplicities of " + to_string(seq));
    o.check(s1 == seq.front().c + sum_p - 1, "sum for " + to_string(seq));
    o.check(s2 == sum_cp, "square sum for " + to_string(seq));
  }
  o.why << "1000 sequences, " << simulated << " through the blowup simulation";
  return o;
}

Outcome rewrites() {
  Outcome o;
  Rng rng(7);
  int sprout = 0, subdiv = 0;
  for (int seq = 0; seq < 500; ++seq) {
    WeightedTree t = random_tree(rng, int(uniform(rng, 1, 10)), -4, 1);
    RewriteTracker tr(t, uniform(rng, -5, 9));
    for (int step = 0; step < 20; ++step) {
      std::vector<int> down;
      for (int v : tr.tree().ids())
        if (tr.tree().weight(v) == -1 && tr.tree().degree(v) <= 2) down.push_back(v);
      if (tr.tree().size() < 20 && (down.empty() || uniform(rng, 0, 1) == 0)) {
        auto ids = tr.tree().ids();
        if (ids.empty()) {
          tr.blow_up(BlowupSite::free_point());
          continue;
        }
        int v = ids[std::size_t(uniform(rng, 0, std::int64_t(ids.size()) - 1))];
        auto nb = tr.tree().neighbors(v);
        tr.blow_up(!nb.empty() && uniform(rng, 0, 1) ? BlowupSite::edge(v, nb.front())
                                                     : BlowupSite::vertex(v));
      } else if (!down.empty()) {
        const Int before = oracle::kk(tr.tree(), tr.k_squared());
        auto r = tr.blow_down(down[std::size_t(uniform(rng, 0, std::int64_t(down.size()) - 1))]);
        const Int delta = oracle::kk(tr.tree(), tr.k_squared()) - before;
        if (r.kind == RewriteKind::Sprouting) {
          ++sprout;
          o.check(delta == 1, "sprouting delta " + delta.str());
        } else if (r.kind == RewriteKind::Subdivisional) {
          ++subdiv;
          o.check(delta == 0, "subdivisional delta " + delta.str());
        }
      }
      o.check(tr.counter() == tr.recompute(), "counter drift");
      o.check(tr.counter() == oracle::kk(tr.tree(), tr.k_squared()), "oracle drift");
    }
  }
  o.why << "500 sequences; " << sprout << " sprouting, " << subdiv << " subdivisional blowdowns";
  return o;
}

Outcome chains_and_trees() {
  Outcome o;
  long chains = 0;
  for (int len = 1; len <= 8; ++len) {
    std::vector<std::int64_t> w(std::size_t(len), -2);
    for (;;) {
      ++chains;
      Rat e = chain_capacity(w);
      o.check(e >= Rat(1, -w[0]) && e > 0 && e < 1, "capacity bound");
      std::size_t k = 0;
      while (k < w.size() && w[k] == -6) w[k++] = -2;
      if (k == w.size()) break;
      --w[k];
    }
  }
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    WeightedTree t = random_nc_minimal_tree(rng, int(uniform(rng, 2, 14)));
    Rat total = 0;
    for (const auto& tw : admissible_maximal_twigs(t)) {
      std::vector<std::int64_t> w;
      for (int v : tw.ids) w.push_back(t.weight(v));
      total += oracle::capacity(w);
    }
    o.check(self_intersection(t, bark_divisor(t)) == -total, "bark square on tree " + std::to_string(i));
  }
  for (int i = 0; i < 500; ++i) {
    WeightedTree t = random_tree(rng, int(uniform(rng, 1, 12)), -6, 2);
    o.check(determinant(t) == oracle::neg_det(t, t.ids()), "determinant on tree " + std::to_string(i));
  }
  o.why << chains << " chains, 200 bark trees, 500 determinant trees";
  return o;
}

Outcome hirzebruch() {
  Outcome o;
  long cases = 0;
  for (int a = -30; a <= 30; ++a)
    for (int b = -30; b <= 30; ++b)
      for (int n = -30; n <= 30; ++n) {
        ++cases;
        const bool zero = hirzebruch_genus_defect(a, b, n) == 0;
        const Int factored = Int(a - 1) * (Int(a) * n + 2 * b - 2);
        o.check(zero == (factored == 0), "at " + std::to_string(a) + "," + std::to_string(b) + "," +
                                             std::to_string(n));
      }
  o.why << cases << " triples";
  return o;
}

std::pair<int, std::string> run(const std::string& cmd) {
  std::string out;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), int(buf.size()), p)) out += buf.data();
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Outcome end_to_end() {
  Outcome o;
  const std::string cli = CSTAR_CLI;
  auto [code, out] = run(cli + " resolve --input " + CSTAR_DATA_DIR + "/inputs/hyperbola.json");
  o.check(code == 0, "resolve exit " + std::to_string(code));
  o.check(std::regex_search(out, std::regex("E'\\^2 = 4\\b")), "E'^2 = 4 missing");
  o.check(std::regex_search(out, std::regex("E'\\.D' = 2\\b")), "E'.D' = 2 missing");
  o.check(std::regex_search(out, std::regex("h_Phi = 0\\b")), "h_Phi = 0 missing");
  auto [vcode, vout] = run(cli + " verify");
  o.check(vcode == 0, "verify exit " + std::to_string(vcode));
  o.why << "resolve and verify exit 0";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"determinants and BMY sum", determinants},
      {"capacities", capacities},
      {"scenario registry", registry},
      {"HN multiplicity formulas", hn_sequences},
      {"K.(K+T) bookkeeping", rewrites},
      {"chains, bark and determinant oracle", chains_and_trees},
      {"Hirzebruch genus identity", hirzebruch},
      {"CLI end to end", end_to_end},
  };
  bool all = true;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.why << "exception: " << e.what();
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << " (" << name << "): " << o.why.str()
              << "\n";
  }
  return all ? 0 : 1;
}
