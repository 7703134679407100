#include "cstar/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace cstar {

std::string stage_name(Stage s) {
  switch (s) {
    case Stage::Resolved: return "resolved";
    case Stage::Minimal: return "minimal";
    case Stage::TwoReduced: return "two-reduced";
  }
  return "?";
}

std::string case_name(ElementaryCase c) {
  switch (c) {
    case ElementaryCase::I: return "i";
    case ElementaryCase::II: return "ii";
    case ElementaryCase::III: return "iii";
  }
  return "?";
}

// ---------------- counters ----------------

Int e_dot_d(const Scene& s) {
  Int total = 0;
  for (int v : s.tree.neighbors(s.e_id)) total += s.tree.multiplicity(s.e_id, v);
  return total;
}

static std::vector<int> boundary_ids(const Scene& s) {
  std::vector<int> out;
  for (int v : s.tree.ids())
    if (v != s.e_id) out.push_back(v);
  return out;
}

Int k_dot_k_plus_d(const Scene& s) { return kk_plus_t(s.tree, boundary_ids(s), s.k_squared); }

Int k_plus_d_plus_e_squared(const Scene& s) {
  // K^2 + 2 K.(D+E) + (D+E)^2, every component rational.
  Int k_dot = 0, self = 0;
  for (int v : s.tree.ids()) {
    k_dot += -2 - Int(s.tree.weight(v));
    self += s.tree.weight(v);
  }
  self += 2 * Int(s.tree.edges().size());
  return s.k_squared + 2 * k_dot + self;
}

void refresh_counters(Scene& s) {
  s.gamma = -Int(s.tree.weight(s.e_id));
  s.epsilon = 2 - k_plus_d_plus_e_squared(s);
}

// ---------------- resolution of the two branches ----------------

namespace {

struct BranchSim {
  HNSequence pairs;
  std::vector<int> labels;
  std::size_t idx = 0;
  int cu = -1;  // -1: the point is a free point of cv
  int cv = -1;
  std::int64_t vu = 0, vv = 0;
  int label = 0;  // location of the free point on cv
  bool moved = false;
  bool done = false;
  bool finished() const { return idx >= pairs.size(); }
};

using PointKey = std::tuple<int, int, int>;

PointKey key_of(const BranchSim& b) {
  if (b.cu < 0) return {0, b.cv, b.label};
  return {1, std::min(b.cu, b.cv), std::max(b.cu, b.cv)};
}

bool same_ratio(const HNPair& x, const HNPair& y) { return x.c * y.p == x.p * y.c; }

std::vector<int> default_labels(std::size_t n, int branch, const BranchPair& bp) {
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (bp.same_point && int(i) < bp.s)
      out[i] = int(i) + 1;
    else
      out[i] = (branch + 1) * 10000 + int(i);
  }
  return out;
}

}  // namespace

Scene build_resolution(const BranchPair& bp, const TangencyChoices& choices) {
  validate_branch_pair(bp);
  const HNSequence* seqs[2] = {&bp.lambda, &bp.lambda_t};
  const std::vector<int>* given[2] = {&choices.labels, &choices.labels_t};

  std::vector<BranchSim> br(2);
  for (int b = 0; b < 2; ++b) {
    br[b].pairs = *seqs[b];
    if (given[b]->empty()) {
      br[b].labels = default_labels(seqs[b]->size(), b, bp);
    } else {
      if (given[b]->size() != seqs[b]->size())
        throw ResolutionError("inconsistent tangency choices: one label per pair is required");
      br[b].labels = *given[b];
    }
  }
  if (bp.same_point) {
    for (int i = 0; i < bp.s; ++i)
      if (br[0].labels[i] != br[1].labels[i])
        throw ResolutionError("inconsistent tangency choices: common pair " +
                              std::to_string(i + 1) + " placed at different points");
    const std::size_t s = std::size_t(bp.s);
    if (s < bp.lambda.size() && s < bp.lambda_t.size() &&
        same_ratio(bp.lambda[s], bp.lambda_t[s]) && br[0].labels[s] == br[1].labels[s])
      throw ResolutionError("inconsistent tangency choices: pair " + std::to_string(s + 1) +
                            " would be common");
  }

  Scene sc;
  sc.source = bp;
  sc.line_id = 0;
  sc.tree.add_vertex(0, 1, Tag::LineAtInfinity);
  sc.pair_curves.assign(bp.lambda.size(), {});
  sc.pair_curves_t.assign(bp.lambda_t.size(), {});

  for (int b = 0; b < 2; ++b) {
    br[b].cv = sc.line_id;
    br[b].label = bp.same_point ? 0 : b + 1;
    br[b].vu = br[b].pairs[0].p;
    br[b].vv = br[b].pairs[0].c;
  }

  int generic = 1000000;
  int blowups = 0;
  int sprouting = 0;
  for (;;) {
    std::map<PointKey, std::vector<int>> groups;
    for (int b = 0; b < 2; ++b)
      if (!br[b].done) groups[key_of(br[b])].push_back(b);

    std::vector<int> centre;
    for (auto& [key, members] : groups) {
      if (members.size() >= 2) {
        for (int b : members)
          if (br[b].finished()) {
            // Still together after the last pair: separate in general position.
            br[b].pairs.push_back({1, 1});
            br[b].labels.push_back(generic++);
            br[b].vu = 1;
            br[b].vv = 1;
            sc.generic_separation = true;
          }
        centre = members;
        break;
      }
      BranchSim& one = br[members.front()];
      if (one.finished()) {
        one.done = true;
        continue;
      }
      if (!one.moved && one.cu < 0 && is_transversal_smooth(one.pairs)) {
        one.done = true;
        continue;
      }
      centre = members;
      break;
    }
    if (centre.empty()) break;

    const BranchSim& first = br[centre.front()];
    BlowupSite site =
        first.cu < 0 ? BlowupSite::vertex(first.cv) : BlowupSite::edge(first.cu, first.cv);
    auto res = blow_up(sc.tree, site, Tag::DComponent);
    sc.tree = std::move(res.tree);
    const int f = res.new_id;
    ++blowups;
    if (res.kind == RewriteKind::Sprouting) ++sprouting;

    std::int64_t m = 0;
    for (int b : centre) m += std::min(br[b].vu, br[b].vv);
    sc.multiplicities.push_back(m);
    sc.log.push_back({f, res.kind, site.a, site.b, m});

    for (int b : centre) {
      BranchSim& x = br[b];
      x.moved = true;
      if (x.idx < (b == 0 ? sc.pair_curves.size() : sc.pair_curves_t.size()))
        (b == 0 ? sc.pair_curves : sc.pair_curves_t)[x.idx].push_back(f);
      if (x.vu < x.vv) {
        x.vv -= x.vu;
        x.cu = f;
      } else if (x.vu > x.vv) {
        x.vu -= x.vv;
        x.cv = f;
      } else {
        const std::int64_t c_next = x.vu;
        x.label = x.labels[x.idx];
        x.cu = -1;
        x.cv = f;
        ++x.idx;
        if (!x.finished()) {
          if (x.pairs[x.idx].c != c_next)
            throw ResolutionError("HN pair does not continue the previous one");
          x.vu = x.pairs[x.idx].p;
          x.vv = x.pairs[x.idx].c;
        }
      }
    }
  }

  const Int d = degree_d(bp);
  Int sq = 0;
  for (auto m : sc.multiplicities) sq += Int(m) * m;
  const Int e_self = d * d - sq;
  sc.e_id = sc.tree.next_id();
  sc.tree.add_vertex(sc.e_id, static_cast<std::int64_t>(e_self), Tag::E);
  for (int b = 0; b < 2; ++b) sc.tree.add_edge(sc.e_id, br[b].cv);
  sc.tree.validate();

  sc.k_squared = 9 - blowups;
  sc.h_phi = sprouting;
  sc.r = repeated_leading_pairs(bp.lambda);
  sc.r_t = repeated_leading_pairs(bp.lambda_t);
  sc.stage = Stage::Resolved;
  refresh_counters(sc);
  return sc;
}

// ---------------- reconstruction over a Hirzebruch surface ----------------

Scene hirzebruch_scene(std::int64_t a, std::int64_t b, std::int64_t n,
                       HirzebruchPlacement placement) {
  struct Contact {
    int x, y;
    std::int64_t cx, cy;
  };
  const int t1 = 1, t2 = 2;
  std::vector<Contact> contacts;
  switch (placement) {
    case HirzebruchPlacement::NodeOffE:
      contacts = {{t1, -1, a, 0}, {t2, -1, b, 0}};
      break;
    case HirzebruchPlacement::NodeOnTangentT1:
      contacts = {{t1, t2, a, 1}};
      if (b > 1) contacts.push_back({t2, -1, b - 1, 0});
      break;
    case HirzebruchPlacement::NodeOnTangentT2:
      contacts = {{t1, t2, 1, b}};
      if (a > 1) contacts.push_back({t1, -1, a - 1, 0});
      break;
  }
  for (const auto& c : contacts)
    if (c.cx < 1 || (c.y >= 0 && c.cy < 1))
      throw ResolutionError("E_0 must meet T_1 and T_2 with positive contact");
  // Through the node with nothing left over, E would meet the boundary once.
  if (contacts.size() < 2)
    throw ResolutionError("E_0 must meet T_1 + T_2 in two points");

  Scene sc;
  sc.tree.add_vertex(t1, 0, Tag::DComponent);
  sc.tree.add_vertex(t2, -n, Tag::DComponent);
  sc.tree.add_edge(t1, t2);

  std::vector<int> meets;
  int blowups = 0;
  for (auto c : contacts) {
    if (c.y < 0) {
      auto r = blow_up(sc.tree, BlowupSite::vertex(c.x));
      sc.tree = std::move(r.tree);
      sc.log.push_back({r.new_id, r.kind, c.x, -1, 1});
      ++blowups;
      ++sc.t;
      c = {r.new_id, c.x, 1, c.cx - 1};
      if (c.cy == 0) {
        meets.push_back(c.x);
        continue;
      }
    }
    // E_0 is smooth and passes through the node x n y.
    for (;;) {
      auto r = blow_up(sc.tree, BlowupSite::edge(c.x, c.y));
      sc.tree = std::move(r.tree);
      sc.log.push_back({r.new_id, r.kind, c.x, c.y, 1});
      ++blowups;
      c.cx -= 1;
      c.cy -= 1;
      if (c.cx == 0 && c.cy == 0) {
        meets.push_back(r.new_id);
        break;
      }
      if (c.cx == 0)
        c = {r.new_id, c.y, 1, c.cy};
      else
        c = {c.x, r.new_id, c.cx, 1};
    }
  }
  for (std::size_t i = 0; i < sc.log.size(); ++i) sc.multiplicities.push_back(1);

  const Int e0_sq = Int(a) * (Int(a) * n + 2 * Int(b));
  sc.e_id = sc.tree.next_id();
  sc.tree.add_vertex(sc.e_id, static_cast<std::int64_t>(e0_sq - blowups), Tag::E);
  for (int v : meets) sc.tree.add_edge(sc.e_id, v);
  sc.tree.validate();
  sc.k_squared = 8 - blowups;
  sc.stage = Stage::Minimal;
  refresh_counters(sc);
  return sc;
}

// ---------------- contractions ----------------

Scene minimalize(const Scene& s) {
  Scene out = s;
  NCResult r = nc_minimalize(s.tree);
  out.tree = std::move(r.tree);
  out.h_psi = r.h_psi;
  out.e_touched = r.e_touched;
  out.k_squared = s.k_squared + Int(r.contracted.size());
  if (s.line_id >= 0 && !out.tree.has_vertex(s.line_id)) out.line_id = -1;
  out.stage = Stage::Minimal;
  refresh_counters(out);
  return out;
}

TwoReductionResult two_reduction(const Scene& s) {
  TwoReductionResult res;
  Scene sc = s;
  for (;;) {
    // Highest id first: the most recent blowup is undone first.
    int pick = -1;
    for (int v : sc.tree.ids()) {
      if (v == sc.e_id || sc.tree.weight(v) != -1) continue;
      if (sc.tree.multiplicity(v, sc.e_id) != 1) continue;
      if (sc.tree.degree_without_e(v) > 2) continue;
      pick = v;
    }
    if (pick < 0) break;
    if (sc.tree.degree_without_e(pick) == 1) ++res.t;
    sc.tree = contract_curve(sc.tree, pick);
    sc.k_squared += 1;
    res.contracted.push_back(pick);
    if (pick == sc.line_id) sc.line_id = -1;
  }
  sc.t = res.t;
  sc.stage = Stage::TwoReduced;
  // gamma and epsilon keep their values on the surface before the reduction.

  const Int e0_sq = sc.tree.weight(sc.e_id);
  const Int e0_k = -2 - e0_sq;
  const Int e0_t = e_dot_d(sc);
  Int k_t = 0;
  for (int v : sc.tree.ids())
    if (v != sc.e_id) k_t += -2 - Int(sc.tree.weight(v));
  res.lhs = e0_k + e0_t + 2 * sc.k_squared + 2 * k_t;
  res.rhs = 8 - 2 * s.epsilon - s.gamma + res.t;
  res.identity_holds = res.lhs == res.rhs;
  res.scene = std::move(sc);
  return res;
}

InequalityReport check_basic_inequality(const Scene& s) {
  InequalityReport r;
  r.slack = 7 + Int(s.t) - 2 * s.epsilon - s.gamma;
  r.holds = r.slack >= 0;
  r.asserted = s.no_asymptote;
  return r;
}

SumEiReport sum_ei(const Scene& s) {
  SumEiReport r;
  r.twigs = admissible_maximal_twigs(s.tree);
  r.sum = 0;
  for (const auto& tw : r.twigs) {
    r.capacities.push_back(capacity(s.tree, tw));
    r.sum += r.capacities.back();
  }
  r.bark_square = self_intersection(s.tree, bark_divisor(s.tree));
  r.bound = 1 + s.epsilon;
  r.bound_holds = r.sum <= Rat(r.bound);
  return r;
}

IdentityReport check_h_phi(const Scene& resolved, const Scene& minimal) {
  IdentityReport r;
  r.h_phi_from_kk = 6 - k_dot_k_plus_d(resolved);
  r.h_phi_from_counters = 2 + minimal.epsilon + minimal.gamma + minimal.h_psi;
  r.holds = r.h_phi_from_kk == resolved.h_phi && r.h_phi_from_counters == resolved.h_phi;
  return r;
}

std::vector<std::string> scene_violations(const Scene& s) {
  std::vector<std::string> out;
  try {
    s.tree.validate();
  } catch (const GraphError& e) {
    out.push_back(std::string("graph: ") + e.what());
  }
  if (s.e_id < 0 || !s.tree.has_vertex(s.e_id)) {
    out.push_back("no E vertex");
    return out;
  }
  if (e_dot_d(s) != 2) out.push_back("E.D = " + to_string(e_dot_d(s)) + ", expected 2");

  const auto ids = s.tree.ids();
  bool chain = is_connected(s.tree, ids) && s.tree.edges().size() + 1 == ids.size();
  for (int v : ids)
    if (s.tree.degree(v) > 2) chain = false;
  if (chain) out.push_back("D+E is a chain");

  if (s.no_asymptote && s.gamma <= 0) out.push_back("gamma <= 0 on a no-asymptote scene");
  if (s.stage == Stage::Resolved)
    for (int v : ids)
      if (v != s.e_id && v != s.line_id && s.tree.weight(v) > -1)
        out.push_back("exceptional vertex " + std::to_string(v) + " has weight > -1");
  return out;
}

// ---------------- elementary transformation ----------------

ElementaryResult elementary_transformation(const Scene& resolved, int l, QPrime q) {
  auto fail = [](const std::string& why) {
    return ResolutionError("chain pattern not present: " + why);
  };
  if (l < 1) throw fail("l must be positive");
  if (resolved.stage != Stage::Resolved || resolved.line_id < 0)
    throw fail("scene must be a resolution with its line at infinity");
  if (resolved.source) {
    const BranchPair& bp = *resolved.source;
    auto first_ok = [&](const HNSequence& seq) {
      return seq.front().c * l == seq.front().p * (l + 1);
    };
    if (!bp.same_point || bp.s < 1 || !first_ok(bp.lambda) || !first_ok(bp.lambda_t))
      throw fail("the branches do not share a first pair (l+1,l)c_2");
  }
  const auto& log = resolved.log;
  const WeightedTree& g = resolved.tree;
  if (log.size() < std::size_t(l) + 2) throw fail("too few blowups");

  ElementaryResult out;
  out.l = l;
  out.m = log[0].new_id;
  out.c = log[std::size_t(l)].new_id;
  out.chain_l.push_back(resolved.line_id);
  for (int i = 1; i < l; ++i) out.chain_l.push_back(log[std::size_t(i)].new_id);

  if (g.weight(resolved.line_id) != -1) throw fail("the line at infinity is not a (-1)-curve");
  for (std::size_t i = 1; i < out.chain_l.size(); ++i) {
    if (g.weight(out.chain_l[i]) != -2) throw fail("L is not a (-2)-chain");
    if (g.multiplicity(out.chain_l[i - 1], out.chain_l[i]) != 1) throw fail("L is not a chain");
  }
  if (g.degree(resolved.line_id) != 1) throw fail("the line at infinity is not a tip");
  if (g.multiplicity(out.chain_l.back(), out.c) != 1) throw fail("C does not meet L");
  if (g.multiplicity(out.c, out.m) != 1) throw fail("C does not meet M");
  if (g.weight(out.m) != -(l + 1) || g.degree(out.m) != 1) throw fail("M is not a -(l+1) tip");

  WeightedTree t = g;
  std::set<int> a_sharp;
  int a = -1;
  if (q == QPrime::BranchCenter) {
    const auto& rec = log[std::size_t(l) + 1];
    if (rec.kind != RewriteKind::Sprouting || rec.x != out.c)
      throw fail("the branches do not pass through a free point of C");
    a = rec.new_id;
    for (std::size_t i = std::size_t(l) + 1; i < log.size(); ++i) a_sharp.insert(log[i].new_id);
  } else {
    auto r = blow_up(t, BlowupSite::vertex(out.c));
    t = std::move(r.tree);
    a = r.new_id;
    a_sharp.insert(a);
  }
  out.a = a;

  int last = a;
  for (int i = 1; i < l; ++i) {
    auto r = blow_up(t, BlowupSite::vertex(last));
    t = std::move(r.tree);
    last = r.new_id;
    out.chain_b.push_back(last);
  }
  const int new_line = last;
  const int added = (l - 1) + (q == QPrime::FreePoint ? 1 : 0);

  // Minimal normal-crossing model of the new boundary inside Gamma.
  int contracted = 0;
  for (;;) {
    int pick = -1;
    for (int v : t.ids())
      if (v != new_line && nc_eligible(t, v)) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    t = contract_curve(t, pick);
    ++contracted;
  }
  t.set_tag(new_line, Tag::LineAtInfinity);

  for (int v : t.ids())
    if (v != resolved.e_id) out.surviving.push_back(v);
  out.before = g.size() - 1;
  out.after = out.surviving.size();

  std::set<int> predicted(a_sharp);
  predicted.insert(out.chain_b.begin(), out.chain_b.end());
  if (q == QPrime::FreePoint) {
    out.kind = ElementaryCase::III;
    for (int v : g.ids())
      if (v != resolved.e_id &&
          std::find(out.chain_l.begin(), out.chain_l.end(), v) == out.chain_l.end())
        predicted.insert(v);
  } else if (g.weight(out.c) <= -3) {
    out.kind = ElementaryCase::III;
    predicted.insert(out.m);
    predicted.insert(out.c);
  } else if (l > 1) {
    out.kind = ElementaryCase::II;
    predicted.insert(out.m);
  } else {
    out.kind = ElementaryCase::I;
  }
  out.predicted.assign(predicted.begin(), predicted.end());
  out.matches_prediction = out.predicted == out.surviving;

  Scene ns;
  ns.tree = std::move(t);
  ns.e_id = resolved.e_id;
  ns.line_id = new_line;
  ns.k_squared = resolved.k_squared - added + contracted;
  ns.no_asymptote = resolved.no_asymptote;
  ns.stage = Stage::Resolved;
  refresh_counters(ns);
  ns.h_phi = static_cast<int>(6 - k_dot_k_plus_d(ns));
  out.scene = std::move(ns);
  return out;
}

}  // namespace cstar
