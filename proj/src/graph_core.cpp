#include "cstar/graph_core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace cstar {

std::string tag_name(Tag t) {
  switch (t) {
    case Tag::E: return "E";
    case Tag::LineAtInfinity: return "LineAtInfinity";
    case Tag::DComponent: return "DComponent";
    case Tag::None: break;
  }
  return "None";
}

Tag parse_tag(const std::string& s) {
  if (s == "E") return Tag::E;
  if (s == "LineAtInfinity" || s == "L") return Tag::LineAtInfinity;
  if (s == "DComponent" || s == "D") return Tag::DComponent;
  if (s.empty() || s == "None") return Tag::None;
  throw GraphError("unknown tag '" + s + "'");
}

std::string class_name(ContractibilityClass c) {
  switch (c) {
    case ContractibilityClass::AdmissibleChain: return "AdmissibleChain";
    case ContractibilityClass::Fork22n: return "Fork22n";
    case ContractibilityClass::Fork233: return "Fork233";
    case ContractibilityClass::Fork234: return "Fork234";
    case ContractibilityClass::Fork235: return "Fork235";
    case ContractibilityClass::NotContractible: break;
  }
  return "NotContractible";
}

std::string class_name(FujitaZeroClass c) {
  switch (c) {
    case FujitaZeroClass::ChainType: return "ChainType";
    case FujitaZeroClass::TwoBranchFourTips: return "TwoBranchFourTips";
    case FujitaZeroClass::FiniteFork: return "FiniteFork";
    case FujitaZeroClass::None: break;
  }
  return "None";
}

std::string kind_name(RewriteKind k) {
  switch (k) {
    case RewriteKind::Sprouting: return "Sprouting";
    case RewriteKind::Subdivisional: return "Subdivisional";
    case RewriteKind::Free: break;
  }
  return "Free";
}

// ---------------- WeightedTree ----------------

void WeightedTree::require(int id) const {
  if (!has_vertex(id)) throw GraphError("unknown vertex id " + std::to_string(id));
}

void WeightedTree::add_vertex(int id, std::int64_t weight, Tag tag) {
  if (has_vertex(id)) throw GraphError("duplicate vertex id " + std::to_string(id));
  weights_[id] = weight;
  tags_[id] = tag;
  adj_[id];
}

void WeightedTree::remove_vertex(int id) {
  require(id);
  for (auto& [n, m] : adj_[id]) adj_[n].erase(id);
  adj_.erase(id);
  weights_.erase(id);
  tags_.erase(id);
}

void WeightedTree::add_edge(int a, int b) {
  require(a);
  require(b);
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
  adj_[a][b] += 1;
  adj_[b][a] += 1;
}

void WeightedTree::remove_edge(int a, int b) {
  if (multiplicity(a, b) == 0)
    throw GraphError("no edge " + std::to_string(a) + "-" + std::to_string(b));
  if (--adj_[a][b] == 0) adj_[a].erase(b);
  if (--adj_[b][a] == 0) adj_[b].erase(a);
}

std::int64_t WeightedTree::weight(int id) const {
  require(id);
  return weights_.at(id);
}

void WeightedTree::set_weight(int id, std::int64_t w) {
  require(id);
  weights_[id] = w;
}

Tag WeightedTree::tag(int id) const {
  require(id);
  return tags_.at(id);
}

void WeightedTree::set_tag(int id, Tag t) {
  require(id);
  tags_[id] = t;
}

int WeightedTree::multiplicity(int a, int b) const {
  require(a);
  require(b);
  const auto& m = adj_.at(a);
  auto it = m.find(b);
  return it == m.end() ? 0 : it->second;
}

int WeightedTree::degree(int id) const {
  require(id);
  int d = 0;
  for (const auto& [n, m] : adj_.at(id)) d += m;
  return d;
}

int WeightedTree::degree_without_e(int id) const {
  require(id);
  int d = 0;
  for (const auto& [n, m] : adj_.at(id))
    if (tags_.at(n) != Tag::E) d += m;
  return d;
}

std::vector<int> WeightedTree::neighbors(int id) const {
  require(id);
  std::vector<int> out;
  for (const auto& [n, m] : adj_.at(id)) out.push_back(n);
  return out;
}

std::vector<int> WeightedTree::ids() const {
  std::vector<int> out;
  out.reserve(weights_.size());
  for (const auto& [id, w] : weights_) out.push_back(id);
  return out;
}

std::optional<int> WeightedTree::find_tag(Tag t) const {
  for (const auto& [id, tg] : tags_)
    if (tg == t) return id;
  return std::nullopt;
}

std::optional<int> WeightedTree::e_vertex() const { return find_tag(Tag::E); }

std::vector<std::pair<int, int>> WeightedTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, nb] : adj_)
    for (const auto& [b, m] : nb)
      if (a < b)
        for (int k = 0; k < m; ++k) out.emplace_back(a, b);
  return out;
}

int WeightedTree::next_id() const { return weights_.empty() ? 0 : weights_.rbegin()->first + 1; }

void WeightedTree::validate() const {
  int e_count = 0;
  for (const auto& [id, t] : tags_)
    if (t == Tag::E) ++e_count;
  if (e_count > 1) throw GraphError("more than one vertex tagged E");

  std::map<int, int> parent;
  for (const auto& [id, w] : weights_) parent[id] = id;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges()) {
    const bool touches_e = tags_.at(a) == Tag::E || tags_.at(b) == Tag::E;
    if (touches_e) continue;
    if (multiplicity(a, b) > 1)
      throw GraphError("multiple intersection between non-E components " + std::to_string(a) +
                       " and " + std::to_string(b));
    int ra = find(a), rb = find(b);
    if (ra == rb) throw GraphError("cycle among non-E components");
    parent[ra] = rb;
  }
}

// ---------------- matrices and determinants ----------------

IntMatrix intersection_matrix(const WeightedTree& tree, const std::vector<int>& subset) {
  std::set<int> seen;
  for (int id : subset) {
    if (!tree.has_vertex(id)) throw GraphError("invalid subset: unknown id " + std::to_string(id));
    if (!seen.insert(id).second) throw GraphError("invalid subset: repeated id " + std::to_string(id));
  }
  const std::size_t n = subset.size();
  IntMatrix q(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    q[i][i] = tree.weight(subset[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const int m = tree.multiplicity(subset[i], subset[j]);
      q[i][j] = q[j][i] = m;
    }
  }
  return q;
}

Int neg_determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -Int(m[i][j]);
  // Bareiss elimination with row swaps.
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Int determinant(const WeightedTree& tree, const std::vector<int>& subset) {
  return neg_determinant(intersection_matrix(tree, subset));
}

Int determinant(const WeightedTree& tree) { return determinant(tree, tree.ids()); }

Int chain_determinant(const std::vector<std::int64_t>& weights) {
  // d([b_k..b_s]) = (-b_k) d([b_{k+1}..b_s]) - d([b_{k+2}..b_s])
  Int next = 1, after = 0;
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    Int cur = Int(-*it) * next - after;
    after = next;
    next = cur;
  }
  return next;
}

bool negative_definite(const IntMatrix& q) {
  for (std::size_t k = 1; k <= q.size(); ++k) {
    IntMatrix lead(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = q[i][j];
    if (neg_determinant(lead) <= 0) return false;
  }
  return true;
}

// ---------------- chains, twigs, barks ----------------

Rat chain_capacity(const std::vector<std::int64_t>& weights) {
  if (weights.empty()) throw GraphError("capacity of an empty chain");
  for (auto w : weights)
    if (w > -2) throw GraphError("chain is not admissible: weight " + std::to_string(w) + " > -2");
  std::vector<std::int64_t> rest(weights.begin() + 1, weights.end());
  return Rat(chain_determinant(rest), chain_determinant(weights));
}

static std::vector<std::int64_t> chain_weights(const WeightedTree& tree, const Chain& chain) {
  std::vector<std::int64_t> w;
  for (std::size_t i = 0; i < chain.ids.size(); ++i) {
    w.push_back(tree.weight(chain.ids[i]));
    if (i > 0 && tree.multiplicity(chain.ids[i - 1], chain.ids[i]) != 1)
      throw GraphError("chain ids are not consecutive neighbours");
  }
  return w;
}

Rat capacity(const WeightedTree& tree, const Chain& chain) {
  return chain_capacity(chain_weights(tree, chain));
}

std::vector<Chain> maximal_twigs(const WeightedTree& tree) {
  std::vector<Chain> out;
  const auto e = tree.e_vertex();
  for (int tip : tree.ids()) {
    if (e && tip == *e) continue;
    if (tree.degree(tip) != 1) continue;
    Chain c{{tip}};
    int prev = tip;
    int cur = tree.neighbors(tip).front();
    bool whole_component_is_chain = false;
    for (;;) {
      if (e && cur == *e) break;
      const int d = tree.degree(cur);
      if (d >= 3) break;
      if (d == 1) {
        whole_component_is_chain = true;
        break;
      }
      c.ids.push_back(cur);
      int nxt = -1;
      for (int n : tree.neighbors(cur))
        if (n != prev) nxt = n;
      if (nxt < 0) break;  // double contact with prev; cannot happen off E
      prev = cur;
      cur = nxt;
    }
    if (!whole_component_is_chain) out.push_back(std::move(c));
  }
  return out;
}

bool is_admissible(const WeightedTree& tree, const Chain& chain) {
  for (int id : chain.ids)
    if (tree.weight(id) > -2) return false;
  return !chain.ids.empty();
}

std::vector<Chain> admissible_maximal_twigs(const WeightedTree& tree) {
  std::vector<Chain> out;
  for (auto& c : maximal_twigs(tree))
    if (is_admissible(tree, c)) out.push_back(c);
  return out;
}

// Solves a x = b over the rationals; a must be nonsingular.
static std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw GraphError("singular twig matrix");
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

DivisorQ bark_divisor(const WeightedTree& tree) {
  DivisorQ bk;
  for (const auto& twig : admissible_maximal_twigs(tree)) {
    const IntMatrix q = intersection_matrix(tree, twig.ids);
    const std::size_t n = q.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    std::vector<Rat> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(q[i][j]);
      // (K+T).T_i = -2 + (number of other components met by T_i)
      rhs[i] = Rat(-2 + tree.degree(twig.ids[i]));
    }
    auto x = solve_rational(std::move(a), std::move(rhs));
    for (std::size_t i = 0; i < n; ++i) bk[twig.ids[i]] = x[i];
  }
  return bk;
}

Rat self_intersection(const WeightedTree& tree, const DivisorQ& div) {
  Rat s = 0;
  for (const auto& [a, xa] : div)
    for (const auto& [b, xb] : div) {
      const std::int64_t m = a == b ? tree.weight(a) : tree.multiplicity(a, b);
      if (m != 0) s += xa * xb * Rat(m);
    }
  return s;
}

// ---------------- subgraphs and classification ----------------

WeightedTree induced(const WeightedTree& tree, const std::vector<int>& subset) {
  WeightedTree h;
  for (int id : subset) h.add_vertex(id, tree.weight(id), tree.tag(id));
  for (const auto& [a, b] : tree.edges())
    if (h.has_vertex(a) && h.has_vertex(b)) h.add_edge(a, b);
  return h;
}

bool is_connected(const WeightedTree& tree, const std::vector<int>& subset) {
  if (subset.empty()) return true;
  WeightedTree h = induced(tree, subset);
  std::set<int> seen{subset.front()};
  std::vector<int> stack{subset.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int n : h.neighbors(v))
      if (seen.insert(n).second) stack.push_back(n);
  }
  return seen.size() == h.size();
}

namespace {

struct Shape {
  WeightedTree h;
  std::vector<int> branching;  // degree >= 3 inside h
  bool acyclic = true;
};

Shape shape_of(const WeightedTree& tree, const std::vector<int>& subset) {
  Shape s{induced(tree, subset), {}, true};
  if (s.h.edges().size() + 1 != s.h.size()) s.acyclic = false;
  for (int v : s.h.ids())
    if (s.h.degree(v) >= 3) s.branching.push_back(v);
  return s;
}

// Weights along the branch leaving `center` through `first`, outward.
std::vector<std::int64_t> branch_weights(const WeightedTree& h, int center, int first) {
  std::vector<std::int64_t> w;
  int prev = center, cur = first;
  for (;;) {
    w.push_back(h.weight(cur));
    int nxt = -1;
    for (int n : h.neighbors(cur))
      if (n != prev) nxt = n;
    if (nxt < 0) break;
    prev = cur;
    cur = nxt;
  }
  return w;
}

// Sorted branch determinants of a one-branching-vertex tree with degree 3;
// empty when the shape does not fit or a branch is not admissible.
std::vector<Int> fork_branch_dets(const Shape& s) {
  if (!s.acyclic || s.branching.size() != 1) return {};
  const int c = s.branching.front();
  if (s.h.degree(c) != 3) return {};
  std::vector<Int> dets;
  for (int n : s.h.neighbors(c)) {
    auto w = branch_weights(s.h, c, n);
    for (auto x : w)
      if (x > -2) return {};
    dets.push_back(chain_determinant(w));
  }
  std::sort(dets.begin(), dets.end());
  return dets;
}

}  // namespace

ContractibilityClass classify_contractible(const WeightedTree& tree,
                                           const std::vector<int>& subset) {
  if (subset.empty() || !is_connected(tree, subset))
    throw GraphError("classify_contractible: subset is empty or disconnected");
  Shape s = shape_of(tree, subset);
  for (int v : s.h.ids())
    if (s.h.weight(v) > -2) return ContractibilityClass::NotContractible;
  if (!s.acyclic) return ContractibilityClass::NotContractible;
  const IntMatrix q = intersection_matrix(tree, subset);
  auto checked = [&](ContractibilityClass c) {
    return negative_definite(q) ? c : ContractibilityClass::NotContractible;
  };
  if (s.branching.empty()) {
    if (!negative_definite(q)) throw GraphError("admissible chain failed negative definiteness");
    return ContractibilityClass::AdmissibleChain;
  }
  auto d = fork_branch_dets(s);
  if (d.size() != 3 || d[0] != 2) return ContractibilityClass::NotContractible;
  if (d[1] == 2) return checked(ContractibilityClass::Fork22n);
  if (d[1] == 3 && d[2] == 3) return checked(ContractibilityClass::Fork233);
  if (d[1] == 3 && d[2] == 4) return checked(ContractibilityClass::Fork234);
  if (d[1] == 3 && d[2] == 5) return checked(ContractibilityClass::Fork235);
  return ContractibilityClass::NotContractible;
}

FujitaZeroClass classify_fujita_zero(const WeightedTree& tree, const std::vector<int>& subset) {
  if (subset.empty() || !is_connected(tree, subset)) return FujitaZeroClass::None;
  Shape s = shape_of(tree, subset);
  if (!s.acyclic) return FujitaZeroClass::None;
  if (s.branching.empty()) return FujitaZeroClass::ChainType;
  if (s.branching.size() == 1) {
    auto d = fork_branch_dets(s);
    if (d.size() == 3) {
      const std::vector<std::vector<int>> finite = {{3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
      for (const auto& f : finite)
        if (d[0] == f[0] && d[1] == f[1] && d[2] == f[2]) return FujitaZeroClass::FiniteFork;
    }
    return FujitaZeroClass::None;
  }
  if (s.branching.size() == 2) {
    for (int b : s.branching)
      if (s.h.degree(b) != 3) return FujitaZeroClass::None;
    auto twigs = maximal_twigs(s.h);
    if (twigs.size() != 4) return FujitaZeroClass::None;
    for (const auto& t : twigs)
      if (t.ids.size() != 1 || s.h.weight(t.ids.front()) != -2) return FujitaZeroClass::None;
    return FujitaZeroClass::TwoBranchFourTips;
  }
  return FujitaZeroClass::None;
}

// ---------------- rewriting ----------------

BlowupResult blow_up(const WeightedTree& tree, const BlowupSite& site, Tag new_tag) {
  WeightedTree t = tree;
  const int id = t.next_id();
  switch (site.kind) {
    case BlowupSite::Vertex:
      if (!t.has_vertex(site.a)) throw GraphError("invalid blowup site: unknown vertex");
      t.add_vertex(id, -1, new_tag);
      t.set_weight(site.a, t.weight(site.a) - 1);
      t.add_edge(site.a, id);
      return {std::move(t), RewriteKind::Sprouting, id};
    case BlowupSite::Edge:
      if (!t.has_vertex(site.a) || !t.has_vertex(site.b) || t.multiplicity(site.a, site.b) == 0)
        throw GraphError("invalid blowup site: no such edge");
      t.remove_edge(site.a, site.b);
      t.add_vertex(id, -1, new_tag);
      t.add_edge(site.a, id);
      t.add_edge(id, site.b);
      t.set_weight(site.a, t.weight(site.a) - 1);
      t.set_weight(site.b, t.weight(site.b) - 1);
      return {std::move(t), RewriteKind::Subdivisional, id};
    case BlowupSite::FreePoint:
      t.add_vertex(id, -1, new_tag);
      return {std::move(t), RewriteKind::Free, id};
  }
  throw GraphError("invalid blowup site");
}

WeightedTree contract_curve(const WeightedTree& tree, int v) {
  if (tree.weight(v) != -1) throw GraphError("not contractible: weight is not -1");
  std::vector<std::pair<int, int>> nb;
  for (int n : tree.neighbors(v)) {
    const int m = tree.multiplicity(v, n);
    if (m > 1)
      throw GraphError("not contractible: image of vertex " + std::to_string(n) +
                       " would be singular");
    nb.emplace_back(n, m);
  }
  WeightedTree t = tree;
  t.remove_vertex(v);
  for (auto [n, m] : nb) t.set_weight(n, t.weight(n) + std::int64_t(m) * m);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      for (int k = 0; k < nb[i].second * nb[j].second; ++k) t.add_edge(nb[i].first, nb[j].first);
  t.validate();
  return t;
}

BlowdownResult blow_down(const WeightedTree& tree, int v) {
  if (tree.weight(v) != -1) throw GraphError("not contractible: weight is not -1");
  const int d = tree.degree(v);
  if (d > 2) throw GraphError("not contractible: vertex meets more than two components");
  RewriteKind kind = d == 2 ? RewriteKind::Subdivisional
                            : (d == 1 ? RewriteKind::Sprouting : RewriteKind::Free);
  return {contract_curve(tree, v), kind};
}

int kk_blowdown_delta(RewriteKind k) {
  switch (k) {
    case RewriteKind::Sprouting: return 1;
    case RewriteKind::Subdivisional: return 0;
    case RewriteKind::Free: return 2;
  }
  return 0;
}

Int kk_plus_t(const WeightedTree& tree, const std::vector<int>& subset, const Int& k_squared) {
  Int s = k_squared;
  for (int v : subset) s += -2 - Int(tree.weight(v));
  return s;
}

RewriteTracker::RewriteTracker(WeightedTree tree, Int k_squared)
    : tree_(std::move(tree)), k2_(std::move(k_squared)) {
  counter_ = recompute();
}

BlowupResult RewriteTracker::blow_up(const BlowupSite& site) {
  auto r = cstar::blow_up(tree_, site);
  tree_ = r.tree;
  k2_ -= 1;
  counter_ -= kk_blowdown_delta(r.kind);
  return r;
}

BlowdownResult RewriteTracker::blow_down(int v) {
  auto r = cstar::blow_down(tree_, v);
  tree_ = r.tree;
  k2_ += 1;
  counter_ += kk_blowdown_delta(r.kind);
  return r;
}

Int RewriteTracker::recompute() const { return kk_plus_t(tree_, tree_.ids(), k2_); }

// ---------------- NC-minimalization ----------------

bool nc_eligible(const WeightedTree& tree, int v) {
  if (tree.tag(v) == Tag::E) return false;
  if (tree.weight(v) != -1) return false;
  if (tree.degree(v) > 2) return false;
  for (int n : tree.neighbors(v))
    if (tree.multiplicity(v, n) > 1) return false;
  return true;
}

NCResult nc_step(NCResult acc, int v) {
  const int d_boundary = acc.tree.degree_without_e(v);
  const auto e = acc.tree.e_vertex();
  if (e && acc.tree.multiplicity(v, *e) > 0) acc.e_touched = true;
  RewriteKind kind = d_boundary == 2 ? RewriteKind::Subdivisional
                                     : (d_boundary == 1 ? RewriteKind::Sprouting : RewriteKind::Free);
  if (kind == RewriteKind::Sprouting) ++acc.h_psi;
  acc.tree = contract_curve(acc.tree, v);
  acc.contracted.push_back(v);
  acc.kinds.push_back(kind);
  return acc;
}

NCResult nc_minimalize(const WeightedTree& tree) {
  return nc_minimalize_with(tree, [](const std::vector<int>& cand) { return cand.front(); });
}

// ---------------- signatures and dot ----------------

std::string graph_signature(const WeightedTree& tree) {
  const auto ids = tree.ids();
  std::map<int, std::string> colour;
  for (int v : ids) colour[v] = tag_name(tree.tag(v)) + ":" + std::to_string(tree.weight(v));
  std::ostringstream history;
  for (std::size_t round = 0; round <= ids.size(); ++round) {
    std::vector<std::string> all;
    for (int v : ids) all.push_back(colour[v]);
    std::sort(all.begin(), all.end());
    std::vector<std::string> uniq = all;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    history << "[";
    for (const auto& c : all) history << c << ";";
    history << "]";
    std::map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < uniq.size(); ++i) rank[uniq[i]] = i;
    std::map<int, std::string> next;
    for (int v : ids) {
      std::vector<std::string> parts;
      for (int n : tree.neighbors(v))
        parts.push_back(std::to_string(rank[colour[n]]) + "x" + std::to_string(tree.multiplicity(v, n)));
      std::sort(parts.begin(), parts.end());
      std::string c = std::to_string(rank[colour[v]]) + "(";
      for (const auto& p : parts) c += p + ",";
      next[v] = c + ")";
    }
    colour = std::move(next);
  }
  return history.str();
}

std::string to_dot(const WeightedTree& tree) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v : tree.ids()) {
    os << "  v" << v << " [label=\"" << v << ": " << tree.weight(v) << "\"";
    if (tree.tag(v) == Tag::E) os << ", shape=box";
    if (tree.tag(v) == Tag::LineAtInfinity) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& [a, b] : tree.edges()) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cstar
