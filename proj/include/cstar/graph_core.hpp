#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cstar/arith.hpp"

namespace cstar {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Tag { None, E, LineAtInfinity, DComponent };

std::string tag_name(Tag t);
Tag parse_tag(const std::string& s);

// Dual graph of a boundary divisor plus at most one curve tagged E.
// All components are smooth rational curves, so only self-intersections are
// stored. The part without E must be a forest. E may meet a component more
// than once (edge multiplicity), which is how the cycle closed by a C*-curve
// is represented.
class WeightedTree {
 public:
  void add_vertex(int id, std::int64_t weight, Tag tag = Tag::None);
  void remove_vertex(int id);
  // Adds one intersection point between a and b.
  void add_edge(int a, int b);
  // Removes one intersection point between a and b.
  void remove_edge(int a, int b);

  bool has_vertex(int id) const { return weights_.count(id) > 0; }
  std::int64_t weight(int id) const;
  void set_weight(int id, std::int64_t w);
  Tag tag(int id) const;
  void set_tag(int id, Tag t);

  int multiplicity(int a, int b) const;
  // Number of intersection points with other components.
  int degree(int id) const;
  // Same, ignoring the E-tagged vertex.
  int degree_without_e(int id) const;
  std::vector<int> neighbors(int id) const;
  std::vector<int> ids() const;
  std::size_t size() const { return weights_.size(); }
  std::optional<int> e_vertex() const;
  std::optional<int> find_tag(Tag t) const;
  // Every intersection point once, as (a,b) with a < b.
  std::vector<std::pair<int, int>> edges() const;
  int next_id() const;

  // Throws GraphError when the structural invariants fail.
  void validate() const;

  bool operator==(const WeightedTree& o) const {
    return weights_ == o.weights_ && tags_ == o.tags_ && adj_ == o.adj_;
  }

 private:
  void require(int id) const;
  std::map<int, std::int64_t> weights_;
  std::map<int, Tag> tags_;
  std::map<int, std::map<int, int>> adj_;
};

// Ordered path; ids.front() is the tip R_1.
struct Chain {
  std::vector<int> ids;
};

using DivisorQ = std::map<int, Rat>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

enum class ContractibilityClass {
  AdmissibleChain,
  Fork22n,
  Fork233,
  Fork234,
  Fork235,
  NotContractible
};
std::string class_name(ContractibilityClass c);

enum class FujitaZeroClass { ChainType, TwoBranchFourTips, FiniteFork, None };
std::string class_name(FujitaZeroClass c);

IntMatrix intersection_matrix(const WeightedTree& tree, const std::vector<int>& subset);

// det(-M) by fraction-free elimination.
Int neg_determinant(const IntMatrix& m);
// d(T) = det(-Q(T)); empty subset gives 1.
Int determinant(const WeightedTree& tree, const std::vector<int>& subset);
Int determinant(const WeightedTree& tree);
// Determinant of a chain given by its weights in order.
Int chain_determinant(const std::vector<std::int64_t>& weights);
// All leading principal minors of -Q positive.
bool negative_definite(const IntMatrix& q);

// e(R) = d(R_2..R_s)/d(R), R_1 = chain.ids.front().
Rat capacity(const WeightedTree& tree, const Chain& chain);
Rat chain_capacity(const std::vector<std::int64_t>& weights);

// Maximal twigs of the whole graph: chains that start at a tip, run through
// non-branching components and stop before a branching component or E.
std::vector<Chain> maximal_twigs(const WeightedTree& tree);
bool is_admissible(const WeightedTree& tree, const Chain& chain);
std::vector<Chain> admissible_maximal_twigs(const WeightedTree& tree);

// Rational divisor on the admissible maximal twigs with Bk.T_i = (K+T).T_i.
DivisorQ bark_divisor(const WeightedTree& tree);
Rat self_intersection(const WeightedTree& tree, const DivisorQ& div);

ContractibilityClass classify_contractible(const WeightedTree& tree,
                                           const std::vector<int>& subset);
FujitaZeroClass classify_fujita_zero(const WeightedTree& tree, const std::vector<int>& subset);

bool is_connected(const WeightedTree& tree, const std::vector<int>& subset);
// Induced subgraph on the subset.
WeightedTree induced(const WeightedTree& tree, const std::vector<int>& subset);

enum class RewriteKind { Sprouting, Subdivisional, Free };
std::string kind_name(RewriteKind k);

struct BlowupSite {
  enum Kind { Vertex, Edge, FreePoint } kind = FreePoint;
  int a = -1;
  int b = -1;
  static BlowupSite vertex(int v) { return {Vertex, v, -1}; }
  static BlowupSite edge(int u, int v) { return {Edge, u, v}; }
  static BlowupSite free_point() { return {FreePoint, -1, -1}; }
};

struct BlowupResult {
  WeightedTree tree;
  RewriteKind kind;
  int new_id;
};

struct BlowdownResult {
  WeightedTree tree;
  RewriteKind kind;
};

BlowupResult blow_up(const WeightedTree& tree, const BlowupSite& site,
                     Tag new_tag = Tag::DComponent);
// Contracts a (-1)-vertex meeting the rest in at most two points.
BlowdownResult blow_down(const WeightedTree& tree, int v);

// Contracts a (-1)-curve with arbitrary incidences, updating weights and
// multiplicities by the projection formula. Used by the 2-reduction, where
// the image of E may pass through a node of the boundary.
WeightedTree contract_curve(const WeightedTree& tree, int v);

// Change of K.(K+T) when blowing down (T the whole graph).
int kk_blowdown_delta(RewriteKind k);

// K.(K+T) = K^2 + sum_{v in T} (-2 - w(v)).
Int kk_plus_t(const WeightedTree& tree, const std::vector<int>& subset, const Int& k_squared);

// Keeps K.(K+T) for T = all vertices as a counter that only sees rewrite
// kinds, next to the K^2 needed to recompute it from the weights.
class RewriteTracker {
 public:
  RewriteTracker(WeightedTree tree, Int k_squared);
  const WeightedTree& tree() const { return tree_; }
  const Int& counter() const { return counter_; }
  const Int& k_squared() const { return k2_; }
  BlowupResult blow_up(const BlowupSite& site);
  BlowdownResult blow_down(int v);
  Int recompute() const;

 private:
  WeightedTree tree_;
  Int k2_;
  Int counter_;
};

struct NCResult {
  WeightedTree tree;
  int h_psi = 0;  // sprouting contractions with respect to D
  bool e_touched = false;
  std::vector<int> contracted;
  std::vector<RewriteKind> kinds;
};

// Eligible: not E, weight -1, non-branching in D+E, and contraction keeps the
// divisor SNC (no double contact with a single neighbour).
bool nc_eligible(const WeightedTree& tree, int v);
// Contract eligible vertices, lowest id first, until none is left.
NCResult nc_minimalize(const WeightedTree& tree);
// Same process with a caller-chosen pick among eligible vertices.
template <class Picker>
NCResult nc_minimalize_with(const WeightedTree& tree, Picker pick);

// Isomorphism invariant of a weighted graph with tags (colour refinement).
std::string graph_signature(const WeightedTree& tree);

std::string to_dot(const WeightedTree& tree);

// ---- template implementation ----

NCResult nc_step(NCResult acc, int v);

template <class Picker>
NCResult nc_minimalize_with(const WeightedTree& tree, Picker pick) {
  NCResult acc;
  acc.tree = tree;
  for (;;) {
    std::vector<int> cand;
    for (int v : acc.tree.ids())
      if (nc_eligible(acc.tree, v)) cand.push_back(v);
    if (cand.empty()) break;
    acc = nc_step(std::move(acc), pick(cand));
  }
  return acc;
}

}  // namespace cstar
