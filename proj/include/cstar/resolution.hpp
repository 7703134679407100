#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cstar/graph_core.hpp"
#include "cstar/hn_model.hpp"

namespace cstar {

class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Location labels of the branches on the last curve of each HN pair. Equal
// labels at pair i mean the branches stay together after that pair. Left
// empty, they are derived from the common-pair count s.
struct TangencyChoices {
  std::vector<int> labels;
  std::vector<int> labels_t;
};

enum class Stage { Resolved, Minimal, TwoReduced };
std::string stage_name(Stage s);

struct BlowupRecord {
  int new_id = -1;
  RewriteKind kind = RewriteKind::Sprouting;
  int x = -1, y = -1;  // centre: vertex x, or the edge x-y
  std::int64_t m = 0;  // multiplicity of the curve at the centre
};

struct Scene {
  WeightedTree tree;  // D plus the vertex tagged E
  int e_id = -1;
  int line_id = -1;  // -1 once the line at infinity has been contracted
  Int k_squared;
  Int gamma;    // -E^2
  Int epsilon;  // 2 - (K+D+E)^2
  int t = 0;
  int h_phi = 0;
  int h_psi = 0;
  int r = 0, r_t = 0;
  bool no_asymptote = false;
  bool e_touched = false;
  bool generic_separation = false;  // an exhausted branch was read as (1,1)
  Stage stage = Stage::Resolved;
  std::optional<BranchPair> source;
  std::vector<std::int64_t> multiplicities;
  std::vector<BlowupRecord> log;
  // Vertices created while each branch worked through pair i.
  std::vector<std::vector<int>> pair_curves, pair_curves_t;
};

Scene build_resolution(const BranchPair& bp, const TangencyChoices& choices = {});

// Where the curve E_0 meets T_1 + T_2 on a Hirzebruch surface, with T_1^2 = 0,
// T_2^2 = -n, E_0.T_1 = a, E_0.T_2 = b.
enum class HirzebruchPlacement {
  NodeOffE,        // E_0 meets T_1 (contact a) and T_2 (contact b) away from T_1 n T_2
  NodeOnTangentT1,  // through the node tangent to T_1, meets T_2 again (contact b-1)
  NodeOnTangentT2,  // through the node tangent to T_2, meets T_1 again (contact a-1)
};

// Undoes a 2-reduction: blows up along E_0 until it meets the boundary in two
// (-1)-curves. t counts the sprouting blowups.
Scene hirzebruch_scene(std::int64_t a, std::int64_t b, std::int64_t n, HirzebruchPlacement placement);

Int e_dot_d(const Scene& s);
// K.(K+D), D = every vertex except E.
Int k_dot_k_plus_d(const Scene& s);
Int k_plus_d_plus_e_squared(const Scene& s);
void refresh_counters(Scene& s);

Scene minimalize(const Scene& s);

struct TwoReductionResult {
  Scene scene;
  int t = 0;
  Int lhs;  // (E_0 + 2K).(K + T) from the reduced graph
  Int rhs;  // 8 - 2 eps - gamma + t
  bool identity_holds = false;
  std::vector<int> contracted;
};
TwoReductionResult two_reduction(const Scene& s);

struct InequalityReport {
  Int slack;  // 7 + t - 2 eps - gamma
  bool holds = false;
  bool asserted = false;  // scene flagged no-asymptote
};
InequalityReport check_basic_inequality(const Scene& s);

struct SumEiReport {
  Rat sum;
  Rat bark_square;
  Int bound;  // 1 + eps
  bool bound_holds = false;
  std::vector<Chain> twigs;
  std::vector<Rat> capacities;
};
SumEiReport sum_ei(const Scene& s);

struct IdentityReport {
  Int h_phi_from_kk;          // 6 - K.(K+D') at the resolved level
  Int h_phi_from_counters;    // 2 + eps + gamma + h_psi at the minimal level
  bool holds = false;
};
// Takes the resolved scene and its minimalization.
IdentityReport check_h_phi(const Scene& resolved, const Scene& minimal);

// Structural checks; returns the list of violated statements.
std::vector<std::string> scene_violations(const Scene& s);

enum class QPrime { BranchCenter, FreePoint };
enum class ElementaryCase { I, II, III };
std::string case_name(ElementaryCase c);

struct ElementaryResult {
  ElementaryCase kind = ElementaryCase::I;
  int l = 0;
  std::vector<int> chain_l;  // L, starting with the line at infinity
  int c = -1, m = -1, a = -1;
  std::vector<int> chain_b;  // B, ending with the new line at infinity
  std::vector<int> predicted;  // D-dagger as listed by case
  std::vector<int> surviving;  // boundary left by contracting to the minimal resolution
  std::size_t before = 0;      // components of D'
  std::size_t after = 0;       // components of D-dagger
  bool matches_prediction = false;
  Scene scene;  // new completion, new line tagged
};

// Elementary transformation determined by the first pair (l+1,l)c_2 of a
// resolved scene: blow up q' on C (curve A), add the chain B of length l-1
// through free points, contract L, C, A + B minus its end, M, and rebuild the
// minimal resolution of the new boundary.
ElementaryResult elementary_transformation(const Scene& resolved, int l, QPrime q);

}  // namespace cstar
