#pragma once

#include <random>
#include <string>
#include <vector>

#include "cstar/graph_core.hpp"
#include "cstar/hn_model.hpp"

namespace cstar {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

// Valid, complete HN sequence with c_1 <= c1_max.
HNSequence random_hn_sequence(Rng& rng, std::int64_t c1_max);
// Sequence starting with c_1 = c.
HNSequence random_hn_sequence_from(Rng& rng, std::int64_t c);
// Valid branch pair; shared pairs are scaled copies of the first branch.
BranchPair random_branch_pair(Rng& rng, std::int64_t c1_max);

// Random tree on n vertices, ids 0..n-1, weights in [lo, hi].
WeightedTree random_tree(Rng& rng, int n, std::int64_t lo, std::int64_t hi);
// Random tree with every weight <= -2 plus an E vertex of weight e_weight
// meeting two distinct vertices; NC-minimal by construction.
WeightedTree random_nc_minimal_tree(Rng& rng, int n, std::int64_t e_weight = -3);
// Random admissible chain (weights in [-6,-2]) of the given length.
std::vector<std::int64_t> random_chain(Rng& rng, int length);

struct IdentityCheck {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

// Seeded property runs: multiplicity formulas, K.(K+T) bookkeeping,
// bark = -sum e, determinants against cofactor expansion.
std::vector<IdentityCheck> run_identity_checks(std::uint64_t seed, int max_vertices);

}  // namespace cstar
