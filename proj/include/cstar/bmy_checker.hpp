#pragma once

#include <stdexcept>
#include <vector>

#include "cstar/graph_core.hpp"

namespace cstar {

class BMYError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for contractible forks: the order of a non-cyclic local group is not
// modelled.
class BMYUnsupported : public BMYError {
 public:
  using BMYError::BMYError;
};

struct BMYComponent {
  Int determinant;
  ContractibilityClass cls = ContractibilityClass::AdmissibleChain;
};

struct BMYInstance {
  Int chi_open;  // Euler characteristic of the open part
  std::vector<BMYComponent> components;
  Rat p_squared;  // ((K+D)^+)^2
};

struct BMYReport {
  Rat lhs;  // p_squared
  Rat rhs;  // 3 (chi + sum 1/|G_i|)
  Rat slack;  // rhs - lhs
  Rat sum_inverse_orders;
  bool holds = false;
};

Int local_group_order(const BMYComponent& c);
// Classifies the subset and returns the order of the cyclic group.
Int local_group_order(const WeightedTree& tree, const std::vector<int>& subset);

BMYReport check_bmy(const BMYInstance& inst);

struct Solution414 {
  int d1, d2, gamma;
  bool operator==(const Solution414&) const = default;
};

// Integer (d1, d2, gamma), d_i in [2, bound], gamma in [lo, hi] within [6, 8],
// with 1/d1 + 1/d2 + 1/gamma >= 1.
std::vector<Solution414> enumerate_4_14(int gamma_lo, int gamma_hi, int bound = 12);

// Determinant of a fork with two single (-2) branches, a centre of weight -b
// and a third branch of determinant n whose determinant without the component
// next to the centre is n_tilde.
Int fork_22n_determinant(const Int& n, const Int& b, const Int& n_tilde);

// Builds that fork: centre id 0, the two (-2) tips, then the long branch with
// the given weights starting next to the centre.
WeightedTree make_fork_22n(std::int64_t b, const std::vector<std::int64_t>& long_branch);

}  // namespace cstar
