#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cstar/arith.hpp"

namespace cstar {

class HNError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HNPair {
  std::int64_t c = 1;
  std::int64_t p = 1;
  bool operator==(const HNPair&) const = default;
};

using HNSequence = std::vector<HNPair>;

struct BranchPair {
  HNSequence lambda;
  HNSequence lambda_t;  // the second branch
  bool same_point = true;
  int s = 0;  // number of common pairs, meaningful when same_point
};

// Checks c >= p >= 1, c_{i+1} = gcd(c_i, p_i) and gcd(c_h, p_h) = 1.
HNSequence validate(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs);
void validate_sequence(const HNSequence& seq);
// Checks both sequences and the common-pair condition.
void validate_branch_pair(const BranchPair& bp);

// Multiplicities of the blowups prescribed by one pair (c,p): subtractive
// Euclidean algorithm on (p, c), one entry per step.
std::vector<std::int64_t> pair_multiplicities(const HNPair& pr);
std::vector<std::int64_t> multiplicity_sequence(const HNSequence& seq);

// Closed forms c_1 + sum p_i - 1 and sum c_i p_i.
Int multiplicity_sum_formula(const HNSequence& seq);
Int multiplicity_square_sum_formula(const HNSequence& seq);

// A smooth branch transversal to the line at infinity, alone at its point:
// the single pair (1,1). It already crosses normally and is not blown up.
bool is_transversal_smooth(const HNSequence& seq);

struct JointMultiplicities {
  Int sum;
  Int sum_squares;
  // True when pair s+1 is missing on one side. The exhausted branch is then
  // read as carrying an extra pair (1,1) in general position, which adds to
  // both sums.
  bool boundary_convention = false;
};

JointMultiplicities joint_multiplicities(const BranchPair& bp);

// Sum of m_i and of m_i^2 over all blown-up points, for either placement.
JointMultiplicities total_multiplicities(const BranchPair& bp);

Int degree_d(const BranchPair& bp);
// gamma' from K.E' (genus-zero reading): sum m_i - 3d + 2.
Int gamma_prime_a(const BranchPair& bp);
// gamma' from E'^2 = d^2 - sum m_i^2, with gamma' = -E'^2.
Int gamma_prime_b(const BranchPair& bp);
bool realizable(const BranchPair& bp);

struct DerivedParams {
  Int d;
  Int alpha, alpha_t, alpha0;
  Int beta;
  Int P, P_t;
  Int k, l, k_t, l_t;
  Int c2, c2_t;
  bool alpha0_inequality = false;  // alpha0 * d < P + P~
};

DerivedParams derived_params(const BranchPair& bp);

// Leading repeated pairs: for a transversal branch, (number of leading
// (c_1,c_1) pairs) - 1; for a tangent branch, the number of pairs (c_2,c_2)
// right after the first pair.
int repeated_leading_pairs(const HNSequence& seq);

std::string to_string(const HNSequence& seq);

}  // namespace cstar
