#include "cstar/hn_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cstar {

void validate_sequence(const HNSequence& seq) {
  if (seq.empty()) throw HNError("empty HN sequence");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& pr = seq[i];
    if (pr.p < 1) throw HNError("pair " + std::to_string(i + 1) + ": p < 1");
    if (pr.c < pr.p) throw HNError("pair " + std::to_string(i + 1) + ": c < p");
    const std::int64_t g = std::gcd(pr.c, pr.p);
    if (i + 1 < seq.size()) {
      if (seq[i + 1].c != g)
        throw HNError("pair " + std::to_string(i + 2) + ": c = " + std::to_string(seq[i + 1].c) +
                      " but gcd of previous pair is " + std::to_string(g));
    } else if (g != 1) {
      throw HNError("sequence incomplete: terminal gcd is " + std::to_string(g));
    }
  }
}

HNSequence validate(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  HNSequence seq;
  for (auto [c, p] : pairs) seq.push_back({c, p});
  validate_sequence(seq);
  return seq;
}

void validate_branch_pair(const BranchPair& bp) {
  validate_sequence(bp.lambda);
  validate_sequence(bp.lambda_t);
  if (!bp.same_point) return;
  const int hmin = static_cast<int>(std::min(bp.lambda.size(), bp.lambda_t.size()));
  if (bp.s < 0 || bp.s > hmin)
    throw HNError("s = " + std::to_string(bp.s) + " out of range [0," + std::to_string(hmin) + "]");
  for (int i = 0; i < bp.s; ++i) {
    const auto& a = bp.lambda[i];
    const auto& b = bp.lambda_t[i];
    if (a.c * b.p != b.c * a.p)
      throw HNError("common pair " + std::to_string(i + 1) + " has different ratios c/p");
  }
}

std::vector<std::int64_t> pair_multiplicities(const HNPair& pr) {
  std::vector<std::int64_t> out;
  std::int64_t a = pr.p, b = pr.c;
  for (;;) {
    out.push_back(std::min(a, b));
    if (a == b) break;
    if (a < b)
      b -= a;
    else
      a -= b;
  }
  return out;
}

std::vector<std::int64_t> multiplicity_sequence(const HNSequence& seq) {
  std::vector<std::int64_t> out;
  for (const auto& pr : seq) {
    auto m = pair_multiplicities(pr);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

Int multiplicity_sum_formula(const HNSequence& seq) {
  Int s = Int(seq.front().c) - 1;
  for (const auto& pr : seq) s += pr.p;
  return s;
}

Int multiplicity_square_sum_formula(const HNSequence& seq) {
  Int s = 0;
  for (const auto& pr : seq) s += Int(pr.c) * pr.p;
  return s;
}

bool is_transversal_smooth(const HNSequence& seq) {
  return seq.size() == 1 && seq.front().c == 1 && seq.front().p == 1;
}

JointMultiplicities joint_multiplicities(const BranchPair& bp) {
  if (!bp.same_point) throw HNError("joint multiplicities need both branches at one point");
  validate_branch_pair(bp);
  const std::size_t s = static_cast<std::size_t>(bp.s);
  // An exhausted branch still sitting on the shared point is smooth there;
  // it is read as carrying one more pair (1,1) in general position.
  HNSequence l = bp.lambda;
  HNSequence lt = bp.lambda_t;
  JointMultiplicities r;
  if (s >= l.size()) l.push_back({1, 1});
  if (s >= lt.size()) lt.push_back({1, 1});
  r.boundary_convention = l.size() != bp.lambda.size() || lt.size() != bp.lambda_t.size();
  r.sum = multiplicity_sum_formula(l) + multiplicity_sum_formula(lt);
  Int sq = 0;
  for (std::size_t i = 0; i < s; ++i)
    sq += (Int(l[i].p) + lt[i].p) * (Int(l[i].c) + lt[i].c);
  for (std::size_t i = s; i < l.size(); ++i) sq += Int(l[i].p) * l[i].c;
  for (std::size_t i = s; i < lt.size(); ++i) sq += Int(lt[i].p) * lt[i].c;
  sq += 2 * std::min(Int(lt[s].p) * l[s].c, Int(l[s].p) * lt[s].c);
  r.sum_squares = sq;
  return r;
}

JointMultiplicities total_multiplicities(const BranchPair& bp) {
  if (bp.same_point) return joint_multiplicities(bp);
  validate_branch_pair(bp);
  JointMultiplicities r;
  for (const auto* seq : {&bp.lambda, &bp.lambda_t}) {
    if (is_transversal_smooth(*seq)) continue;
    r.sum += multiplicity_sum_formula(*seq);
    r.sum_squares += multiplicity_square_sum_formula(*seq);
  }
  return r;
}

Int degree_d(const BranchPair& bp) { return Int(bp.lambda.front().c) + bp.lambda_t.front().c; }

Int gamma_prime_a(const BranchPair& bp) {
  return total_multiplicities(bp).sum - 3 * degree_d(bp) + 2;
}

Int gamma_prime_b(const BranchPair& bp) {
  const Int d = degree_d(bp);
  return total_multiplicities(bp).sum_squares - d * d;
}

bool realizable(const BranchPair& bp) { return gamma_prime_a(bp) == gamma_prime_b(bp); }

DerivedParams derived_params(const BranchPair& bp) {
  validate_branch_pair(bp);
  DerivedParams r;
  const auto& l = bp.lambda;
  const auto& lt = bp.lambda_t;
  r.d = degree_d(bp);
  r.c2 = std::gcd(l[0].c, l[0].p);
  r.c2_t = std::gcd(lt[0].c, lt[0].p);
  r.alpha = (Int(l[0].c) - l[0].p) / r.c2;
  r.alpha_t = (Int(lt[0].c) - lt[0].p) / r.c2_t;
  r.alpha0 = std::min(r.alpha, r.alpha_t);
  r.beta = Int(l[0].c) - l[0].p - lt[0].c;
  for (std::size_t i = 1; i < l.size(); ++i) r.P += l[i].p;
  for (std::size_t i = 1; i < lt.size(); ++i) r.P_t += lt[i].p;
  r.k = Int(l[0].c) / r.c2;
  r.l = Int(l[0].p) / r.c2;
  r.k_t = Int(lt[0].c) / r.c2_t;
  r.l_t = Int(lt[0].p) / r.c2_t;
  r.alpha0_inequality = r.alpha0 * r.d < r.P + r.P_t;
  return r;
}

int repeated_leading_pairs(const HNSequence& seq) {
  if (seq.empty()) return 0;
  if (seq[0].c == seq[0].p) {
    int n = 0;
    while (n < static_cast<int>(seq.size()) && seq[n].c == seq[0].c && seq[n].p == seq[0].c) ++n;
    return n - 1;
  }
  int n = 0;
  for (std::size_t i = 1; i < seq.size() && seq[i].c == seq[i].p; ++i) ++n;
  return n;
}

std::string to_string(const HNSequence& seq) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < seq.size(); ++i)
    os << (i ? "," : "") << "(" << seq[i].c << "," << seq[i].p << ")";
  os << "]";
  return os.str();
}

}  // namespace cstar
