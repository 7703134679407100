#include "cstar/bmy_checker.hpp"

namespace cstar {

Int local_group_order(const BMYComponent& c) {
  switch (c.cls) {
    case ContractibilityClass::AdmissibleChain:
      if (c.determinant < 2) throw BMYError("contractible chain with determinant below 2");
      return c.determinant;
    case ContractibilityClass::NotContractible:
      throw BMYError("component is not contractible");
    default:
      throw BMYUnsupported("local group order of a " + class_name(c.cls) +
                           " component is not supported");
  }
}

Int local_group_order(const WeightedTree& tree, const std::vector<int>& subset) {
  BMYComponent c{determinant(tree, subset), classify_contractible(tree, subset)};
  return local_group_order(c);
}

BMYReport check_bmy(const BMYInstance& inst) {
  BMYReport r;
  r.sum_inverse_orders = 0;
  for (const auto& c : inst.components) r.sum_inverse_orders += Rat(Int(1), local_group_order(c));
  r.lhs = inst.p_squared;
  r.rhs = 3 * (Rat(inst.chi_open) + r.sum_inverse_orders);
  r.slack = r.rhs - r.lhs;
  r.holds = r.slack >= 0;
  return r;
}

std::vector<Solution414> enumerate_4_14(int gamma_lo, int gamma_hi, int bound) {
  if (gamma_lo < 6 || gamma_hi > 8 || gamma_lo > gamma_hi)
    throw BMYError("gamma range must lie in [6, 8]");
  std::vector<Solution414> out;
  for (int g = gamma_lo; g <= gamma_hi; ++g)
    for (int d1 = 2; d1 <= bound; ++d1)
      for (int d2 = 2; d2 <= bound; ++d2)
        if (Rat(1, d1) + Rat(1, d2) + Rat(1, g) >= 1) out.push_back({d1, d2, g});
  return out;
}

Int fork_22n_determinant(const Int& n, const Int& b, const Int& n_tilde) {
  return 4 * (n * (b - 1) - n_tilde);
}

WeightedTree make_fork_22n(std::int64_t b, const std::vector<std::int64_t>& long_branch) {
  WeightedTree t;
  t.add_vertex(0, -b, Tag::DComponent);
  t.add_vertex(1, -2, Tag::DComponent);
  t.add_vertex(2, -2, Tag::DComponent);
  t.add_edge(0, 1);
  t.add_edge(0, 2);
  int prev = 0;
  for (std::size_t i = 0; i < long_branch.size(); ++i) {
    const int id = 3 + int(i);
    t.add_vertex(id, long_branch[i], Tag::DComponent);
    t.add_edge(prev, id);
    prev = id;
  }
  return t;
}

}  // namespace cstar
