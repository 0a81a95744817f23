#include "dpg/evaluation.hpp"

#include <stdexcept>
#include <string>

namespace dpg {

namespace {

Rational mismatch_utility(const Rational& pos_i, const Rational& pos_j, const Rational& ideal) {
  return Rational(1) - abs(abs(pos_i - pos_j) - ideal);
}

}  // namespace

Rational pair_utility(const DpgInstance& inst, const LocationProfile& a, AgentId i, AgentId j) {
  const Rational* d = inst.distance(i, j);
  if (d == nullptr)
    throw std::domain_error("agent " + std::to_string(i) + " has no relation to agent " +
                            std::to_string(j));
  return mismatch_utility(a[i], a[j], *d);
}

Rational agent_utility(const DpgInstance& inst, const LocationProfile& a, AgentId i) {
  return agent_utility_at(inst, a, i, a[i]);
}

Rational agent_utility_at(const DpgInstance& inst, const LocationProfile& a, AgentId i,
                          const Rational& x) {
  Rational total(0);
  for (const Relation& r : inst.relations(i)) {
    total += mismatch_utility(x, a[r.target], r.distance);
  }
  return total;
}

Rational social_welfare(const DpgInstance& inst, const LocationProfile& a) {
  Rational total(0);
  for (AgentId i = 0; i < inst.agent_count(); ++i) {
    total += agent_utility(inst, a, i);
  }
  return total;
}

}  // namespace dpg
