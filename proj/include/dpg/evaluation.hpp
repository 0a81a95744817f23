#pragma once

#include "dpg/instance.hpp"
#include "dpg/rational.hpp"

namespace dpg {

// Utility agent i draws from agent j: 1 - ||A_i - A_j| - d_i(j)|.
// Throws std::domain_error when j is not in M_i.
Rational pair_utility(const DpgInstance& inst, const LocationProfile& a, AgentId i, AgentId j);

// Sum of pair utilities over M_i; 0 when M_i is empty.
Rational agent_utility(const DpgInstance& inst, const LocationProfile& a, AgentId i);

// Utility of agent i after unilaterally jumping to x (other positions from a).
Rational agent_utility_at(const DpgInstance& inst, const LocationProfile& a, AgentId i,
                          const Rational& x);

Rational social_welfare(const DpgInstance& inst, const LocationProfile& a);

}  // namespace dpg
