#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dpg/evaluation.hpp"
#include "dpg/instance.hpp"

namespace dpg {

// The finitely many points where an agent's deviation utility can peak:
// {0,1} plus, for every j in M_i, the clamped points A_j - d_i(j), A_j,
// A_j + d_i(j). Sorted, deduplicated; at most 3|M_i| + 2 points.
struct CandidateSet {
  std::vector<Rational> points;
};

CandidateSet candidate_set(const DpgInstance& inst, const LocationProfile& a, AgentId i);

struct DeviationReport {
  AgentId agent = 0;
  Rational current_utility;
  // Leftmost candidate point maximizing the agent's deviation utility.
  Rational best_target;
  Rational best_utility;

  bool improves() const { return best_utility > current_utility; }
};

// Exact best unilateral jump for agent i. The deviation utility is piecewise
// linear with breakpoints inside the candidate set, so scanning those points
// finds the continuous optimum.
DeviationReport best_deviation(const DpgInstance& inst, const LocationProfile& a, AgentId i);

struct StabilityReport {
  bool stable = false;
  // Lowest-index agent with a strictly improving jump, when unstable.
  std::optional<DeviationReport> violation;
};

StabilityReport is_jump_stable(const DpgInstance& inst, const LocationProfile& a);

struct DynamicsStep {
  AgentId agent;
  Rational from;
  Rational to;
  Rational sw_after;
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  bool converged = false;
  long iterations = 0;
};

// Best response dynamics: repeatedly move the lowest-index agent with a
// strictly improving jump to its leftmost-optimal candidate point. Stops when
// stable or after max_iters moves (converged reports which).
std::pair<LocationProfile, DynamicsTrace> best_response_dynamics(const DpgInstance& inst,
                                                                 const LocationProfile& start,
                                                                 long max_iters);

// Convention: all agents start at 0.
std::pair<LocationProfile, DynamicsTrace> best_response_dynamics(const DpgInstance& inst,
                                                                 long max_iters);

// k * n^2 + 1 for symmetric k-discrete games (convergence bound plus slack),
// 10 * n^3 otherwise.
long default_max_iters(const DpgInstance& inst);

// Places agents in reverse topological order of the preference graph, each at
// its leftmost-optimal candidate given the agents already placed. Output is
// always jump stable. Throws std::domain_error on cyclic instances.
LocationProfile solve_acyclic(const DpgInstance& inst);

}  // namespace dpg
