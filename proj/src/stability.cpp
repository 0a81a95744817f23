#include "dpg/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpg {

CandidateSet candidate_set(const DpgInstance& inst, const LocationProfile& a, AgentId i) {
  CandidateSet set;
  set.points.reserve(3 * inst.relations(i).size() + 2);
  set.points.emplace_back(0);
  set.points.emplace_back(1);
  for (const Relation& r : inst.relations(i)) {
    const Rational& aj = a[r.target];
    set.points.push_back(clamp01(aj - r.distance));
    set.points.push_back(aj);
    set.points.push_back(clamp01(aj + r.distance));
  }
  std::sort(set.points.begin(), set.points.end());
  set.points.erase(std::unique(set.points.begin(), set.points.end()), set.points.end());
  return set;
}

DeviationReport best_deviation(const DpgInstance& inst, const LocationProfile& a, AgentId i) {
  DeviationReport report;
  report.agent = i;
  report.current_utility = agent_utility(inst, a, i);
  const CandidateSet set = candidate_set(inst, a, i);
  bool first = true;
  for (const Rational& x : set.points) {
    Rational u = agent_utility_at(inst, a, i, x);
    if (first || u > report.best_utility) {
      report.best_target = x;
      report.best_utility = std::move(u);
      first = false;
    }
  }
  return report;
}

StabilityReport is_jump_stable(const DpgInstance& inst, const LocationProfile& a) {
  for (AgentId i = 0; i < inst.agent_count(); ++i) {
    DeviationReport report = best_deviation(inst, a, i);
    if (report.improves()) return {false, std::move(report)};
  }
  return {true, std::nullopt};
}

std::pair<LocationProfile, DynamicsTrace> best_response_dynamics(const DpgInstance& inst,
                                                                 const LocationProfile& start,
                                                                 long max_iters) {
  if (max_iters < 1) throw std::domain_error("max_iters must be at least 1");
  if (start.size() != inst.agent_count())
    throw std::domain_error("start profile size does not match agent count");

  LocationProfile profile = start;
  DynamicsTrace trace;
  while (true) {
    std::optional<DeviationReport> move;
    for (AgentId i = 0; i < inst.agent_count(); ++i) {
      DeviationReport report = best_deviation(inst, profile, i);
      if (report.improves()) {
        move = std::move(report);
        break;
      }
    }
    if (!move) {
      trace.converged = true;
      break;
    }
    if (trace.iterations >= max_iters) {
      trace.converged = false;
      break;
    }
    DynamicsStep step;
    step.agent = move->agent;
    step.from = profile[move->agent];
    step.to = move->best_target;
    profile.set(move->agent, move->best_target);
    step.sw_after = social_welfare(inst, profile);
    trace.steps.push_back(std::move(step));
    ++trace.iterations;
  }
  return {std::move(profile), std::move(trace)};
}

std::pair<LocationProfile, DynamicsTrace> best_response_dynamics(const DpgInstance& inst,
                                                                 long max_iters) {
  return best_response_dynamics(inst, LocationProfile::zeros(inst.agent_count()), max_iters);
}

long default_max_iters(const DpgInstance& inst) {
  const long n = inst.agent_count();
  const ClassFlags flags = classify(inst);
  if (flags.symmetric && flags.k_discrete_for) return *flags.k_discrete_for * n * n + 1;
  return std::max(1L, 10 * n * n * n);
}

LocationProfile solve_acyclic(const DpgInstance& inst) {
  auto order = reverse_topological_order(inst);
  if (!order) throw std::domain_error("solve_acyclic requires an acyclic preference graph");
  LocationProfile profile = LocationProfile::zeros(inst.agent_count());
  for (AgentId i : *order) {
    if (inst.relations(i).empty()) continue;  // stays at 0
    // All of M_i is already placed; positions of later agents are irrelevant.
    profile.set(i, best_deviation(inst, profile, i).best_target);
  }
  return profile;
}

}  // namespace dpg
