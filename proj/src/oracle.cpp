#include "dpg/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpg/stability.hpp"

namespace dpg {

std::pair<LocationProfile, Rational> exact_optimum(const DpgInstance& inst,
                                                   const OracleLimits& limits) {
  const int n = inst.agent_count();

  // Agents without any incident relation never affect the welfare; pin them
  // to the front slots and permute only the active ones.
  std::vector<AgentId> inactive, active;
  for (AgentId i = 0; i < n; ++i) {
    if (inst.relations(i).empty() && inst.carers(i).empty())
      inactive.push_back(i);
    else
      active.push_back(i);
  }
  if (static_cast<int>(active.size()) > limits.max_agents_for_exact)
    throw ResourceLimitError("exact optimum capped at " +
                             std::to_string(limits.max_agents_for_exact) +
                             " relation-carrying agents");
  if (active.empty()) return {LocationProfile::zeros(n), Rational(0)};

  std::optional<std::pair<LocationProfile, Rational>> best;
  std::vector<AgentId> perm = active;
  std::vector<AgentId> order(n);
  std::copy(inactive.begin(), inactive.end(), order.begin());
  do {
    // Reflecting x -> 1-x maps order-consistent profiles onto profiles
    // consistent with the reversed order at equal welfare, so one of each
    // {order, reverse} pair suffices.
    if (perm.size() >= 2 && perm.front() > perm.back()) continue;
    std::copy(perm.begin(), perm.end(), order.begin() + inactive.size());
    auto [profile, value] = ordered_lp_with_value(inst, order);
    if (!best || value > best->second) best = {std::move(profile), std::move(value)};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

std::vector<LocationProfile> grid_stable_profiles(const DpgInstance& inst, long m,
                                                  const OracleLimits& limits) {
  if (m < 1) throw std::domain_error("grid resolution must be at least 1");
  const int n = inst.agent_count();
  mpz_class points;
  mpz_ui_pow_ui(points.get_mpz_t(), static_cast<unsigned long>(m) + 1,
                static_cast<unsigned long>(n));
  if (points > limits.max_grid_points)
    throw ResourceLimitError("grid enumeration capped at " +
                             std::to_string(limits.max_grid_points) + " profiles");

  std::vector<Rational> grid;
  grid.reserve(m + 1);
  for (long idx = 0; idx <= m; ++idx) grid.emplace_back(idx, m);

  std::vector<LocationProfile> stable;
  std::vector<long> odo(n, 0);
  while (true) {
    std::vector<Rational> pos(n);
    for (int i = 0; i < n; ++i) pos[i] = grid[odo[i]];
    LocationProfile profile{std::move(pos)};
    if (is_jump_stable(inst, profile).stable) stable.push_back(std::move(profile));

    int cursor = n - 1;
    while (cursor >= 0 && odo[cursor] == m) odo[cursor--] = 0;
    if (cursor < 0) break;
    ++odo[cursor];
  }
  return stable;
}

PoaReport poa_estimate(const DpgInstance& inst, long m, const OracleLimits& limits) {
  PoaReport report;
  report.opt_sw = exact_optimum(inst, limits).second;
  const auto stable = grid_stable_profiles(inst, m, limits);
  report.stable_profiles_found = static_cast<long>(stable.size());
  for (const LocationProfile& profile : stable) {
    Rational sw = social_welfare(inst, profile);
    if (!report.worst_stable_sw || sw < *report.worst_stable_sw)
      report.worst_stable_sw = std::move(sw);
  }
  if (report.worst_stable_sw && report.worst_stable_sw->sign() > 0)
    report.ratio = report.opt_sw / *report.worst_stable_sw;
  return report;
}

bool per_agent_half_bound_check(const DpgInstance& inst, const LocationProfile& a) {
  if (!is_jump_stable(inst, a).stable)
    throw std::domain_error("half-bound check requires a jump stable profile");
  for (AgentId i = 0; i < inst.agent_count(); ++i) {
    const Rational bound(static_cast<long>(inst.relations(i).size()), 2);
    if (agent_utility(inst, a, i) < bound) return false;
  }
  return true;
}

}  // namespace dpg
