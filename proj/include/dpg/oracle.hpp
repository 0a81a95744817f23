#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dpg/errors.hpp"
#include "dpg/instance.hpp"
#include "dpg/welfare.hpp"

namespace dpg {

struct OracleLimits {
  // exact_optimum solves one LP per order of the relation-carrying agents.
  int max_agents_for_exact = 6;
  // grid_stable_profiles enumerates (m+1)^n profiles.
  long max_grid_points = 2'000'000;
};

// Exact global welfare optimum over [0,1]^n: the ordered LP is solved for
// every agent order, and every profile is consistent with some order, so the
// best order attains the continuous maximum. Throws ResourceLimitError above
// the agent cap.
std::pair<LocationProfile, Rational> exact_optimum(const DpgInstance& inst,
                                                   const OracleLimits& limits = {});

// All profiles on the grid {0, 1/m, ..., 1} that the exact continuous
// verifier accepts. Sound but grid-limited: an empty result does not prove
// that no jump stable profile exists.
std::vector<LocationProfile> grid_stable_profiles(const DpgInstance& inst, long m,
                                                  const OracleLimits& limits = {});

struct PoaReport {
  Rational opt_sw;
  long stable_profiles_found = 0;
  // Minimum welfare among grid-stable profiles; a grid-restricted upper bound
  // on the true worst stable welfare. Absent when no stable profile was found.
  std::optional<Rational> worst_stable_sw;
  std::optional<Rational> ratio;  // opt / worst, when worst > 0
};

PoaReport poa_estimate(const DpgInstance& inst, long m, const OracleLimits& limits = {});

// Checks u_i(A) >= |M_i| / 2 for every agent; input must be jump stable
// (std::domain_error otherwise). Always true for stable profiles.
bool per_agent_half_bound_check(const DpgInstance& inst, const LocationProfile& a);

}  // namespace dpg
