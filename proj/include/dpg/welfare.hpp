#pragma once

#include <utility>
#include <vector>

#include "dpg/evaluation.hpp"
#include "dpg/instance.hpp"
#include "dpg/simplex.hpp"

namespace dpg {

// Greedy endpoint placement: order[0] goes to 0, every later agent to 0 or 1,
// whichever adds more welfare over both edge directions with already-placed
// agents (ties go to 0). Guarantees SW >= (1/2) * sum |M_i|.
LocationProfile greedy_endpoints(const DpgInstance& inst, const std::vector<AgentId>& order);

// Agents sorted ascending by position (ties by id); feeds an endpoint profile
// back into the ordered LP.
std::vector<AgentId> ascending_position_order(const LocationProfile& profile);

// LP maximizing social welfare subject to A_{order[0]} <= ... <= A_{order[n-1]},
// A in [0,1]^n. One mismatch variable theta_{i,j} per directed relation with
//   theta_{i,j} >= (A_later - A_earlier) - d_i(j)
//   theta_{i,j} >= d_i(j) - (A_later - A_earlier)
// and objective max sum (1 - theta_{i,j}).
struct OrderedLpModel {
  struct Theta {
    AgentId i;
    AgentId j;
    Rational ideal;
    int lo_slot;  // slot of the earlier of i, j in the order
    int hi_slot;
  };

  std::vector<AgentId> order;
  std::vector<int> slot_of;
  std::vector<Theta> thetas;
  // Solver form after the exact substitution phi = theta - d + (x_hi - x_lo):
  // variables are n slot positions then one phi per theta, all rhs >= 0.
  LpProblem problem;
  Rational objective_constant;  // sum of (1 - d) over thetas
};

OrderedLpModel build_ordered_lp(const DpgInstance& inst, const std::vector<AgentId>& order);

struct OrderedLpSolution {
  LocationProfile profile;
  Rational social_welfare;
  std::vector<Rational> thetas;  // ||A_i - A_j| - d_i(j)| at the optimum
};

OrderedLpSolution solve_ordered_lp(const DpgInstance& inst, const OrderedLpModel& model);

LocationProfile ordered_lp(const DpgInstance& inst, const std::vector<AgentId>& order);
std::pair<LocationProfile, Rational> ordered_lp_with_value(const DpgInstance& inst,
                                                           const std::vector<AgentId>& order);

// Layered grid DAG for path instances: layer t holds the k+1 grid positions
// of the t-th path agent; an edge (t,s) -> (t+1,u) weighs
// 1 - ||s/k - u/k| - d|, so the heaviest source-to-sink path is the best
// grid-restricted profile.
struct PathDag {
  std::vector<AgentId> order;          // head to tail
  long k = 1;                          // grid resolution
  std::vector<Rational> step_ideal;    // d along consecutive path agents

  Rational grid_point(long idx) const { return Rational(idx, k); }
  Rational edge_weight(int layer, long s_idx, long t_idx) const;
};

PathDag build_path_dag(const DpgInstance& inst, long k);

// Longest-path profile of the DAG plus its social welfare.
std::pair<LocationProfile, Rational> longest_path_profile(const DpgInstance& inst,
                                                          const PathDag& dag);

// FPTAS for path instances: k = ceil(2/epsilon) guarantees
// SW >= (1 - epsilon) * OPT. epsilon must lie in (0,1).
LocationProfile path_fptas(const DpgInstance& inst, const Rational& epsilon);

// Moves co-located groups off interior positions to a neighbouring occupied
// point (or endpoint), never decreasing social welfare, until every agent
// sits at 0 or 1. Enemies-and-neutrals instances only.
LocationProfile en_round_to_endpoints(const DpgInstance& inst, const LocationProfile& a);

struct CutAssignment {
  std::vector<int> side;  // 0 or 1 per agent
  long cut_weight = 0;    // crossing edges of the preference graph
};

// Flip local search on the preference graph (lowest-index improving vertex,
// all agents starting on side 0) plus the induced 0/1 profile; the profile's
// social welfare is exactly twice the cut weight.
std::pair<CutAssignment, LocationProfile> en_flip_maxcut(const DpgInstance& inst);

}  // namespace dpg
