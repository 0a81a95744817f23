#include "dpg/welfare.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dpg {

namespace {

void require_permutation(const DpgInstance& inst, const std::vector<AgentId>& order) {
  const int n = inst.agent_count();
  if (static_cast<int>(order.size()) != n)
    throw std::domain_error("order size does not match agent count");
  std::vector<bool> seen(n, false);
  for (AgentId id : order) {
    if (id < 0 || id >= n || seen[id]) throw std::domain_error("order is not a permutation");
    seen[id] = true;
  }
}

Rational edge_utility(const Rational& x, const Rational& y, const Rational& ideal) {
  return Rational(1) - abs(abs(x - y) - ideal);
}

void require_enemies_neutrals(const DpgInstance& inst) {
  if (!classify(inst).enemies_neutrals)
    throw std::domain_error("operation requires an enemies-and-neutrals instance");
}

}  // namespace

LocationProfile greedy_endpoints(const DpgInstance& inst, const std::vector<AgentId>& order) {
  require_permutation(inst, order);
  const int n = inst.agent_count();
  std::vector<Rational> pos(n, Rational(0));
  std::vector<bool> placed(n, false);
  const Rational zero(0), one(1);
  for (AgentId id : order) {
    // The first agent sees no placed neighbours, ties toward 0.
    Rational gain_zero(0), gain_one(0);
    for (AgentId carer : inst.carers(id)) {
      if (!placed[carer]) continue;
      const Rational& d = *inst.distance(carer, id);
      gain_zero += edge_utility(pos[carer], zero, d);
      gain_one += edge_utility(pos[carer], one, d);
    }
    for (const Relation& r : inst.relations(id)) {
      if (!placed[r.target]) continue;
      gain_zero += edge_utility(zero, pos[r.target], r.distance);
      gain_one += edge_utility(one, pos[r.target], r.distance);
    }
    pos[id] = gain_one > gain_zero ? one : zero;
    placed[id] = true;
  }
  return LocationProfile(std::move(pos));
}

std::vector<AgentId> ascending_position_order(const LocationProfile& profile) {
  std::vector<AgentId> order(profile.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](AgentId a, AgentId b) { return profile[a] < profile[b]; });
  return order;
}

OrderedLpModel build_ordered_lp(const DpgInstance& inst, const std::vector<AgentId>& order) {
  require_permutation(inst, order);
  const int n = inst.agent_count();

  OrderedLpModel model;
  model.order = order;
  model.slot_of.assign(n, 0);
  for (int t = 0; t < n; ++t) model.slot_of[order[t]] = t;

  for (AgentId i = 0; i < n; ++i) {
    for (const Relation& r : inst.relations(i)) {
      OrderedLpModel::Theta theta;
      theta.i = i;
      theta.j = r.target;
      theta.ideal = r.distance;
      theta.lo_slot = std::min(model.slot_of[i], model.slot_of[r.target]);
      theta.hi_slot = std::max(model.slot_of[i], model.slot_of[r.target]);
      model.thetas.push_back(std::move(theta));
    }
  }

  const std::size_t vars = static_cast<std::size_t>(n) + model.thetas.size();
  LpProblem& lp = model.problem;
  lp.objective.assign(vars, Rational(0));
  model.objective_constant = Rational(0);

  // Chain x_0 <= x_1 <= ... <= x_{n-1} and the upper bound x_{n-1} <= 1
  // (x_0 >= 0 is the nonnegativity of the variable itself).
  for (int t = 0; t + 1 < n; ++t) {
    std::vector<Rational> row(vars, Rational(0));
    row[t] = Rational(1);
    row[t + 1] = Rational(-1);
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(0);
  }
  if (n > 0) {
    std::vector<Rational> row(vars, Rational(0));
    row[n - 1] = Rational(1);
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(1);
  }

  // Per relation, in the shifted variable phi = theta - d + (x_hi - x_lo):
  // phi >= 0 encodes theta >= d - (x_hi - x_lo), and the remaining bound
  // theta >= (x_hi - x_lo) - d becomes 2 x_hi - 2 x_lo - phi <= 2d, whose
  // right-hand side is nonnegative. Objective term 1 - theta turns into
  // (1 - d) + (x_hi - x_lo) - phi.
  for (std::size_t v = 0; v < model.thetas.size(); ++v) {
    const auto& theta = model.thetas[v];
    const std::size_t phi = static_cast<std::size_t>(n) + v;
    std::vector<Rational> row(vars, Rational(0));
    row[theta.hi_slot] += Rational(2);
    row[theta.lo_slot] -= Rational(2);
    row[phi] = Rational(-1);
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(Rational(2) * theta.ideal);

    lp.objective[theta.hi_slot] += Rational(1);
    lp.objective[theta.lo_slot] -= Rational(1);
    lp.objective[phi] = Rational(-1);
    model.objective_constant += Rational(1) - theta.ideal;
  }
  return model;
}

OrderedLpSolution solve_ordered_lp(const DpgInstance& inst, const OrderedLpModel& model) {
  const int n = inst.agent_count();
  LpResult lp = solve_lp_max(model.problem);
  if (lp.status != LpStatus::optimal)
    throw std::logic_error("ordered LP is bounded by construction");

  std::vector<Rational> pos(n, Rational(0));
  for (int t = 0; t < n; ++t) pos[model.order[t]] = lp.x[t];

  OrderedLpSolution solution;
  solution.profile = LocationProfile(std::move(pos));
  solution.thetas.reserve(model.thetas.size());
  for (std::size_t v = 0; v < model.thetas.size(); ++v) {
    const auto& theta = model.thetas[v];
    const Rational spread = lp.x[theta.hi_slot] - lp.x[theta.lo_slot];
    solution.thetas.push_back(lp.x[static_cast<std::size_t>(n) + v] + theta.ideal - spread);
  }
  solution.social_welfare = model.objective_constant + lp.objective;
  return solution;
}

LocationProfile ordered_lp(const DpgInstance& inst, const std::vector<AgentId>& order) {
  return ordered_lp_with_value(inst, order).first;
}

std::pair<LocationProfile, Rational> ordered_lp_with_value(const DpgInstance& inst,
                                                           const std::vector<AgentId>& order) {
  OrderedLpSolution solution = solve_ordered_lp(inst, build_ordered_lp(inst, order));
  return {std::move(solution.profile), std::move(solution.social_welfare)};
}

Rational PathDag::edge_weight(int layer, long s_idx, long t_idx) const {
  const long spread = s_idx >= t_idx ? s_idx - t_idx : t_idx - s_idx;
  return Rational(1) - abs(Rational(spread, k) - step_ideal[layer]);
}

PathDag build_path_dag(const DpgInstance& inst, long k) {
  auto order = path_order(inst);
  if (!order) throw std::domain_error("instance is not a path DPG");
  if (k < 1) throw std::domain_error("grid resolution must be at least 1");
  PathDag dag;
  dag.order = std::move(*order);
  dag.k = k;
  for (std::size_t t = 0; t + 1 < dag.order.size(); ++t) {
    dag.step_ideal.push_back(*inst.distance(dag.order[t], dag.order[t + 1]));
  }
  return dag;
}

std::pair<LocationProfile, Rational> longest_path_profile(const DpgInstance& inst,
                                                          const PathDag& dag) {
  const int n = static_cast<int>(dag.order.size());
  const long width = dag.k + 1;
  // dp[s] = best weight of a path ending at grid point s of the current
  // layer; predecessors recorded for reconstruction (leftmost on ties).
  std::vector<Rational> dp(width, Rational(0));
  std::vector<std::vector<long>> pred(std::max(0, n - 1), std::vector<long>(width, 0));
  for (int layer = 0; layer + 1 < n; ++layer) {
    std::vector<Rational> next(width, Rational(0));
    for (long t = 0; t < width; ++t) {
      bool first = true;
      for (long s = 0; s < width; ++s) {
        Rational value = dp[s] + dag.edge_weight(layer, s, t);
        if (first || value > next[t]) {
          next[t] = std::move(value);
          pred[layer][t] = s;
          first = false;
        }
      }
    }
    dp = std::move(next);
  }

  long best = 0;
  for (long t = 1; t < width; ++t) {
    if (dp[t] > dp[best]) best = t;
  }
  std::vector<long> grid_idx(n, 0);
  grid_idx[n - 1] = best;
  for (int layer = n - 2; layer >= 0; --layer) {
    grid_idx[layer] = pred[layer][grid_idx[layer + 1]];
  }
  std::vector<Rational> pos(n, Rational(0));
  for (int layer = 0; layer < n; ++layer) {
    pos[dag.order[layer]] = dag.grid_point(grid_idx[layer]);
  }
  LocationProfile profile{std::move(pos)};
  Rational sw = social_welfare(inst, profile);
  return {std::move(profile), std::move(sw)};
}

LocationProfile path_fptas(const DpgInstance& inst, const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1))
    throw std::domain_error("epsilon must lie in (0,1)");
  const Rational two_over_eps = Rational(2) / epsilon;
  const long k = two_over_eps.ceil().get_si();
  const PathDag dag = build_path_dag(inst, k);
  return longest_path_profile(inst, dag).first;
}

LocationProfile en_round_to_endpoints(const DpgInstance& inst, const LocationProfile& a) {
  require_enemies_neutrals(inst);
  const int n = inst.agent_count();
  const Rational zero(0), one(1);
  LocationProfile current = a;
  while (true) {
    // Smallest occupied interior position, with its neighbours among
    // occupied points and the endpoints.
    std::vector<Rational> occupied{zero, one};
    for (AgentId i = 0; i < n; ++i) occupied.push_back(current[i]);
    std::sort(occupied.begin(), occupied.end());
    occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());

    if (occupied.size() <= 2) break;
    const std::size_t pos_idx = 1;  // leftmost interior occupied position
    const Rational& x = occupied[pos_idx];
    const Rational& left = occupied[pos_idx - 1];
    const Rational& right = occupied[pos_idx + 1];
    LocationProfile to_left = current;
    LocationProfile to_right = current;
    for (AgentId i = 0; i < n; ++i) {
      if (current[i] == x) {
        to_left.set(i, left);
        to_right.set(i, right);
      }
    }
    const Rational sw_before = social_welfare(inst, current);
    const Rational sw_left = social_welfare(inst, to_left);
    const Rational sw_right = social_welfare(inst, to_right);
    const Rational& best = sw_left >= sw_right ? sw_left : sw_right;
    if (best < sw_before)
      throw std::logic_error("no welfare-preserving endpoint move exists");
    current = sw_left >= sw_right ? std::move(to_left) : std::move(to_right);
  }
  return current;
}

std::pair<CutAssignment, LocationProfile> en_flip_maxcut(const DpgInstance& inst) {
  require_enemies_neutrals(inst);
  const int n = inst.agent_count();
  CutAssignment cut;
  cut.side.assign(n, 0);

  bool improved = true;
  while (improved) {
    improved = false;
    for (AgentId v = 0; v < n; ++v) {
      long same = 0, across = 0;
      for (const Relation& r : inst.relations(v)) {
        if (cut.side[r.target] == cut.side[v])
          ++same;
        else
          ++across;
      }
      if (same > across) {
        cut.side[v] ^= 1;
        improved = true;
        break;  // restart from the lowest index
      }
    }
  }

  for (AgentId v = 0; v < n; ++v) {
    for (const Relation& r : inst.relations(v)) {
      if (v < r.target && cut.side[v] != cut.side[r.target]) ++cut.cut_weight;
    }
  }
  std::vector<Rational> pos(n, Rational(0));
  for (AgentId v = 0; v < n; ++v) pos[v] = Rational(cut.side[v]);
  return {std::move(cut), LocationProfile(std::move(pos))};
}

}  // namespace dpg
