#include "dpg/instance.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace dpg {

DpgInstance::DpgInstance(int agent_count, std::vector<std::vector<Relation>> relations)
    : n_(agent_count), relations_(std::move(relations)) {
  if (n_ < 0) throw std::domain_error("negative agent count");
  if (static_cast<int>(relations_.size()) != n_)
    throw std::domain_error("relation table size does not match agent count");
  carers_.assign(n_, {});
  for (AgentId i = 0; i < n_; ++i) {
    auto& rel = relations_[i];
    std::sort(rel.begin(), rel.end(),
              [](const Relation& a, const Relation& b) { return a.target < b.target; });
    AgentId prev = -1;
    for (const Relation& r : rel) {
      if (r.target < 0 || r.target >= n_)
        throw std::domain_error("relation target out of range for agent " + std::to_string(i));
      if (r.target == i)
        throw std::domain_error("agent " + std::to_string(i) + " relates to itself");
      if (r.target == prev)
        throw std::domain_error("duplicate relation target for agent " + std::to_string(i));
      if (r.distance.sign() < 0 || r.distance > Rational(1))
        throw std::domain_error("ideal distance outside [0,1] for agent " + std::to_string(i));
      prev = r.target;
      carers_[r.target].push_back(i);
      ++relation_count_;
    }
  }
}

DpgInstance DpgInstance::from_edges(
    int agent_count, const std::vector<std::tuple<AgentId, AgentId, Rational>>& edges) {
  if (agent_count < 0) throw std::domain_error("negative agent count");
  std::vector<std::vector<Relation>> rel(agent_count);
  for (const auto& [from, to, d] : edges) {
    if (from < 0 || from >= agent_count) throw std::domain_error("edge source out of range");
    rel[from].push_back({to, d});
  }
  return DpgInstance(agent_count, std::move(rel));
}

const Rational* DpgInstance::distance(AgentId i, AgentId j) const {
  const auto& rel = relations_[i];
  auto it = std::lower_bound(rel.begin(), rel.end(), j,
                             [](const Relation& r, AgentId id) { return r.target < id; });
  if (it != rel.end() && it->target == j) return &it->distance;
  return nullptr;
}

LocationProfile::LocationProfile(std::vector<Rational> positions) : positions_(std::move(positions)) {
  for (const Rational& x : positions_) {
    if (x.sign() < 0 || x > Rational(1)) throw std::domain_error("position outside [0,1]");
  }
}

LocationProfile LocationProfile::zeros(int n) {
  return LocationProfile(std::vector<Rational>(n, Rational(0)));
}

void LocationProfile::set(AgentId i, Rational x) {
  if (x.sign() < 0 || x > Rational(1)) throw std::domain_error("position outside [0,1]");
  positions_[i] = std::move(x);
}

LocationProfile LocationProfile::with(AgentId i, Rational x) const {
  LocationProfile copy = *this;
  copy.set(i, std::move(x));
  return copy;
}

std::optional<std::vector<AgentId>> reverse_topological_order(const DpgInstance& inst) {
  const int n = inst.agent_count();
  std::vector<int> pending(n);
  std::priority_queue<AgentId, std::vector<AgentId>, std::greater<>> ready;
  for (AgentId i = 0; i < n; ++i) {
    pending[i] = static_cast<int>(inst.relations(i).size());
    if (pending[i] == 0) ready.push(i);
  }
  std::vector<AgentId> order;
  order.reserve(n);
  while (!ready.empty()) {
    AgentId j = ready.top();
    ready.pop();
    order.push_back(j);
    for (AgentId i : inst.carers(j)) {
      if (--pending[i] == 0) ready.push(i);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

std::optional<std::vector<AgentId>> path_order(const DpgInstance& inst) {
  const int n = inst.agent_count();
  if (n == 0) return std::nullopt;
  AgentId tail = -1;
  for (AgentId i = 0; i < n; ++i) {
    const auto sz = inst.relations(i).size();
    if (sz > 1) return std::nullopt;
    if (inst.carers(i).size() > 1) return std::nullopt;
    if (sz == 0) {
      if (tail != -1) return std::nullopt;
      tail = i;
    }
  }
  if (tail == -1) return std::nullopt;
  AgentId head = -1;
  for (AgentId i = 0; i < n; ++i) {
    if (inst.carers(i).empty()) {
      if (head != -1) return std::nullopt;
      head = i;
    }
  }
  if (head == -1) return std::nullopt;
  std::vector<AgentId> order;
  order.reserve(n);
  AgentId cur = head;
  for (int steps = 0; steps < n; ++steps) {
    order.push_back(cur);
    if (cur == tail) break;
    cur = inst.relations(cur)[0].target;
  }
  if (static_cast<int>(order.size()) != n || order.back() != tail) return std::nullopt;
  return order;
}

ClassFlags classify(const DpgInstance& inst, long max_k) {
  ClassFlags flags;

  flags.symmetric = true;
  bool all_distance_one = true;
  mpz_class lcm = 1;
  bool lcm_in_bounds = true;
  const mpz_class bound(max_k);
  for (AgentId i = 0; i < inst.agent_count(); ++i) {
    for (const Relation& r : inst.relations(i)) {
      if (flags.symmetric) {
        const Rational* back = inst.distance(r.target, i);
        if (back == nullptr || *back != r.distance) flags.symmetric = false;
      }
      if (r.distance != Rational(1)) all_distance_one = false;
      if (lcm_in_bounds) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.distance.den().get_mpz_t());
        if (lcm > bound) lcm_in_bounds = false;
      }
    }
  }
  flags.enemies_neutrals = flags.symmetric && all_distance_one;
  if (lcm_in_bounds) flags.k_discrete_for = lcm.get_si();

  flags.acyclic = reverse_topological_order(inst).has_value();
  flags.path = path_order(inst).has_value();
  return flags;
}

}  // namespace dpg
