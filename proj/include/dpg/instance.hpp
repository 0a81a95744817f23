#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "dpg/rational.hpp"

namespace dpg {

using AgentId = int;

// One entry of an agent's relationship list: the agent cares about `target`
// and wants to sit at distance `distance` from it.
struct Relation {
  AgentId target;
  Rational distance;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.target == b.target && a.distance == b.distance;
  }
};

// A distance preservation game: n agents, each with a relationship list
// (sorted by target id) of ideal distances in [0,1]. Immutable after
// construction and safe to share across threads.
class DpgInstance {
 public:
  DpgInstance(int agent_count, std::vector<std::vector<Relation>> relations);

  static DpgInstance from_edges(int agent_count,
                                const std::vector<std::tuple<AgentId, AgentId, Rational>>& edges);

  int agent_count() const { return n_; }
  const std::vector<Relation>& relations(AgentId i) const { return relations_[i]; }
  // Agents whose relationship list contains j, ascending.
  const std::vector<AgentId>& carers(AgentId j) const { return carers_[j]; }
  const Rational* distance(AgentId i, AgentId j) const;
  bool cares_about(AgentId i, AgentId j) const { return distance(i, j) != nullptr; }
  long relation_count() const { return relation_count_; }

  friend bool operator==(const DpgInstance& a, const DpgInstance& b) {
    return a.n_ == b.n_ && a.relations_ == b.relations_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Relation>> relations_;
  std::vector<std::vector<AgentId>> carers_;
  long relation_count_ = 0;
};

// One location in [0,1] per agent. Bounds are enforced on every write.
class LocationProfile {
 public:
  LocationProfile() = default;
  explicit LocationProfile(std::vector<Rational> positions);
  static LocationProfile zeros(int n);

  int size() const { return static_cast<int>(positions_.size()); }
  const Rational& operator[](AgentId i) const { return positions_[i]; }
  void set(AgentId i, Rational x);
  LocationProfile with(AgentId i, Rational x) const;
  const std::vector<Rational>& positions() const { return positions_; }

  friend bool operator==(const LocationProfile& a, const LocationProfile& b) {
    return a.positions_ == b.positions_;
  }

 private:
  std::vector<Rational> positions_;
};

struct ClassFlags {
  bool symmetric = false;
  bool acyclic = false;
  bool path = false;
  bool enemies_neutrals = false;
  // Smallest k such that every ideal distance is a multiple of 1/k; absent
  // when the lcm of denominators exceeds the bound passed to classify().
  std::optional<long> k_discrete_for;
};

ClassFlags classify(const DpgInstance& inst, long max_k = 1'000'000'000L);

// Order i_1..i_n with M_{i_t} contained in {i_1..i_{t-1}}; nullopt if the
// preference graph has a directed cycle. Deterministic (lowest id first).
std::optional<std::vector<AgentId>> reverse_topological_order(const DpgInstance& inst);

// Head-to-tail agent order when the preference graph forms a single path.
std::optional<std::vector<AgentId>> path_order(const DpgInstance& inst);

}  // namespace dpg
