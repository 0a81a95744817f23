#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dpg/instance.hpp"

namespace dpg {

enum class GadgetKind {
  example1,
  example2,
  fig3,
  prop1,
  cyclic_partition,
  path_partition,
  en_maxcut,
  pls_maxcut,
};

// Provenance of a generated instance: which construction produced it, the
// combinatorial source, and where each source entity landed.
struct GadgetMeta {
  GadgetKind kind;
  std::optional<long> k;                          // example2 parameter
  std::vector<long> weights;                      // partition item weights
  int graph_vertices = 0;                         // source graph, for cut gadgets
  std::vector<std::pair<int, int>> graph_edges;
  std::vector<Rational> graph_edge_weights;       // pls_maxcut only
  std::vector<AgentId> agent_map;                 // source entity -> agent id
};

struct Gadget {
  DpgInstance instance;
  GadgetMeta meta;
};

// Worked instances from the text: the three-researcher office example, the
// slow best-response chain, the tight price-of-anarchy 4-cycle, and the
// two-agent game with no stable profile.
DpgInstance example1();
DpgInstance example2(long k);  // k >= 2
DpgInstance fig3();
DpgInstance prop1();

GadgetMeta worked_example_meta(GadgetKind kind, std::optional<long> k = std::nullopt);

// Directed cycle with d_i(i+1) = w_i / sum(w); jump stable profiles exist
// exactly when the weights split into two equal halves. Requires every
// weight positive and at most half the total.
Gadget cyclic_partition_gadget(const std::vector<long>& weights);

// Witness builder from the balanced half X (in_x[t] says item t is in X):
// walk from 1/2, adding d_t(t+1) when item t is in X and subtracting it
// otherwise, which puts every agent at its ideal distance. The last item is
// relabeled into X by complementing when necessary. The result is verified
// stable before being returned.
LocationProfile stable_profile_from_partition(const Gadget& gadget, std::vector<bool> in_x);

// Path version: two head agents, the item chain, three tail agents; the
// maximum welfare k+4 is attainable exactly when a balanced split exists.
Gadget path_partition_gadget(const std::vector<long>& weights);

// Enemies-and-neutrals instance whose preference graph is the input graph.
Gadget en_maxcut_gadget(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// Local-search hardness gadget: vertex agents at distances
// 1/2 + w(e) / (2 max w), plus midpoint and endpoint agents forcing vertex
// agents to the interval ends. Requires at least 3 vertices and positive
// weights.
Gadget pls_gadget(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                  const std::vector<Rational>& edge_weights);

// Deterministic pls_gadget agent layout.
AgentId pls_vertex_agent(int v);
AgentId pls_midpoint_agent(int vertex_count, int j);
AgentId pls_left_block(int vertex_count, int j);   // 2|V| agents; first is l*_j
AgentId pls_right_block(int vertex_count, int j);  // 2|V| agents; first is r*_j
int pls_agent_count(int vertex_count);

// Vertex agents on their cut side, left blocks at 0, right blocks at 1,
// midpoints at 1/2. Jump stable exactly when no single flip improves the cut.
LocationProfile pls_canonical_profile(const Gadget& gadget, const std::vector<int>& side);

}  // namespace dpg
