#include "dpg/reductions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "dpg/stability.hpp"

namespace dpg {

namespace {

using EdgeList = std::vector<std::tuple<AgentId, AgentId, Rational>>;

void add_sym(EdgeList& edges, AgentId a, AgentId b, const Rational& d) {
  edges.emplace_back(a, b, d);
  edges.emplace_back(b, a, d);
}

void require_simple_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw std::domain_error("negative vertex count");
  std::vector<std::vector<bool>> seen(vertex_count, std::vector<bool>(vertex_count, false));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::domain_error("graph edge endpoint out of range");
    if (u == v) throw std::domain_error("graph has a self-loop");
    if (seen[u][v]) throw std::domain_error("duplicate graph edge");
    seen[u][v] = seen[v][u] = true;
  }
}

long checked_total_weight(const std::vector<long>& weights) {
  long total = 0;
  for (long w : weights) {
    if (w <= 0) throw std::domain_error("item weights must be positive");
    total += w;
  }
  for (long w : weights) {
    if (2 * w > total)
      throw std::domain_error("item weight exceeds half of the total weight");
  }
  return total;
}

}  // namespace

DpgInstance example1() {
  const AgentId a = 0, b = 1, c = 2;
  EdgeList edges;
  edges.emplace_back(a, c, Rational(1, 2));
  edges.emplace_back(b, a, Rational(1));
  edges.emplace_back(b, c, Rational(0));
  edges.emplace_back(c, a, Rational(1, 2));
  edges.emplace_back(c, b, Rational(1, 2));
  return DpgInstance::from_edges(3, edges);
}

DpgInstance example2(long k) {
  if (k < 2) throw std::domain_error("example2 requires k >= 2");
  EdgeList edges;
  const Rational zero(0), one(1), green(1, k);
  // Agents 0..3: a 0-distance clique, each at ideal distance 1 from 4 and 5.
  for (AgentId i = 0; i < 4; ++i) {
    for (AgentId j = i + 1; j < 4; ++j) add_sym(edges, i, j, zero);
    add_sym(edges, i, 4, one);
    add_sym(edges, i, 5, one);
  }
  // Agents 6..9 stick to both 4 and 5.
  for (AgentId i = 6; i < 10; ++i) {
    add_sym(edges, i, 4, zero);
    add_sym(edges, i, 5, zero);
  }
  // Agent 10 follows 6, 7 and trails 4 by 1/k; agent 11 mirrors with 8, 9, 5.
  add_sym(edges, 10, 6, zero);
  add_sym(edges, 10, 7, zero);
  add_sym(edges, 10, 4, green);
  add_sym(edges, 11, 8, zero);
  add_sym(edges, 11, 9, zero);
  add_sym(edges, 11, 5, green);
  return DpgInstance::from_edges(12, edges);
}

DpgInstance fig3() {
  EdgeList edges;
  const Rational one(1);
  add_sym(edges, 0, 1, one);
  add_sym(edges, 1, 2, one);
  add_sym(edges, 2, 3, one);
  add_sym(edges, 0, 3, one);
  return DpgInstance::from_edges(4, edges);
}

DpgInstance prop1() {
  EdgeList edges;
  edges.emplace_back(0, 1, Rational(1));
  edges.emplace_back(1, 0, Rational(0));
  return DpgInstance::from_edges(2, edges);
}

GadgetMeta worked_example_meta(GadgetKind kind, std::optional<long> k) {
  GadgetMeta meta;
  meta.kind = kind;
  int n = 0;
  switch (kind) {
    case GadgetKind::example1:
      n = 3;
      break;
    case GadgetKind::example2:
      if (!k) throw std::domain_error("example2 metadata requires k");
      meta.k = k;
      n = 12;
      break;
    case GadgetKind::fig3:
      n = 4;
      break;
    case GadgetKind::prop1:
      n = 2;
      break;
    default:
      throw std::domain_error("not a worked example kind");
  }
  meta.agent_map.resize(n);
  std::iota(meta.agent_map.begin(), meta.agent_map.end(), 0);
  return meta;
}

Gadget cyclic_partition_gadget(const std::vector<long>& weights) {
  const long total = checked_total_weight(weights);
  const int k = static_cast<int>(weights.size());
  if (k < 2) throw std::domain_error("cyclic gadget needs at least two items");
  EdgeList edges;
  for (int t = 0; t < k; ++t) {
    edges.emplace_back(t, (t + 1) % k, Rational(weights[t], total));
  }
  GadgetMeta meta;
  meta.kind = GadgetKind::cyclic_partition;
  meta.weights = weights;
  meta.agent_map.resize(k);
  std::iota(meta.agent_map.begin(), meta.agent_map.end(), 0);
  return {DpgInstance::from_edges(k, edges), std::move(meta)};
}

LocationProfile stable_profile_from_partition(const Gadget& gadget, std::vector<bool> in_x) {
  if (gadget.meta.kind != GadgetKind::cyclic_partition)
    throw std::domain_error("witness builder expects a cyclic partition gadget");
  const auto& weights = gadget.meta.weights;
  const int k = static_cast<int>(weights.size());
  if (static_cast<int>(in_x.size()) != k)
    throw std::domain_error("subset indicator size does not match item count");

  long in_sum = 0, out_sum = 0;
  for (int t = 0; t < k; ++t) (in_x[t] ? in_sum : out_sum) += weights[t];
  if (in_sum != out_sum) throw std::domain_error("subset does not balance the weights");
  // The construction assumes the last item is inside X; the complement of a
  // balanced half is balanced, so relabel when it is not.
  if (!in_x[k - 1]) in_x.flip();

  const long total = in_sum + out_sum;
  std::vector<Rational> pos(k);
  pos[0] = Rational(1, 2);
  for (int t = 0; t + 1 < k; ++t) {
    const Rational step(weights[t], total);
    pos[t + 1] = in_x[t] ? pos[t] + step : pos[t] - step;
  }
  LocationProfile profile{std::move(pos)};
  if (!is_jump_stable(gadget.instance, profile).stable)
    throw std::logic_error("partition witness failed stability verification");
  return profile;
}

Gadget path_partition_gadget(const std::vector<long>& weights) {
  const long total = checked_total_weight(weights);
  const int k = static_cast<int>(weights.size());
  if (k < 1) throw std::domain_error("path gadget needs at least one item");
  const int n = k + 5;
  EdgeList edges;
  edges.emplace_back(0, 1, Rational(1));
  edges.emplace_back(1, 2, Rational(1, 2));
  for (int t = 2; t <= k + 1; ++t) {
    edges.emplace_back(t, t + 1, Rational(weights[t - 2], total));
  }
  edges.emplace_back(k + 2, k + 3, Rational(1, 2));
  edges.emplace_back(k + 3, k + 4, Rational(1));
  GadgetMeta meta;
  meta.kind = GadgetKind::path_partition;
  meta.weights = weights;
  meta.agent_map.resize(k);
  std::iota(meta.agent_map.begin(), meta.agent_map.end(), 2);
  return {DpgInstance::from_edges(n, edges), std::move(meta)};
}

Gadget en_maxcut_gadget(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  require_simple_graph(vertex_count, edges);
  EdgeList rel;
  const Rational one(1);
  for (const auto& [u, v] : edges) add_sym(rel, u, v, one);
  GadgetMeta meta;
  meta.kind = GadgetKind::en_maxcut;
  meta.graph_vertices = vertex_count;
  meta.graph_edges = edges;
  meta.agent_map.resize(vertex_count);
  std::iota(meta.agent_map.begin(), meta.agent_map.end(), 0);
  return {DpgInstance::from_edges(vertex_count, rel), std::move(meta)};
}

AgentId pls_vertex_agent(int v) { return v; }

AgentId pls_midpoint_agent(int vertex_count, int j) { return vertex_count + j; }

AgentId pls_left_block(int vertex_count, int j) {
  return 2 * vertex_count + j * 4 * vertex_count;
}

AgentId pls_right_block(int vertex_count, int j) {
  return pls_left_block(vertex_count, j) + 2 * vertex_count;
}

int pls_agent_count(int vertex_count) { return 2 * vertex_count + 4 * vertex_count * vertex_count; }

Gadget pls_gadget(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                  const std::vector<Rational>& edge_weights) {
  require_simple_graph(vertex_count, edges);
  if (vertex_count < 3) throw std::domain_error("pls gadget requires at least 3 vertices");
  if (edge_weights.size() != edges.size())
    throw std::domain_error("edge weight count does not match edge count");
  Rational max_weight(0);
  for (const Rational& w : edge_weights) {
    if (w.sign() <= 0) throw std::domain_error("edge weights must be positive");
    if (w > max_weight) max_weight = w;
  }

  const int nv = vertex_count;
  const Rational half(1, 2), one(1);
  EdgeList rel;

  // Vertex agents: mutual distances 1/2 + w/(2W) along graph edges, plus
  // distance 1 to every midpoint agent.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Rational d = half + edge_weights[e] / (Rational(2) * max_weight);
    add_sym(rel, pls_vertex_agent(edges[e].first), pls_vertex_agent(edges[e].second), d);
  }
  for (int v = 0; v < nv; ++v) {
    for (int j = 0; j < nv; ++j) {
      add_sym(rel, pls_vertex_agent(v), pls_midpoint_agent(nv, j), one);
    }
  }

  // Endpoint blocks: within block j, every left agent is at distance 1 from
  // every right agent; everyone is at 1/2 from the midpoint except the
  // designated pair (first of each block) at distance 1.
  for (int j = 0; j < nv; ++j) {
    const AgentId m = pls_midpoint_agent(nv, j);
    const AgentId left = pls_left_block(nv, j);
    const AgentId right = pls_right_block(nv, j);
    for (int s = 0; s < 2 * nv; ++s) {
      for (int t = 0; t < 2 * nv; ++t) {
        add_sym(rel, left + s, right + t, one);
      }
      add_sym(rel, left + s, m, s == 0 ? one : half);
      add_sym(rel, right + s, m, s == 0 ? one : half);
    }
  }

  GadgetMeta meta;
  meta.kind = GadgetKind::pls_maxcut;
  meta.graph_vertices = nv;
  meta.graph_edges = edges;
  meta.graph_edge_weights = edge_weights;
  meta.agent_map.resize(nv);
  std::iota(meta.agent_map.begin(), meta.agent_map.end(), 0);
  return {DpgInstance::from_edges(pls_agent_count(nv), rel), std::move(meta)};
}

LocationProfile pls_canonical_profile(const Gadget& gadget, const std::vector<int>& side) {
  if (gadget.meta.kind != GadgetKind::pls_maxcut)
    throw std::domain_error("canonical profile expects a pls gadget");
  const int nv = gadget.meta.graph_vertices;
  if (static_cast<int>(side.size()) != nv)
    throw std::domain_error("cut side size does not match vertex count");
  std::vector<Rational> pos(pls_agent_count(nv), Rational(0));
  for (int v = 0; v < nv; ++v) {
    if (side[v] != 0 && side[v] != 1) throw std::domain_error("cut sides must be 0 or 1");
    pos[pls_vertex_agent(v)] = Rational(side[v]);
  }
  for (int j = 0; j < nv; ++j) {
    pos[pls_midpoint_agent(nv, j)] = Rational(1, 2);
    for (int s = 0; s < 2 * nv; ++s) {
      pos[pls_left_block(nv, j) + s] = Rational(0);
      pos[pls_right_block(nv, j) + s] = Rational(1);
    }
  }
  return LocationProfile(std::move(pos));
}

}  // namespace dpg
