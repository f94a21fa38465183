#pragma once

#include <vector>

#include "sndtw/graph.hpp"

namespace sndtw {

// Unit-capacity flow network for disjoint-path counting. Edge mode models an
// undirected edge as a pair of opposite arcs of capacity 1; vertex mode uses
// the standard splitting gadget (internal vertices capacity 1, endpoints
// unbounded).
class FlowNetwork {
 public:
  // Edge-disjoint r->sink paths inside the subgraph spanned by edge_ids.
  static FlowNetwork edge_disjoint(const Graph& g, const std::vector<int>& edge_ids,
                                   Vertex source, Vertex sink);
  // Openly vertex-disjoint r->sink paths inside G[vertices].
  static FlowNetwork vertex_disjoint(const Graph& g, const std::vector<Vertex>& vertices,
                                     Vertex source, Vertex sink);
  // Edge-disjoint paths inside G[vertices] (edge connectivity, vertex-cost mode).
  static FlowNetwork edge_disjoint_induced(const Graph& g, const std::vector<Vertex>& vertices,
                                           Vertex source, Vertex sink);

  int max_flow(int limit);
  // After max_flow: the flow decomposed into vertex paths of the original
  // graph (split gadget nodes collapsed).
  std::vector<std::vector<Vertex>> decompose_paths();

 private:
  struct Arc { int to, cap; };
  int add_node() { adj_.emplace_back(); return (int)adj_.size() - 1; }
  void add_arc(int a, int b, int cap);
  bool bfs_levels();
  int dfs_push(int v, int limit);

  std::vector<std::vector<int>> adj_;  // node -> arc ids
  std::vector<Arc> arcs_;
  std::vector<int> level_, iter_;
  std::vector<Vertex> original_;  // network node -> original vertex (-1 for none)
  int source_ = 0, sink_ = 0;
};

}  // namespace sndtw
