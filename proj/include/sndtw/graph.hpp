#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sndtw/rational.hpp"

namespace sndtw {

using Vertex = int;

struct Edge {
  Vertex u, v;  // u < v
  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
};

// Undirected simple graph with rational edge costs and optional vertex costs.
// Immutable after construction.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<Rat> edge_cost;               // parallel to edges
  std::vector<Rat> vertex_cost;             // empty, or size n
  std::vector<std::vector<std::pair<Vertex, int>>> adj;  // (neighbor, edge id)

  void add_edge(Vertex u, Vertex v, const Rat& cost);
  int edge_id(Vertex u, Vertex v) const;  // -1 if absent
  bool has_vertex_costs() const { return !vertex_cost.empty(); }
  bool connected() const;
};

enum class CostMode { Edge, Vertex };
enum class ConnMode { Edge, Vertex };

struct Group {
  std::vector<Vertex> members;  // sorted, nonempty
  int demand = 1;               // k_i >= 1
};

// A problem statement: graph, root(s), group demands, modes.
struct Instance {
  Graph graph;
  Vertex root = 0;
  std::vector<Vertex> roots;  // nonempty in multi-root vertex-connectivity mode
  std::vector<Group> groups;
  CostMode cost_mode = CostMode::Edge;
  ConnMode conn_mode = ConnMode::Edge;
  int max_demand = 1;  // declared k

  bool multi_root() const { return !roots.empty(); }
  const std::vector<Vertex>& root_set() const;
  bool is_root(Vertex v) const;
  // Root vertices are mandatory and charged zero in vertex-cost mode; this
  // accessor is the single place that convention lives.
  Rat effective_vertex_cost(Vertex v) const;
};

// Either an edge set (edge-cost mode) or a vertex set (vertex-cost mode).
struct Solution {
  std::vector<int> edge_ids;       // sorted
  std::vector<Vertex> vertices;    // sorted
  Cost cost;

  static Solution of_edges(std::vector<int> ids);
  static Solution of_vertices(std::vector<Vertex> vs);
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);
bool instances_equal(const Instance& a, const Instance& b);

Cost solution_cost(const Instance& inst, const Solution& sol);

}  // namespace sndtw
