#pragma once

#include <string>
#include <vector>

#include "sndtw/graph.hpp"
#include "sndtw/treedec.hpp"

namespace sndtw {

// A set of unordered vertex pairs over a ground set. Pairs are canonical
// (u < v, sorted, unique); connectivity is undirected.
struct ConnectionSet {
  std::vector<Vertex> ground;                     // sorted
  std::vector<std::pair<Vertex, Vertex>> pairs;   // canonical

  static ConnectionSet over(std::vector<Vertex> ground);
  void add(Vertex u, Vertex v);
  bool contains(Vertex u, Vertex v) const;
  void canonicalize();
  bool operator==(const ConnectionSet& o) const { return ground == o.ground && pairs == o.pairs; }
  std::string str() const;  // "{(u,v),...}" for golden tests
};

// Transitive closure: complete graph on each connected component of the
// pair-graph.
ConnectionSet tc(const ConnectionSet& cs);

// Pairs (u,v) joined by a path whose internal vertices all lie in z and whose
// edges are pairs of edge_pairs. Not a closure operator in the tc sense:
// endpoints need not belong to z.
ConnectionSet tc_star(const std::vector<Vertex>& z, const ConnectionSet& edge_pairs);

ConnectionSet project(const ConnectionSet& cs, const std::vector<Vertex>& s_prime);
ConnectionSet union_cs(const ConnectionSet& a, const ConnectionSet& b);
ConnectionSet pairs_of_edges(const Graph& g, const std::vector<int>& edge_ids);

// The local recurrences, exposed one step at a time.
ConnectionSet local_step_gamma(const ConnectionSet& gamma_left, const ConnectionSet& gamma_right,
                               const ConnectionSet& y_edges, const std::vector<Vertex>& bag);
ConnectionSet local_step_delta(const ConnectionSet& delta_parent, const ConnectionSet& gamma_self,
                               const std::vector<Vertex>& bag);

struct VertexTriple {
  std::vector<Vertex> z;  // sorted subset of the bag
  ConnectionSet gamma;
  ConnectionSet delta;
};

// All three vertex-mode recurrences for one bag.
VertexTriple vertex_local_step(const std::vector<Vertex>& z_parent, const std::vector<Vertex>& w_t,
                               const std::vector<Vertex>& bag, const ConnectionSet& gamma_left,
                               const ConnectionSet& gamma_right, const ConnectionSet& delta_parent,
                               const ConnectionSet& y_edges, bool is_root, bool is_leaf);

struct EdgePairAssignment {
  ConnectionSet gamma;
  ConnectionSet delta;
};

struct CheckResult {
  bool ok = true;
  int node = -1;         // first violating bag
  std::string equation;  // which recurrence failed
};

// Local-definition checkers: verify the recurrences at every bag and report
// the first violation. Y is given per node as edge ids within E_t; W per node
// as vertices within X_t \ X_{p(t)}.
CheckResult check_local_edge(const TreeDecomposition& td, const BagAnnotations& ann,
                             const Graph& g, const std::vector<std::vector<int>>& y,
                             const std::vector<EdgePairAssignment>& pairs);
CheckResult check_local_mixed(const TreeDecomposition& td, const BagAnnotations& ann,
                              const Graph& g, const std::vector<std::vector<int>>& y,
                              const std::vector<std::vector<Vertex>>& w,
                              const std::vector<VertexTriple>& triples);
CheckResult check_local_vertex(const TreeDecomposition& td, const BagAnnotations& ann,
                               const Graph& g, const std::vector<std::vector<Vertex>>& w,
                               const std::vector<VertexTriple>& triples);

// Companion global definitions, computed directly from Y = union of Y_t
// (resp. W) on the whole graph.
std::vector<EdgePairAssignment> global_edge_pairs(const TreeDecomposition& td,
                                                  const BagAnnotations& ann, const Graph& g,
                                                  const std::vector<std::vector<int>>& y);
std::vector<VertexTriple> global_mixed_triples(const TreeDecomposition& td,
                                               const BagAnnotations& ann, const Graph& g,
                                               const std::vector<std::vector<int>>& y,
                                               const std::vector<std::vector<Vertex>>& w);
std::vector<VertexTriple> global_vertex_triples(const TreeDecomposition& td,
                                                const BagAnnotations& ann, const Graph& g,
                                                const std::vector<std::vector<Vertex>>& w);

}  // namespace sndtw
