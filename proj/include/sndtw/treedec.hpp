#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sndtw/graph.hpp"

namespace sndtw {

// Rooted tree of bags. Arbitrary arity until normalize(); binary afterwards.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // sorted vertex lists
  std::vector<int> parent;                // -1 at root
  std::vector<std::vector<int>> children;
  int root = 0;

  int node_count() const { return (int)bags.size(); }
  int width() const;
  int height() const;  // edges on the longest root-leaf path
  int add_node(std::vector<Vertex> bag, int parent_node);
};

struct BagAnnotations {
  std::vector<int> topmost;                    // vertex -> node with X_t topmost
  std::vector<std::vector<int>> bag_edges;     // node -> edge ids (E_t)
  std::vector<std::vector<Vertex>> subtree_vertices;  // node -> X_{T_t}, sorted
  std::vector<std::vector<int>> subtree_edges;        // node -> union of E_t below, sorted
};

struct DecomposeReport {
  bool exact = false;
  int width = 0;
};

struct NormalizeReport {
  int height = 0;
  int max_bag = 0;
  bool rebalanced = false;
};

// Exact subset dynamic programming over elimination prefixes for n <= exact_limit,
// min-fill greedy beyond that.
TreeDecomposition decompose(const Graph& g, std::optional<int> width_hint = std::nullopt,
                            DecomposeReport* report = nullptr, int exact_limit = 20);

// Binary tree, edge-free leaves, all three decomposition properties intact.
// With rebalance, rebuilds to height O(log n) at the price of a constant
// factor in bag size (reported).
TreeDecomposition normalize(const TreeDecomposition& td, const Graph& g, bool rebalance = false,
                            NormalizeReport* report = nullptr);

TreeDecomposition add_universal_vertices(const TreeDecomposition& td,
                                         const std::vector<Vertex>& vs);

// Topmost bags, E_t assignment, subtree closures. Requires a valid decomposition.
BagAnnotations annotate(const TreeDecomposition& td, const Graph& g);

// Independent verifier for the three decomposition properties (plus binary
// arity and edge-free leaves when `normalized`). Empty result means valid.
std::vector<std::string> validate(const TreeDecomposition& td, const Graph& g,
                                  bool normalized = false);

// PACE-2017-style formats.
Graph parse_gr(const std::string& text);
TreeDecomposition parse_td(const std::string& text, const Graph& g);
std::string write_td(const TreeDecomposition& td, const Graph& g);

}  // namespace sndtw
