#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sndtw/connsets.hpp"
#include "sndtw/graph.hpp"
#include "sndtw/treedec.hpp"

namespace sndtw {

// Canonical code for a tc-closed connection set over a bag of up to 16
// positions: a set partition in restricted-growth labeling, 4 bits per
// position. Closed pair sets and set partitions are in bijection (components
// become blocks, untouched vertices singletons), which is what makes profiles
// hashable DP keys.
using PartCode = uint64_t;

constexpr int kMaxBagPositions = 16;

struct SmallDSU {
  int parent[3 * kMaxBagPositions];
  int count = 0;
  void init(int n) {
    count = n;
    for (int i = 0; i < n; i++) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline PartCode part_identity(int b) {
  PartCode code = 0;
  for (int i = 0; i < b; i++) code |= (PartCode)i << (4 * i);
  return code;
}

inline int part_label(PartCode code, int pos) { return (int)(code >> (4 * pos)) & 0xF; }

inline bool part_joined(PartCode code, int a, int b) {
  return part_label(code, a) == part_label(code, b);
}

// Canonicalize arbitrary labels into first-seen order.
inline PartCode part_canon(const int* labels, int b) {
  int remap[kMaxBagPositions];
  for (int i = 0; i < b; i++) remap[i] = -1;
  PartCode code = 0;
  int next = 0;
  for (int i = 0; i < b; i++) {
    int l = labels[i];
    if (remap[l] < 0) remap[l] = next++;
    code |= (PartCode)remap[l] << (4 * i);
  }
  return code;
}

// Enumerate all set partitions of b elements (restricted growth strings).
std::vector<PartCode> all_partitions(int b);

ConnectionSet part_to_cs(PartCode code, const std::vector<Vertex>& bag);
PartCode cs_to_part(const ConnectionSet& closed, const std::vector<Vertex>& bag);

// Per decomposition node: grounds and index maps precomputed for the closure
// recurrences. `uni` is X_t together with both child bags.
struct NodeCtx {
  std::vector<Vertex> bag;
  int b = 0;
  int left = -1, right = -1;  // child node ids (-1 if leaf)
  int left_b = 0, right_b = 0;

  std::vector<Vertex> uni;
  std::vector<int> bag_in_uni, left_in_uni, right_in_uni;

  // Delta-forcing grounds: bag together with one child bag.
  std::vector<Vertex> dl, dr;
  std::vector<int> bag_in_dl, left_in_dl, bag_in_dr, right_in_dr;

  std::vector<std::pair<int, int>> et_uni;  // E_t endpoints as uni positions
  std::vector<std::pair<int, int>> et_bag;  // E_t endpoints as bag positions
  std::vector<int> et_ids;                  // global edge ids
  std::vector<Rat> et_cost;

  // new = X_t \ X_{p(t)} (positions in bag), for vertex purchases
  std::vector<int> new_positions;

  int pos_of(Vertex v) const;  // position in bag, -1 if absent
};

std::vector<NodeCtx> build_node_contexts(const Graph& g, const TreeDecomposition& td,
                                         const BagAnnotations& ann);

// Gamma recurrence over the uni ground: close left/right child partitions and
// a subset of E_t, project to the bag.
PartCode gamma_step(const NodeCtx& ctx, PartCode left, PartCode right, uint32_t ymask);
// Forced child delta: tc(delta ∪ gamma_child) projected to the child bag.
PartCode delta_force(const NodeCtx& ctx, bool left_side, PartCode delta, PartCode gamma_child);

struct EngineLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sndtw
