#pragma once

#include <optional>
#include <unordered_map>

#include "sndtw/dp_support.hpp"
#include "sndtw/feasibility.hpp"

namespace sndtw {

struct ECDemand {
  Vertex target;
  int k;
};

// Profiles in set semantics, for the literal consistency check and the
// full-profile cross-validation solver.
struct ECPair {
  std::vector<ConnectionSet> gamma;  // k components
  std::vector<ConnectionSet> delta;
};
using ECProfile = std::vector<ECPair>;

// The three-way consistency relation via Y: every pair of each profile must
// find partners in the other two together with a partition of Y, checked per
// coordinate with the Steiner-style equations. The partitions are existential
// and independent per direction.
bool ec_consistent(const ECProfile& psi, const ECProfile& psi_left, const ECProfile& psi_right,
                   const std::vector<int>& y_edge_ids, const Graph& g,
                   const std::vector<Vertex>& bag, const std::vector<Vertex>& bag_left,
                   const std::vector<Vertex>& bag_right,
                   std::vector<std::vector<int>>* witness_partition = nullptr);

// Single-coordinate consistency (the Steiner relation), exposed for tests.
bool steiner_consistent(const ConnectionSet& gamma, const ConnectionSet& delta,
                        const ConnectionSet& gamma_left, const ConnectionSet& delta_left,
                        const ConnectionSet& gamma_right, const ConnectionSet& delta_right,
                        const std::vector<int>& y_edge_ids, const Graph& g,
                        const std::vector<Vertex>& bag, const std::vector<Vertex>& bag_left,
                        const std::vector<Vertex>& bag_right);

struct ECEngineStats {
  std::vector<size_t> gamma_states;  // per node
  std::vector<size_t> transitions;   // per node
  std::vector<size_t> cells;         // per node, pass-2 memo entries
  uint64_t consistency_checks = 0;
  size_t max_cells_per_bag() const {
    size_t m = 0;
    for (size_t c : cells) m = std::max(m, c);
    return m;
  }
};

// Two-pass table: bottom-up reachable local states (per-demand tuples of
// closed connection sets), then top-down costs with the global side forced by
// the recurrences. Demand i contributes k_i coordinates; edges of a bag may
// also stay unassigned, which corresponds to the classes above k_i.
class ECEngine {
 public:
  struct Trans {
    int left_state, right_state;
    uint32_t ymask;
    int parent_state;
    Rat cost;
    std::vector<uint8_t> assign;  // demand-major, |E_t| entries each: class or 0
  };

  ECEngine(const Graph& g, const TreeDecomposition& td, const BagAnnotations& ann, Vertex root,
           std::vector<ECDemand> demands, bool group_mode = false,
           uint64_t state_limit = 4'000'000);

  void build();  // pass 1

  struct Outcome {
    bool feasible = false;
    Cost cost = Cost::infinity();
    std::vector<int> edge_ids;
    std::vector<std::vector<std::vector<int>>> demand_partitions;  // [demand][class] -> edges
  };
  Outcome solve();  // pass 2 + traceback

  // Universe introspection (tree instance, LP).
  int node_count() const { return (int)ctx_.size(); }
  int root_node() const { return td_.root; }
  const TreeDecomposition& tree() const { return td_; }
  const NodeCtx& ctx(int t) const { return ctx_[t]; }
  const std::vector<std::vector<PartCode>>& states_at(int t) const { return tables_[t].states; }
  const std::vector<Trans>& trans_at(int t) const { return tables_[t].trans; }
  const std::vector<int>& trans_of(int t, int gidx) const { return tables_[t].trans_of[gidx]; }
  int demand_count() const { return (int)demands_.size(); }
  const ECDemand& demand(int i) const { return demands_[i]; }
  int coord_offset(int i) const { return offset_[i]; }
  int total_coords() const { return total_coords_; }
  Vertex root_vertex() const { return root_; }
  int topmost_of(Vertex v) const { return topmost_[v]; }

  std::vector<PartCode> forced_child_delta(int t, const Trans& tr,
                                           const std::vector<PartCode>& delta,
                                           bool left_side) const;
  // S̃ membership rule: some component with at least need_k coordinates joins
  // (root, v) in its first need_k delta sets.
  bool delta_satisfies(int t, const std::vector<PartCode>& delta, Vertex v, int need_k) const;

  const ECEngineStats& stats() const { return stats_; }

 private:
  struct VecHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
      size_t h = 1469598103934665603ull;
      for (auto c : v) {
        h ^= std::hash<uint64_t>()(c);
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  struct NodeTable {
    std::vector<std::vector<PartCode>> states;
    std::unordered_map<std::vector<uint64_t>, int, VecHash> intern;
    std::vector<Trans> trans;
    std::vector<std::vector<int>> trans_of;
    // pass 2
    std::vector<std::vector<PartCode>> deltas;
    std::unordered_map<std::vector<uint64_t>, int, VecHash> delta_intern;
    struct Entry {
      Cost cost = Cost::infinity();
      int trans = -1;
      int left_delta = -1, right_delta = -1;
      bool done = false;
    };
    std::unordered_map<uint64_t, Entry> memo;
  };

  int intern_state(int t, const std::vector<PartCode>& codes);
  int intern_delta(int t, const std::vector<PartCode>& codes);
  bool valid_at(int t, const std::vector<PartCode>& delta) const;
  Cost eval(int t, int gidx, int didx);
  void traceback(int t, int gidx, int didx, Outcome& out);

  const Graph& g_;
  TreeDecomposition td_;
  std::vector<NodeCtx> ctx_;
  Vertex root_;
  std::vector<ECDemand> demands_;
  std::vector<int> offset_;
  int total_coords_ = 0;
  bool group_mode_;
  uint64_t state_limit_;
  std::vector<int> topmost_;
  std::vector<std::vector<int>> demands_at_;  // node -> demand indices with topmost there
  std::vector<NodeTable> tables_;
  std::vector<int> postorder_;
  ECEngineStats stats_;
  bool built_ = false;
};

struct ExactSolveResult {
  bool feasible = false;
  Cost cost = Cost::infinity();
  Solution solution;
  std::vector<std::vector<std::vector<int>>> demand_partitions;
  ECEngineStats stats;
  NormalizeReport norm;
};

struct ECSolveOptions {
  std::optional<TreeDecomposition> td;  // bypasses decompose
  bool full_profiles = false;
  bool rebalance = false;
};

ExactSolveResult solve_ecsndp(const Instance& inst, const ECSolveOptions& opt = {});

// Rooted instance equivalent to Subset-k-EC on the given terminal group
// (edge-connectivity is transitive, so one terminal may serve as root).
Instance subset_kec_reduce(const Instance& subset_inst);

}  // namespace sndtw
