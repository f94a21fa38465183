#pragma once

#include <string>
#include <vector>

#include "sndtw/graph.hpp"

namespace sndtw {

struct GroupVerdict {
  int group = 0;
  bool satisfied = false;
  Vertex witness = -1;  // vertex of the group reached with full demand
  int achieved = 0;     // best disjoint-path count over group members
  std::vector<std::vector<Vertex>> paths;  // disjoint-path certificate for witness
};

struct FeasibilityReport {
  bool feasible = false;
  std::vector<GroupVerdict> groups;
};

// For each group, decides whether some member has demand-many edge-disjoint
// (resp. openly vertex-disjoint) paths from a root inside the solution
// subgraph. Demands touching a root vertex itself are trivially satisfied.
FeasibilityReport check_feasible(const Instance& inst, const Solution& sol,
                                 bool want_certificates = false);

// Disjoint-path count from src to dst inside the solution subgraph, capped
// at `limit`. Shared by check_feasible and the brute-force oracle.
int disjoint_path_count(const Instance& inst, const Solution& sol, Vertex src, Vertex dst,
                        int limit);

}  // namespace sndtw
