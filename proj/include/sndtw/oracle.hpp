#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sndtw/feasibility.hpp"
#include "sndtw/graph.hpp"

namespace sndtw {

struct BruteForceResult {
  bool feasible = false;
  bool budget_exceeded = false;
  Solution solution;
  Cost cost = Cost::infinity();
};

// Exhaustive minimum over subsets of positive-cost candidates; zero-cost
// elements are always included (feasibility is monotone, so this loses
// nothing). Feasibility decided by max-flow.
BruteForceResult brute_force_optimum(const Instance& inst, int budget_bits = 22);

// Min-k-CSP instances (Max-k-CSP constraints, minimised total label count).
struct CSPConstraint {
  std::vector<int> vars;                    // exactly k distinct variables
  std::vector<std::vector<int>> accepting;  // accepting value tuples
};

struct CSPInstance {
  int num_vars = 0;
  int domain = 0;  // values 0..domain-1
  int arity = 0;   // k
  std::vector<CSPConstraint> constraints;
};

CSPInstance parse_csp(const std::string& text);
std::string serialize_csp(const CSPInstance& csp);

// Vertex-weighted Restricted Group SNDP instance: one unit-cost vertex per
// (variable, value) label, one zero-cost vertex per accepting configuration,
// groups over configurations with demand k.
Instance csp_to_rgsndp(const CSPInstance& csp);

struct MinCSPResult {
  bool satisfiable = false;
  int total_labels = 0;
};

// Exhaustive search over label assignments (desk scale only).
MinCSPResult min_csp_brute_force(const CSPInstance& csp);

}  // namespace sndtw
