#include "sndtw/feasibility.hpp"

#include <algorithm>

#include "sndtw/flow.hpp"

namespace sndtw {

namespace {

bool contains(const std::vector<Vertex>& vs, Vertex v) {
  return std::binary_search(vs.begin(), vs.end(), v);
}

}  // namespace

int disjoint_path_count(const Instance& inst, const Solution& sol, Vertex src, Vertex dst,
                        int limit) {
  if (src == dst) return limit;
  if (inst.cost_mode == CostMode::Vertex) {
    if (!contains(sol.vertices, src) || !contains(sol.vertices, dst)) return 0;
    FlowNetwork net = inst.conn_mode == ConnMode::Vertex
                          ? FlowNetwork::vertex_disjoint(inst.graph, sol.vertices, src, dst)
                          : FlowNetwork::edge_disjoint_induced(inst.graph, sol.vertices, src, dst);
    return net.max_flow(limit);
  }
  if (inst.conn_mode == ConnMode::Vertex) {
    // Edge-cost solution, vertex-disjoint demand: restrict to vertices touched
    // by bought edges.
    std::vector<Vertex> touched{src, dst};
    for (int id : sol.edge_ids) {
      touched.push_back(inst.graph.edges[id].u);
      touched.push_back(inst.graph.edges[id].v);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    Graph sub;
    sub.n = inst.graph.n;
    sub.adj.resize(sub.n);
    for (int id : sol.edge_ids)
      sub.add_edge(inst.graph.edges[id].u, inst.graph.edges[id].v, Rat(0));
    FlowNetwork net = FlowNetwork::vertex_disjoint(sub, touched, src, dst);
    return net.max_flow(limit);
  }
  FlowNetwork net = FlowNetwork::edge_disjoint(inst.graph, sol.edge_ids, src, dst);
  return net.max_flow(limit);
}

FeasibilityReport check_feasible(const Instance& inst, const Solution& sol,
                                 bool want_certificates) {
  FeasibilityReport rep;
  rep.feasible = true;
  const auto& roots = inst.root_set();
  for (size_t gi = 0; gi < inst.groups.size(); gi++) {
    const Group& g = inst.groups[gi];
    GroupVerdict verdict;
    verdict.group = (int)gi;
    for (Vertex v : g.members) {
      int worst = g.demand;
      for (Vertex r : roots) {
        if (r == v) continue;  // demand at a root is trivially satisfied
        worst = std::min(worst, disjoint_path_count(inst, sol, r, v, g.demand));
        if (worst == 0) break;
      }
      if (worst > verdict.achieved) {
        verdict.achieved = worst;
        verdict.witness = v;
      }
      if (worst >= g.demand) {
        verdict.satisfied = true;
        verdict.witness = v;
        break;
      }
    }
    if (verdict.satisfied && want_certificates && verdict.witness >= 0) {
      Vertex r0 = roots[0];
      if (r0 != verdict.witness) {
        Solution tmp = sol;
        if (inst.cost_mode == CostMode::Edge && inst.conn_mode == ConnMode::Edge) {
          FlowNetwork net =
              FlowNetwork::edge_disjoint(inst.graph, sol.edge_ids, r0, verdict.witness);
          net.max_flow(g.demand);
          verdict.paths = net.decompose_paths();
        } else if (inst.cost_mode == CostMode::Vertex) {
          FlowNetwork net =
              inst.conn_mode == ConnMode::Vertex
                  ? FlowNetwork::vertex_disjoint(inst.graph, sol.vertices, r0, verdict.witness)
                  : FlowNetwork::edge_disjoint_induced(inst.graph, sol.vertices, r0,
                                                       verdict.witness);
          net.max_flow(g.demand);
          verdict.paths = net.decompose_paths();
        }
      }
    }
    rep.feasible = rep.feasible && verdict.satisfied;
    rep.groups.push_back(std::move(verdict));
  }
  return rep;
}

}  // namespace sndtw
