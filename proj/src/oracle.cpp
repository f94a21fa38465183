#include "sndtw/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sndtw {

BruteForceResult brute_force_optimum(const Instance& inst, int budget_bits) {
  BruteForceResult res;
  std::vector<int> candidates;  // positive-cost element ids
  std::vector<int> always;      // zero-cost element ids
  bool edge_mode = inst.cost_mode == CostMode::Edge;
  if (edge_mode) {
    for (size_t id = 0; id < inst.graph.edges.size(); id++)
      (inst.graph.edge_cost[id].is_zero() ? always : candidates).push_back((int)id);
  } else {
    for (Vertex v = 0; v < inst.graph.n; v++)
      (inst.effective_vertex_cost(v).is_zero() ? always : candidates).push_back(v);
  }
  if ((int)candidates.size() > budget_bits) {
    res.budget_exceeded = true;
    return res;
  }

  uint64_t limit = 1ull << candidates.size();
  for (uint64_t mask = 0; mask < limit; mask++) {
    Rat cost(0);
    bool over = false;
    for (size_t i = 0; i < candidates.size() && !over; i++)
      if (mask >> i & 1) {
        cost = cost + (edge_mode ? inst.graph.edge_cost[candidates[i]]
                                 : inst.effective_vertex_cost(candidates[i]));
        if (!res.cost.is_infinite() && !(cost < res.cost.value())) over = true;
      }
    if (over) continue;
    if (!res.cost.is_infinite() && !(cost < res.cost.value())) continue;

    std::vector<int> members = always;
    for (size_t i = 0; i < candidates.size(); i++)
      if (mask >> i & 1) members.push_back(candidates[i]);
    Solution sol = edge_mode ? Solution::of_edges(members) : Solution::of_vertices(members);
    if (check_feasible(inst, sol).feasible) {
      res.feasible = true;
      res.cost = Cost(cost);
      sol.cost = res.cost;
      res.solution = std::move(sol);
    }
  }
  return res;
}

CSPInstance parse_csp(const std::string& text) {
  CSPInstance csp;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  long long want_h = 0;
  while (std::getline(in, line)) {
    lineno++;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "#") continue;
    if (tok == "p") {
      std::string kind;
      if (!(ls >> kind >> csp.num_vars >> csp.domain >> want_h >> csp.arity) || kind != "csp")
        throw ParseError(lineno, "expected 'p csp <n> <N> <h> <k>'");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "constraint before header");
    if (tok != "c") throw ParseError(lineno, "unknown line type '" + tok + "'");
    CSPConstraint con;
    std::string t;
    while (ls >> t && t != ":") {
      int x = std::stoi(t);
      if (x < 0 || x >= csp.num_vars) throw ParseError(lineno, "variable out of range");
      con.vars.push_back(x);
    }
    if ((int)con.vars.size() != csp.arity)
      throw ParseError(lineno, "constraint arity mismatch");
    {
      auto sorted = con.vars;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(lineno, "constraint repeats a variable");
    }
    std::vector<int> tuple;
    while (ls >> t) {
      if (t == ";") {
        if (!tuple.empty()) {
          if ((int)tuple.size() != csp.arity) throw ParseError(lineno, "tuple arity mismatch");
          con.accepting.push_back(tuple);
          tuple.clear();
        }
        continue;
      }
      int a = std::stoi(t);
      if (a < 0 || a >= csp.domain) throw ParseError(lineno, "value out of range");
      tuple.push_back(a);
    }
    if (!tuple.empty()) {
      if ((int)tuple.size() != csp.arity) throw ParseError(lineno, "tuple arity mismatch");
      con.accepting.push_back(tuple);
    }
    csp.constraints.push_back(std::move(con));
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if ((long long)csp.constraints.size() != want_h)
    throw ParseError(lineno, "declared constraint count mismatch");
  return csp;
}

std::string serialize_csp(const CSPInstance& csp) {
  std::ostringstream out;
  out << "p csp " << csp.num_vars << " " << csp.domain << " " << csp.constraints.size() << " "
      << csp.arity << "\n";
  for (const auto& con : csp.constraints) {
    out << "c";
    for (int x : con.vars) out << " " << x;
    out << " :";
    for (size_t a = 0; a < con.accepting.size(); a++) {
      if (a) out << " ;";
      for (int val : con.accepting[a]) out << " " << val;
    }
    out << "\n";
  }
  return out.str();
}

Instance csp_to_rgsndp(const CSPInstance& csp) {
  for (const auto& con : csp.constraints)
    if (con.accepting.empty())
      throw std::invalid_argument("constraint with empty accepting set yields an empty group");

  Instance inst;
  inst.cost_mode = CostMode::Vertex;
  inst.conn_mode = ConnMode::Edge;
  inst.max_demand = csp.arity;
  inst.root = 0;

  int n_labels = csp.num_vars * csp.domain;
  auto label_vertex = [&](int var, int val) { return 1 + var * csp.domain + val; };
  int next = 1 + n_labels;
  std::vector<std::vector<Vertex>> config_vertices(csp.constraints.size());
  for (size_t j = 0; j < csp.constraints.size(); j++)
    for (size_t a = 0; a < csp.constraints[j].accepting.size(); a++)
      config_vertices[j].push_back(next++);

  inst.graph.n = next;
  inst.graph.adj.resize(next);
  inst.graph.vertex_cost.assign(next, Rat(0));
  for (int i = 0; i < csp.num_vars; i++)
    for (int a = 0; a < csp.domain; a++) inst.graph.vertex_cost[label_vertex(i, a)] = Rat(1);

  for (int i = 0; i < csp.num_vars; i++)
    for (int a = 0; a < csp.domain; a++) inst.graph.add_edge(0, label_vertex(i, a), Rat(0));
  for (size_t j = 0; j < csp.constraints.size(); j++) {
    const auto& con = csp.constraints[j];
    for (size_t a = 0; a < con.accepting.size(); a++) {
      Vertex cfg = config_vertices[j][a];
      for (int pos = 0; pos < csp.arity; pos++)
        inst.graph.add_edge(label_vertex(con.vars[pos], con.accepting[a][pos]), cfg, Rat(0));
    }
    Group grp;
    grp.members = config_vertices[j];
    grp.demand = csp.arity;
    inst.groups.push_back(std::move(grp));
  }
  return inst;
}

MinCSPResult min_csp_brute_force(const CSPInstance& csp) {
  int n = csp.num_vars, dom = csp.domain;
  uint64_t per = 1ull << dom;
  MinCSPResult res;
  res.satisfiable = false;
  int best = n * dom + 1;

  std::vector<uint32_t> assign(n, 0);
  // enumerate label-set assignments as a mixed-radix counter
  while (true) {
    int total = 0;
    for (int i = 0; i < n; i++) total += __builtin_popcount(assign[i]);
    if (total < best) {
      bool ok = true;
      for (const auto& con : csp.constraints) {
        bool sat = false;
        for (const auto& tup : con.accepting) {
          bool all = true;
          for (int pos = 0; pos < csp.arity && all; pos++)
            all = (assign[con.vars[pos]] >> tup[pos]) & 1;
          if (all) { sat = true; break; }
        }
        if (!sat) { ok = false; break; }
      }
      if (ok) {
        res.satisfiable = true;
        best = total;
      }
    }
    int pos = 0;
    while (pos < n && assign[pos] + 1 == per) assign[pos++] = 0;
    if (pos == n) break;
    assign[pos]++;
  }
  res.total_labels = res.satisfiable ? best : 0;
  return res;
}

}  // namespace sndtw
