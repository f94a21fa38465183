#include "sndtw/graph.hpp"

#include <algorithm>
#include <sstream>

namespace sndtw {

Rat Rat::parse(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    long long n = std::stoll(tok.substr(0, slash));
    long long d = std::stoll(tok.substr(slash + 1));
    return Rat(n, d);
  }
  auto dot = tok.find('.');
  if (dot != std::string::npos) {
    std::string whole = tok.substr(0, dot), frac = tok.substr(dot + 1);
    if (frac.empty()) return Rat(std::stoll(whole));
    long long d = 1;
    for (size_t i = 0; i < frac.size(); i++) d *= 10;
    long long w = std::stoll(whole.empty() || whole == "-" ? whole + "0" : whole);
    long long f = std::stoll(frac);
    bool neg = !whole.empty() && whole[0] == '-';
    long long n = w * d + (neg ? -f : f);
    return Rat(n, d);
  }
  return Rat(std::stoll(tok));
}

void Graph::add_edge(Vertex u, Vertex v, const Rat& cost) {
  if (u > v) std::swap(u, v);
  int id = (int)edges.size();
  edges.push_back({u, v});
  edge_cost.push_back(cost);
  if ((int)adj.size() < n) adj.resize(n);
  adj[u].push_back({v, id});
  adj[v].push_back({u, id});
}

int Graph::edge_id(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n || adj.empty()) return -1;
  for (auto [w, id] : adj[u])
    if (w == v) return id;
  return -1;
}

bool Graph::connected() const {
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    if ((int)adj.size() <= x) continue;
    for (auto [y, id] : adj[x])
      if (!seen[y]) { seen[y] = 1; cnt++; stack.push_back(y); }
  }
  return cnt == n;
}

const std::vector<Vertex>& Instance::root_set() const {
  static thread_local std::vector<Vertex> single;
  if (!roots.empty()) return roots;
  single = {root};
  return single;
}

bool Instance::is_root(Vertex v) const {
  if (roots.empty()) return v == root;
  return std::find(roots.begin(), roots.end(), v) != roots.end();
}

Rat Instance::effective_vertex_cost(Vertex v) const {
  if (is_root(v)) return Rat(0);
  if (!graph.has_vertex_costs()) return Rat(0);
  return graph.vertex_cost[v];
}

Solution Solution::of_edges(std::vector<int> ids) {
  Solution s;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  s.edge_ids = std::move(ids);
  return s;
}

Solution Solution::of_vertices(std::vector<Vertex> vs) {
  Solution s;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  s.vertices = std::move(vs);
  return s;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

long long parse_int(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed integer '" + tok + "'");
  }
}

Rat parse_cost(const std::string& tok, int line) {
  try {
    Rat r = Rat::parse(tok);
    if (r.is_negative()) throw ParseError(line, "negative cost '" + tok + "'");
    return r;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed cost '" + tok + "'");
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Instance inst;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false, have_root = false;
  long long want_m = 0, want_h = 0;
  int seen_m = 0;
  std::vector<char> have_vcost;

  while (std::getline(in, line)) {
    lineno++;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& kind = toks[0];

    if (kind == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (toks.size() != 8 || toks[1] != "rgsndp")
        throw ParseError(lineno, "expected 'p rgsndp <n> <m> <h> <k> <cost_mode> <conn_mode>'");
      long long n = parse_int(toks[2], lineno);
      want_m = parse_int(toks[3], lineno);
      want_h = parse_int(toks[4], lineno);
      long long k = parse_int(toks[5], lineno);
      if (n < 0 || want_m < 0 || want_h < 0 || k < 1)
        throw ParseError(lineno, "header values out of range");
      if (toks[6] == "edge") inst.cost_mode = CostMode::Edge;
      else if (toks[6] == "vertex") inst.cost_mode = CostMode::Vertex;
      else throw ParseError(lineno, "cost mode must be 'edge' or 'vertex'");
      if (toks[7] == "edge") inst.conn_mode = ConnMode::Edge;
      else if (toks[7] == "vertex") inst.conn_mode = ConnMode::Vertex;
      else throw ParseError(lineno, "connectivity mode must be 'edge' or 'vertex'");
      inst.graph.n = (int)n;
      inst.graph.adj.resize(n);
      inst.max_demand = (int)k;
      if (inst.cost_mode == CostMode::Vertex)
        inst.graph.vertex_cost.assign(n, Rat(0));
      have_vcost.assign(n, 0);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "line before header");

    auto check_vertex = [&](long long v) -> Vertex {
      if (v < 0 || v >= inst.graph.n)
        throw ParseError(lineno, "unknown vertex id " + std::to_string(v));
      return (Vertex)v;
    };

    if (kind == "e") {
      if (toks.size() != 4) throw ParseError(lineno, "expected 'e <u> <v> <cost>'");
      Vertex u = check_vertex(parse_int(toks[1], lineno));
      Vertex v = check_vertex(parse_int(toks[2], lineno));
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      if (inst.graph.edge_id(u, v) >= 0)
        throw ParseError(lineno, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      Rat c = parse_cost(toks[3], lineno);
      if (inst.cost_mode == CostMode::Vertex && !c.is_zero())
        throw ParseError(lineno, "edge cost must be 0 in vertex-cost mode");
      inst.graph.add_edge(u, v, c);
      seen_m++;
    } else if (kind == "w") {
      if (toks.size() != 3) throw ParseError(lineno, "expected 'w <v> <cost>'");
      Vertex v = check_vertex(parse_int(toks[1], lineno));
      if (inst.graph.vertex_cost.empty()) inst.graph.vertex_cost.assign(inst.graph.n, Rat(0));
      if (have_vcost[v]) throw ParseError(lineno, "duplicate vertex cost for " + std::to_string(v));
      inst.graph.vertex_cost[v] = parse_cost(toks[2], lineno);
      have_vcost[v] = 1;
    } else if (kind == "r") {
      if (have_root) throw ParseError(lineno, "duplicate root line");
      if (toks.size() != 2) throw ParseError(lineno, "expected 'r <root>'");
      inst.root = check_vertex(parse_int(toks[1], lineno));
      have_root = true;
    } else if (kind == "R") {
      if (have_root) throw ParseError(lineno, "duplicate root line");
      if (toks.size() < 2) throw ParseError(lineno, "expected 'R <v1> <v2> ...'");
      for (size_t i = 1; i < toks.size(); i++)
        inst.roots.push_back(check_vertex(parse_int(toks[i], lineno)));
      std::sort(inst.roots.begin(), inst.roots.end());
      inst.roots.erase(std::unique(inst.roots.begin(), inst.roots.end()), inst.roots.end());
      inst.root = inst.roots[0];
      have_root = true;
    } else if (kind == "g") {
      if (toks.size() < 3) throw ParseError(lineno, "expected 'g <k_i> <v1> ...'");
      Group g;
      long long ki = parse_int(toks[1], lineno);
      if (ki < 1 || ki > inst.max_demand)
        throw ParseError(lineno, "demand " + std::to_string(ki) + " outside [1," +
                                     std::to_string(inst.max_demand) + "]");
      g.demand = (int)ki;
      for (size_t i = 2; i < toks.size(); i++)
        g.members.push_back(check_vertex(parse_int(toks[i], lineno)));
      std::sort(g.members.begin(), g.members.end());
      g.members.erase(std::unique(g.members.begin(), g.members.end()), g.members.end());
      inst.groups.push_back(std::move(g));
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
  }

  if (!have_header) throw ParseError(lineno, "missing header");
  if (!have_root) throw ParseError(lineno, "missing root line");
  if (seen_m != want_m)
    throw ParseError(lineno, "declared " + std::to_string(want_m) + " edges, found " +
                                 std::to_string(seen_m));
  if ((long long)inst.groups.size() != want_h)
    throw ParseError(lineno, "declared " + std::to_string(want_h) + " groups, found " +
                                 std::to_string(inst.groups.size()));
  if (inst.multi_root()) {
    for (const auto& g : inst.groups)
      if (g.members.size() != 1)
        throw ParseError(lineno, "multi-root mode requires singleton groups");
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p rgsndp " << inst.graph.n << " " << inst.graph.edges.size() << " "
      << inst.groups.size() << " " << inst.max_demand << " "
      << (inst.cost_mode == CostMode::Edge ? "edge" : "vertex") << " "
      << (inst.conn_mode == ConnMode::Edge ? "edge" : "vertex") << "\n";
  for (size_t i = 0; i < inst.graph.edges.size(); i++)
    out << "e " << inst.graph.edges[i].u << " " << inst.graph.edges[i].v << " "
        << inst.graph.edge_cost[i].str() << "\n";
  if (inst.graph.has_vertex_costs())
    for (Vertex v = 0; v < inst.graph.n; v++)
      if (!inst.graph.vertex_cost[v].is_zero())
        out << "w " << v << " " << inst.graph.vertex_cost[v].str() << "\n";
  if (inst.multi_root()) {
    out << "R";
    for (Vertex r : inst.roots) out << " " << r;
    out << "\n";
  } else {
    out << "r " << inst.root << "\n";
  }
  for (const auto& g : inst.groups) {
    out << "g " << g.demand;
    for (Vertex v : g.members) out << " " << v;
    out << "\n";
  }
  return out.str();
}

bool instances_equal(const Instance& a, const Instance& b) {
  if (a.graph.n != b.graph.n || a.root != b.root || a.roots != b.roots ||
      a.cost_mode != b.cost_mode || a.conn_mode != b.conn_mode ||
      a.max_demand != b.max_demand)
    return false;
  if (a.graph.edges.size() != b.graph.edges.size()) return false;
  for (size_t i = 0; i < a.graph.edges.size(); i++) {
    int id = b.graph.edge_id(a.graph.edges[i].u, a.graph.edges[i].v);
    if (id < 0 || !(b.graph.edge_cost[id] == a.graph.edge_cost[i])) return false;
  }
  for (Vertex v = 0; v < a.graph.n; v++) {
    Rat ca = a.graph.has_vertex_costs() ? a.graph.vertex_cost[v] : Rat(0);
    Rat cb = b.graph.has_vertex_costs() ? b.graph.vertex_cost[v] : Rat(0);
    if (!(ca == cb)) return false;
  }
  if (a.groups.size() != b.groups.size()) return false;
  for (size_t i = 0; i < a.groups.size(); i++)
    if (a.groups[i].members != b.groups[i].members || a.groups[i].demand != b.groups[i].demand)
      return false;
  return true;
}

Cost solution_cost(const Instance& inst, const Solution& sol) {
  Rat total(0);
  if (inst.cost_mode == CostMode::Edge) {
    for (int id : sol.edge_ids) {
      if (id < 0 || id >= (int)inst.graph.edges.size())
        throw std::out_of_range("solution edge not in graph");
      total = total + inst.graph.edge_cost[id];
    }
  } else {
    for (Vertex v : sol.vertices) {
      if (v < 0 || v >= inst.graph.n)
        throw std::out_of_range("solution vertex not in graph");
      total = total + inst.effective_vertex_cost(v);
    }
  }
  return Cost(total);
}

}  // namespace sndtw
