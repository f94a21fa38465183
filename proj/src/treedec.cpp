#include "sndtw/treedec.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sndtw {

int TreeDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, (int)b.size());
  return w - 1;
}

int TreeDecomposition::height() const {
  std::vector<int> depth(bags.size(), 0);
  int h = 0;
  std::vector<int> order{root};
  for (size_t i = 0; i < order.size(); i++) {
    int t = order[i];
    for (int c : children[t]) {
      depth[c] = depth[t] + 1;
      h = std::max(h, depth[c]);
      order.push_back(c);
    }
  }
  return h;
}

int TreeDecomposition::add_node(std::vector<Vertex> bag, int parent_node) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  int id = (int)bags.size();
  bags.push_back(std::move(bag));
  parent.push_back(parent_node);
  children.emplace_back();
  if (parent_node >= 0) children[parent_node].push_back(id);
  return id;
}

namespace {

// Decomposition from an elimination order via the usual fill-in simulation:
// bag of v is {v} plus its not-yet-eliminated neighbors, linked to the bag of
// the earliest-eliminated such neighbor.
TreeDecomposition from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  int n = g.n;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[order[i]] = i;

  std::vector<std::vector<Vertex>> bag_of(n);
  std::vector<int> parent_vertex(n, -1);
  std::vector<char> gone(n, 0);
  for (Vertex v : order) {
    std::vector<Vertex> nb;
    for (Vertex u = 0; u < n; u++)
      if (!gone[u] && u != v && adj[v][u]) nb.push_back(u);
    bag_of[v] = nb;
    bag_of[v].push_back(v);
    std::sort(bag_of[v].begin(), bag_of[v].end());
    for (size_t i = 0; i < nb.size(); i++)
      for (size_t j = i + 1; j < nb.size(); j++) adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
    if (!nb.empty())
      parent_vertex[v] = *std::min_element(
          nb.begin(), nb.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    gone[v] = 1;
  }

  TreeDecomposition td;
  std::vector<int> node_of(n, -1);
  // Create nodes in reverse elimination order so parents exist first.
  for (int i = n - 1; i >= 0; i--) {
    Vertex v = order[i];
    int p = parent_vertex[v] >= 0 ? node_of[parent_vertex[v]] : -1;
    node_of[v] = td.add_node(bag_of[v], p);
  }
  // Components other than the one eliminated last become stray roots; hang
  // them under the main root (vertex-disjoint, so properties are preserved).
  int main_root = node_of[order[n - 1]];
  for (int t = 0; t < td.node_count(); t++) {
    if (t != main_root && td.parent[t] < 0) {
      td.parent[t] = main_root;
      td.children[main_root].push_back(t);
    }
  }
  td.root = main_root;
  return td;
}

std::vector<Vertex> exact_elimination_order(const Graph& g) {
  int n = g.n;
  std::vector<uint32_t> nbr(n, 0);
  for (const Edge& e : g.edges) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  auto q_value = [&](uint32_t S, int v) {
    uint32_t reach = nbr[v];
    uint32_t seen = reach & S;
    uint32_t grow = seen;
    while (grow) {
      uint32_t next = 0;
      uint32_t m = grow;
      while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        next |= nbr[u];
      }
      reach |= next;
      uint32_t fresh = (reach & S) & ~seen;
      seen |= fresh;
      grow = fresh;
    }
    return std::popcount(reach & ~S & ~(1u << v));
  };

  uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<uint8_t> dp((size_t)full + 1, 0);
  std::vector<int8_t> choice((size_t)full + 1, -1);
  for (uint32_t S = 1; S <= full; S++) {
    int best = 255, best_v = -1;
    uint32_t m = S;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      uint32_t rest = S & ~(1u << v);
      int val = std::max((int)dp[rest], q_value(rest, v));
      if (val < best) { best = val; best_v = v; }
    }
    dp[S] = (uint8_t)best;
    choice[S] = (int8_t)best_v;
  }

  std::vector<Vertex> order(n);
  uint32_t S = full;
  for (int i = n - 1; i >= 0; i--) {
    int v = choice[S];
    order[i] = v;
    S &= ~(1u << v);
  }
  return order;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
  int n = g.n;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; step++) {
    int best = -1;
    long best_fill = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n; v++) {
      if (gone[v]) continue;
      std::vector<Vertex> nb;
      for (Vertex u = 0; u < n; u++)
        if (!gone[u] && u != v && adj[v][u]) nb.push_back(u);
      long fill = 0;
      for (size_t i = 0; i < nb.size(); i++)
        for (size_t j = i + 1; j < nb.size(); j++)
          if (!adj[nb[i]][nb[j]]) fill++;
      if (best < 0 || fill < best_fill ||
          (fill == best_fill && (int)nb.size() < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = (int)nb.size();
      }
    }
    std::vector<Vertex> nb;
    for (Vertex u = 0; u < n; u++)
      if (!gone[u] && u != best && adj[best][u]) nb.push_back(u);
    for (size_t i = 0; i < nb.size(); i++)
      for (size_t j = i + 1; j < nb.size(); j++) adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
    gone[best] = 1;
    order.push_back(best);
  }
  return order;
}

}  // namespace

TreeDecomposition decompose(const Graph& g, std::optional<int> width_hint,
                            DecomposeReport* report, int exact_limit) {
  if (g.n == 0) {
    TreeDecomposition td;
    td.add_node({}, -1);
    td.root = 0;
    if (report) *report = {true, 0};
    return td;
  }
  bool exact = g.n <= std::min(exact_limit, 25);
  std::vector<Vertex> order = exact ? exact_elimination_order(g) : min_fill_order(g);
  TreeDecomposition td = from_elimination_order(g, order);
  if (report) {
    report->exact = exact;
    report->width = td.width();
  }
  (void)width_hint;
  return td;
}

namespace {

std::vector<Vertex> set_union_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> set_intersect_sorted(const std::vector<Vertex>& a,
                                         const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Recursive centroid rebuild: logarithmic height at the price of unioning the
// pending interface into each centroid bag (at most two original bags wide).
struct Rebalancer {
  const TreeDecomposition& in;
  TreeDecomposition out;
  std::vector<std::vector<int>> nbrs;  // undirected tree adjacency

  explicit Rebalancer(const TreeDecomposition& td) : in(td) {
    nbrs.resize(td.node_count());
    for (int t = 0; t < td.node_count(); t++)
      if (td.parent[t] >= 0) {
        nbrs[t].push_back(td.parent[t]);
        nbrs[td.parent[t]].push_back(t);
      }
  }

  int centroid(const std::vector<int>& nodes) {
    std::vector<char> inset(in.node_count(), 0);
    for (int t : nodes) inset[t] = 1;
    std::vector<int> size(in.node_count(), 0), par(in.node_count(), -1);
    std::vector<int> order;
    order.push_back(nodes[0]);
    std::vector<char> seen(in.node_count(), 0);
    seen[nodes[0]] = 1;
    for (size_t i = 0; i < order.size(); i++) {
      int t = order[i];
      for (int u : nbrs[t])
        if (inset[u] && !seen[u]) {
          seen[u] = 1;
          par[u] = t;
          order.push_back(u);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      size[*it] += 1;
      if (par[*it] >= 0) size[par[*it]] += size[*it];
    }
    int m = (int)nodes.size(), best = -1, best_val = m + 1;
    for (int t : order) {
      int worst = m - size[t];
      for (int u : nbrs[t])
        if (inset[u] && u != par[t]) worst = std::max(worst, size[u]);
      if (worst < best_val) { best_val = worst; best = t; }
    }
    return best;
  }

  int build(const std::vector<int>& nodes, const std::vector<Vertex>& interface, int out_parent) {
    int c = centroid(nodes);
    std::vector<Vertex> root_bag = set_union_sorted(in.bags[c], interface);
    int out_root = out.add_node(root_bag, out_parent);

    std::vector<char> inset(in.node_count(), 0);
    for (int t : nodes) inset[t] = 1;
    inset[c] = 0;
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(in.node_count(), 0);
    for (int start : nbrs[c]) {
      if (!inset[start] || seen[start]) continue;
      std::vector<int> comp{start};
      seen[start] = 1;
      for (size_t i = 0; i < comp.size(); i++)
        for (int u : nbrs[comp[i]])
          if (inset[u] && !seen[u]) { seen[u] = 1; comp.push_back(u); }
      comps.push_back(std::move(comp));
    }

    int attach = out_root;
    for (size_t ci = 0; ci < comps.size(); ci++) {
      if (ci + 2 <= comps.size() && ci > 0) {
        // spine copy keeps arity at two
        attach = out.add_node(root_bag, attach);
      }
      std::vector<Vertex> occ;
      for (int t : comps[ci]) occ = set_union_sorted(occ, in.bags[t]);
      std::vector<Vertex> iface =
          set_intersect_sorted(set_union_sorted(in.bags[c], interface), occ);
      build(comps[ci], iface, attach);
    }
    return out_root;
  }
};

}  // namespace

namespace {

// A node with more than two children grows a chain of copies of itself, each
// copy taking over part of the child list.
TreeDecomposition binarize(const TreeDecomposition& td) {
  TreeDecomposition bin;
  std::vector<std::pair<int, int>> stack{{td.root, -1}};  // (old node, new parent)
  while (!stack.empty()) {
    auto [t, np] = stack.back();
    stack.pop_back();
    int nt = bin.add_node(td.bags[t], np);
    const auto& ch = td.children[t];
    if (ch.size() <= 2) {
      for (int c : ch) stack.push_back({c, nt});
    } else {
      int attach = nt;
      for (size_t i = 0; i < ch.size(); i++) {
        if (i + 1 < ch.size() && i > 0) attach = bin.add_node(td.bags[t], attach);
        stack.push_back({ch[i], attach});
      }
    }
  }
  bin.root = 0;
  return bin;
}

}  // namespace

TreeDecomposition normalize(const TreeDecomposition& td_in, const Graph& g, bool rebalance,
                            NormalizeReport* report) {
  TreeDecomposition bin = binarize(td_in);

  if (rebalance && bin.node_count() > 1) {
    Rebalancer rb(bin);
    std::vector<int> all(bin.node_count());
    std::iota(all.begin(), all.end(), 0);
    rb.build(all, {}, -1);
    rb.out.root = 0;
    bin = binarize(rb.out);
  }

  // Leaves become empty bags and every internal node gets exactly two
  // children, so E_t vanishes at leaves.
  int count = bin.node_count();
  for (int t = 0; t < count; t++) {
    size_t have = bin.children[t].size();
    if (have == 0 && bin.bags[t].empty()) continue;
    for (size_t i = have; i < 2; i++) bin.add_node({}, t);
  }

  if (report) {
    report->height = bin.height();
    report->max_bag = bin.width() + 1;
    report->rebalanced = rebalance;
  }
  (void)g;
  return bin;
}

TreeDecomposition add_universal_vertices(const TreeDecomposition& td,
                                         const std::vector<Vertex>& vs) {
  if (vs.empty()) return td;
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    bag = set_union_sorted(bag, [&] {
      std::vector<Vertex> s(vs);
      std::sort(s.begin(), s.end());
      return s;
    }());
  }
  return out;
}

BagAnnotations annotate(const TreeDecomposition& td, const Graph& g) {
  BagAnnotations ann;
  int nodes = td.node_count();
  std::vector<int> depth(nodes, 0);
  std::vector<int> bfs{td.root};
  for (size_t i = 0; i < bfs.size(); i++)
    for (int c : td.children[bfs[i]]) {
      depth[c] = depth[bfs[i]] + 1;
      bfs.push_back(c);
    }

  ann.topmost.assign(g.n, -1);
  for (int t : bfs)
    for (Vertex v : td.bags[t]) {
      if (ann.topmost[v] == -1) {
        ann.topmost[v] = t;
      } else if (depth[t] == depth[ann.topmost[v]] && t != ann.topmost[v]) {
        throw std::logic_error("topmost bag not unique; decomposition invalid");
      }
    }
  for (Vertex v = 0; v < g.n; v++)
    if (ann.topmost[v] == -1) throw std::logic_error("vertex missing from all bags");

  ann.bag_edges.assign(nodes, {});
  for (size_t id = 0; id < g.edges.size(); id++) {
    const Edge& e = g.edges[id];
    int best = -1;
    for (int t = 0; t < nodes; t++) {
      if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), e.u) &&
          std::binary_search(td.bags[t].begin(), td.bags[t].end(), e.v)) {
        if (best == -1 || depth[t] < depth[best]) best = t;
      }
    }
    if (best == -1) throw std::logic_error("edge not covered by any bag");
    ann.bag_edges[best].push_back((int)id);
  }

  ann.subtree_vertices.assign(nodes, {});
  ann.subtree_edges.assign(nodes, {});
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    int t = *it;
    std::vector<Vertex> verts = td.bags[t];
    std::vector<int> eids = ann.bag_edges[t];
    for (int c : td.children[t]) {
      verts = set_union_sorted(verts, ann.subtree_vertices[c]);
      std::vector<int> merged;
      std::set_union(eids.begin(), eids.end(), ann.subtree_edges[c].begin(),
                     ann.subtree_edges[c].end(), std::back_inserter(merged));
      eids = std::move(merged);
    }
    std::sort(eids.begin(), eids.end());
    ann.subtree_vertices[t] = std::move(verts);
    ann.subtree_edges[t] = std::move(eids);
  }
  return ann;
}

std::vector<std::string> validate(const TreeDecomposition& td, const Graph& g, bool normalized) {
  std::vector<std::string> bad;
  int nodes = td.node_count();
  if (nodes == 0) return {"empty decomposition"};

  std::vector<char> has_vertex(g.n, 0);
  for (const auto& bag : td.bags)
    for (Vertex v : bag) {
      if (v < 0 || v >= g.n) { bad.push_back("bag vertex out of range"); continue; }
      has_vertex[v] = 1;
    }
  for (Vertex v = 0; v < g.n; v++)
    if (!has_vertex[v]) bad.push_back("vertex " + std::to_string(v) + " in no bag");

  for (const Edge& e : g.edges) {
    bool covered = false;
    for (const auto& bag : td.bags)
      if (std::binary_search(bag.begin(), bag.end(), e.u) &&
          std::binary_search(bag.begin(), bag.end(), e.v)) {
        covered = true;
        break;
      }
    if (!covered)
      bad.push_back("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") in no bag");
  }

  // Occurrence connectivity per vertex.
  for (Vertex v = 0; v < g.n; v++) {
    std::vector<int> occ;
    for (int t = 0; t < nodes; t++)
      if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) occ.push_back(t);
    if (occ.size() <= 1) continue;
    std::vector<char> inocc(nodes, 0), seen(nodes, 0);
    for (int t : occ) inocc[t] = 1;
    std::vector<int> q{occ[0]};
    seen[occ[0]] = 1;
    size_t cnt = 1;
    for (size_t i = 0; i < q.size(); i++) {
      int t = q[i];
      std::vector<int> nb = td.children[t];
      if (td.parent[t] >= 0) nb.push_back(td.parent[t]);
      for (int u : nb)
        if (inocc[u] && !seen[u]) { seen[u] = 1; cnt++; q.push_back(u); }
    }
    if (cnt != occ.size())
      bad.push_back("occurrences of vertex " + std::to_string(v) + " not connected");
  }

  // Structural sanity.
  for (int t = 0; t < nodes; t++) {
    for (int c : td.children[t])
      if (td.parent[c] != t) bad.push_back("parent/child mismatch at node " + std::to_string(t));
    if (!std::is_sorted(td.bags[t].begin(), td.bags[t].end()))
      bad.push_back("bag " + std::to_string(t) + " not sorted");
  }
  if (td.parent[td.root] != -1) bad.push_back("root has a parent");

  if (normalized) {
    std::vector<int> depth(nodes, 0);
    std::vector<int> bfs{td.root};
    for (size_t i = 0; i < bfs.size(); i++)
      for (int c : td.children[bfs[i]]) {
        depth[c] = depth[bfs[i]] + 1;
        bfs.push_back(c);
      }
    for (int t = 0; t < nodes; t++) {
      size_t deg = td.children[t].size();
      if (deg != 0 && deg != 2)
        bad.push_back("node " + std::to_string(t) + " has " + std::to_string(deg) + " children");
      if (deg == 0) {
        // a leaf owning an edge would give it nonempty E_t
        for (size_t id = 0; id < g.edges.size(); id++) {
          const Edge& e = g.edges[id];
          if (!std::binary_search(td.bags[t].begin(), td.bags[t].end(), e.u) ||
              !std::binary_search(td.bags[t].begin(), td.bags[t].end(), e.v))
            continue;
          bool ancestor_has = false;
          for (int a = td.parent[t]; a >= 0; a = td.parent[a])
            if (std::binary_search(td.bags[a].begin(), td.bags[a].end(), e.u) &&
                std::binary_search(td.bags[a].begin(), td.bags[a].end(), e.v)) {
              ancestor_has = true;
              break;
            }
          if (!ancestor_has)
            bad.push_back("leaf " + std::to_string(t) + " owns an edge");
        }
      }
    }
  }
  return bad;
}

Graph parse_gr(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Graph g;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      int n, m;
      if (!(ls >> kind >> n >> m) || kind != "tw")
        throw ParseError(lineno, "expected 'p tw <n> <m>'");
      g.n = n;
      g.adj.resize(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "edge before header");
    int u = std::stoi(tok), v;
    if (!(ls >> v)) throw ParseError(lineno, "expected two endpoints");
    if (u < 1 || v < 1 || u > g.n || v > g.n) throw ParseError(lineno, "vertex out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (g.edge_id(u - 1, v - 1) < 0) g.add_edge(u - 1, v - 1, Rat(1));
  }
  return g;
}

TreeDecomposition parse_td(const std::string& text, const Graph& g) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, nbags = -1;
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> links;
  while (std::getline(in, line)) {
    lineno++;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      int wplus, n;
      if (!(ls >> kind >> nbags >> wplus >> n) || kind != "td")
        throw ParseError(lineno, "expected 's td <bags> <width+1> <n>'");
      if (n != g.n) throw ParseError(lineno, "vertex count mismatch");
      bags.assign(nbags, {});
      continue;
    }
    if (tok == "b") {
      int id, v;
      if (!(ls >> id) || id < 1 || id > nbags) throw ParseError(lineno, "bad bag id");
      while (ls >> v) {
        if (v < 1 || v > g.n) throw ParseError(lineno, "bag vertex out of range");
        bags[id - 1].push_back(v - 1);
      }
      std::sort(bags[id - 1].begin(), bags[id - 1].end());
      continue;
    }
    int a = std::stoi(tok), b;
    if (!(ls >> b)) throw ParseError(lineno, "expected bag edge");
    links.push_back({a - 1, b - 1});
  }
  if (nbags < 1) throw ParseError(lineno, "missing 's td' header");

  TreeDecomposition td;
  td.bags = bags;
  td.parent.assign(nbags, -1);
  td.children.assign(nbags, {});
  std::vector<std::vector<int>> nb(nbags);
  for (auto [a, b] : links) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  std::vector<char> seen(nbags, 0);
  std::vector<int> q{0};
  seen[0] = 1;
  td.root = 0;
  for (size_t i = 0; i < q.size(); i++) {
    int t = q[i];
    for (int u : nb[t])
      if (!seen[u]) {
        seen[u] = 1;
        td.parent[u] = t;
        td.children[t].push_back(u);
        q.push_back(u);
      }
  }
  for (int t = 0; t < nbags; t++)
    if (!seen[t]) throw ParseError(lineno, "decomposition tree not connected");
  return td;
}

std::string write_td(const TreeDecomposition& td, const Graph& g) {
  std::ostringstream out;
  out << "s td " << td.node_count() << " " << td.width() + 1 << " " << g.n << "\n";
  for (int t = 0; t < td.node_count(); t++) {
    out << "b " << t + 1;
    for (Vertex v : td.bags[t]) out << " " << v + 1;
    out << "\n";
  }
  for (int t = 0; t < td.node_count(); t++)
    if (td.parent[t] >= 0) out << td.parent[t] + 1 << " " << t + 1 << "\n";
  return out.str();
}

}  // namespace sndtw
