#include "sndtw/connsets.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sndtw {

ConnectionSet ConnectionSet::over(std::vector<Vertex> ground) {
  ConnectionSet cs;
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  cs.ground = std::move(ground);
  return cs;
}

void ConnectionSet::add(Vertex u, Vertex v) {
  if (u == v) return;
  if (u > v) std::swap(u, v);
  pairs.push_back({u, v});
}

bool ConnectionSet::contains(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(u, v));
}

void ConnectionSet::canonicalize() {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::string ConnectionSet::str() const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < pairs.size(); i++) {
    if (i) out << ",";
    out << "(" << pairs[i].first << "," << pairs[i].second << ")";
  }
  out << "}";
  return out.str();
}

namespace {

// Union-find keyed by vertex id through a local map.
struct VertexDSU {
  std::map<Vertex, Vertex> parent;
  Vertex find(Vertex x) {
    auto it = parent.find(x);
    if (it == parent.end()) { parent[x] = x; return x; }
    if (it->second == x) return x;
    return it->second = find(it->second);
  }
  void unite(Vertex a, Vertex b) { parent[find(a)] = find(b); }
};

}  // namespace

ConnectionSet tc(const ConnectionSet& cs) {
  VertexDSU dsu;
  for (auto [u, v] : cs.pairs) dsu.unite(u, v);
  std::map<Vertex, std::vector<Vertex>> comps;
  std::vector<Vertex> touched;
  for (auto [u, v] : cs.pairs) { touched.push_back(u); touched.push_back(v); }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (Vertex v : touched) comps[dsu.find(v)].push_back(v);

  ConnectionSet out = ConnectionSet::over(cs.ground);
  for (auto& [rep, members] : comps)
    for (size_t i = 0; i < members.size(); i++)
      for (size_t j = i + 1; j < members.size(); j++) out.add(members[i], members[j]);
  out.canonicalize();
  return out;
}

ConnectionSet tc_star(const std::vector<Vertex>& z, const ConnectionSet& edge_pairs) {
  // Per-pair BFS where only vertices of z may appear as internal nodes.
  std::vector<Vertex> nodes;
  for (auto [u, v] : edge_pairs.pairs) { nodes.push_back(u); nodes.push_back(v); }
  for (Vertex v : z) nodes.push_back(v);
  for (Vertex v : edge_pairs.ground) nodes.push_back(v);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto idx = [&](Vertex v) {
    return (int)(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  int m = (int)nodes.size();
  std::vector<std::vector<int>> adj(m);
  for (auto [u, v] : edge_pairs.pairs) {
    adj[idx(u)].push_back(idx(v));
    adj[idx(v)].push_back(idx(u));
  }
  std::vector<char> in_z(m, 0);
  for (Vertex v : z)
    if (std::binary_search(nodes.begin(), nodes.end(), v)) in_z[idx(v)] = 1;

  ConnectionSet out = ConnectionSet::over(nodes);
  for (int ui = 0; ui < m; ui++) {
    std::vector<char> seen(m, 0);
    std::vector<int> q;
    seen[ui] = 1;
    for (int x : adj[ui])
      if (!seen[x]) { seen[x] = 1; q.push_back(x); }
    // expand only through z-vertices; anything reached is an endpoint candidate
    for (size_t h = 0; h < q.size(); h++) {
      int x = q[h];
      if (!in_z[x]) continue;
      for (int y : adj[x])
        if (!seen[y]) { seen[y] = 1; q.push_back(y); }
    }
    for (int vi = ui + 1; vi < m; vi++)
      if (seen[vi]) out.add(nodes[ui], nodes[vi]);
  }
  out.canonicalize();
  return out;
}

ConnectionSet project(const ConnectionSet& cs, const std::vector<Vertex>& s_prime) {
  std::vector<Vertex> sp(s_prime);
  std::sort(sp.begin(), sp.end());
  sp.erase(std::unique(sp.begin(), sp.end()), sp.end());
  ConnectionSet out = ConnectionSet::over(sp);
  for (auto [u, v] : cs.pairs)
    if (std::binary_search(sp.begin(), sp.end(), u) &&
        std::binary_search(sp.begin(), sp.end(), v))
      out.add(u, v);
  out.canonicalize();
  return out;
}

ConnectionSet union_cs(const ConnectionSet& a, const ConnectionSet& b) {
  std::vector<Vertex> ground(a.ground);
  ground.insert(ground.end(), b.ground.begin(), b.ground.end());
  ConnectionSet out = ConnectionSet::over(std::move(ground));
  out.pairs = a.pairs;
  out.pairs.insert(out.pairs.end(), b.pairs.begin(), b.pairs.end());
  out.canonicalize();
  return out;
}

ConnectionSet pairs_of_edges(const Graph& g, const std::vector<int>& edge_ids) {
  std::vector<Vertex> ground;
  for (int id : edge_ids) {
    ground.push_back(g.edges[id].u);
    ground.push_back(g.edges[id].v);
  }
  ConnectionSet out = ConnectionSet::over(std::move(ground));
  for (int id : edge_ids) out.add(g.edges[id].u, g.edges[id].v);
  out.canonicalize();
  return out;
}

ConnectionSet local_step_gamma(const ConnectionSet& gamma_left, const ConnectionSet& gamma_right,
                               const ConnectionSet& y_edges, const std::vector<Vertex>& bag) {
  return project(tc(union_cs(union_cs(gamma_left, gamma_right), y_edges)), bag);
}

ConnectionSet local_step_delta(const ConnectionSet& delta_parent, const ConnectionSet& gamma_self,
                               const std::vector<Vertex>& bag) {
  return project(tc(union_cs(delta_parent, gamma_self)), bag);
}

VertexTriple vertex_local_step(const std::vector<Vertex>& z_parent, const std::vector<Vertex>& w_t,
                               const std::vector<Vertex>& bag, const ConnectionSet& gamma_left,
                               const ConnectionSet& gamma_right, const ConnectionSet& delta_parent,
                               const ConnectionSet& y_edges, bool is_root, bool is_leaf) {
  VertexTriple out;
  if (is_root) {
    out.z = w_t;
  } else {
    std::vector<Vertex> zu(z_parent);
    zu.insert(zu.end(), w_t.begin(), w_t.end());
    std::sort(zu.begin(), zu.end());
    zu.erase(std::unique(zu.begin(), zu.end()), zu.end());
    for (Vertex v : zu)
      if (std::binary_search(bag.begin(), bag.end(), v)) out.z.push_back(v);
  }
  std::sort(out.z.begin(), out.z.end());

  if (is_leaf) {
    out.gamma = ConnectionSet::over(bag);
  } else {
    out.gamma =
        project(tc_star(out.z, union_cs(union_cs(gamma_left, gamma_right), y_edges)), bag);
  }
  if (is_root) {
    out.delta = out.gamma;
  } else {
    out.delta = project(tc_star(out.z, union_cs(delta_parent, out.gamma)), bag);
  }
  return out;
}

namespace {

struct TreeOrder {
  std::vector<int> bfs;
  std::vector<char> is_leaf;
  TreeOrder(const TreeDecomposition& td) {
    bfs.push_back(td.root);
    for (size_t i = 0; i < bfs.size(); i++)
      for (int c : td.children[bfs[i]]) bfs.push_back(c);
    is_leaf.resize(td.node_count());
    for (int t = 0; t < td.node_count(); t++) is_leaf[t] = td.children[t].empty();
  }
};

ConnectionSet cs_of_y(const Graph& g, const std::vector<int>& ids, const std::vector<Vertex>& bag) {
  ConnectionSet y = pairs_of_edges(g, ids);
  y.ground = bag;
  return y;
}

}  // namespace

CheckResult check_local_edge(const TreeDecomposition& td, const BagAnnotations& ann,
                             const Graph& g, const std::vector<std::vector<int>>& y,
                             const std::vector<EdgePairAssignment>& pairs) {
  TreeOrder ord(td);
  for (int t : ord.bfs) {
    const auto& bag = td.bags[t];
    if (ord.is_leaf[t]) {
      if (!pairs[t].gamma.pairs.empty()) return {false, t, "leaf gamma nonempty"};
    } else {
      const auto& ch = td.children[t];
      ConnectionSet right = ch.size() > 1 ? pairs[ch[1]].gamma : ConnectionSet::over({});
      ConnectionSet want =
          local_step_gamma(pairs[ch[0]].gamma, right, cs_of_y(g, y[t], bag), bag);
      if (!(want.pairs == pairs[t].gamma.pairs)) return {false, t, "gamma recurrence"};
    }
    if (t == td.root) {
      if (!(pairs[t].delta.pairs == pairs[t].gamma.pairs)) return {false, t, "root delta != gamma"};
    } else {
      ConnectionSet want = local_step_delta(pairs[td.parent[t]].delta, pairs[t].gamma, bag);
      if (!(want.pairs == pairs[t].delta.pairs)) return {false, t, "delta recurrence"};
    }
  }
  return {};
}

namespace {

CheckResult check_local_triples(const TreeDecomposition& td, const Graph& g,
                                const std::vector<std::vector<int>>& y,
                                const std::vector<std::vector<Vertex>>& w,
                                const std::vector<VertexTriple>& triples) {
  TreeOrder ord(td);
  for (int t : ord.bfs) {
    const auto& bag = td.bags[t];
    bool root = t == td.root;
    // Z recurrence
    std::vector<Vertex> want_z;
    if (root) {
      want_z = w[t];
      std::sort(want_z.begin(), want_z.end());
    } else {
      std::vector<Vertex> zu(triples[td.parent[t]].z);
      zu.insert(zu.end(), w[t].begin(), w[t].end());
      std::sort(zu.begin(), zu.end());
      zu.erase(std::unique(zu.begin(), zu.end()), zu.end());
      for (Vertex v : zu)
        if (std::binary_search(bag.begin(), bag.end(), v)) want_z.push_back(v);
    }
    if (want_z != triples[t].z) return {false, t, "z recurrence"};

    if (ord.is_leaf[t]) {
      if (!triples[t].gamma.pairs.empty()) return {false, t, "leaf gamma nonempty"};
    } else {
      const auto& ch = td.children[t];
      ConnectionSet right = ch.size() > 1 ? triples[ch[1]].gamma : ConnectionSet::over({});
      ConnectionSet want = project(
          tc_star(triples[t].z,
                  union_cs(union_cs(triples[ch[0]].gamma, right), cs_of_y(g, y[t], bag))),
          bag);
      if (!(want.pairs == triples[t].gamma.pairs)) return {false, t, "gamma recurrence"};
    }
    if (root) {
      if (!(triples[t].delta.pairs == triples[t].gamma.pairs))
        return {false, t, "root delta != gamma"};
    } else {
      ConnectionSet want = project(
          tc_star(triples[t].z, union_cs(triples[td.parent[t]].delta, triples[t].gamma)), bag);
      if (!(want.pairs == triples[t].delta.pairs)) return {false, t, "delta recurrence"};
    }
  }
  return {};
}

}  // namespace

CheckResult check_local_mixed(const TreeDecomposition& td, const BagAnnotations& ann,
                              const Graph& g, const std::vector<std::vector<int>>& y,
                              const std::vector<std::vector<Vertex>>& w,
                              const std::vector<VertexTriple>& triples) {
  (void)ann;
  return check_local_triples(td, g, y, w, triples);
}

CheckResult check_local_vertex(const TreeDecomposition& td, const BagAnnotations& ann,
                               const Graph& g, const std::vector<std::vector<Vertex>>& w,
                               const std::vector<VertexTriple>& triples) {
  std::vector<std::vector<int>> y(td.node_count());
  for (int t = 0; t < td.node_count(); t++) y[t] = ann.bag_edges[t];
  return check_local_triples(td, g, y, w, triples);
}

std::vector<EdgePairAssignment> global_edge_pairs(const TreeDecomposition& td,
                                                  const BagAnnotations& ann, const Graph& g,
                                                  const std::vector<std::vector<int>>& y) {
  std::vector<int> all_y;
  for (const auto& ids : y) all_y.insert(all_y.end(), ids.begin(), ids.end());
  std::sort(all_y.begin(), all_y.end());

  std::vector<EdgePairAssignment> out(td.node_count());
  for (int t = 0; t < td.node_count(); t++) {
    std::vector<int> sub;
    std::set_intersection(all_y.begin(), all_y.end(), ann.subtree_edges[t].begin(),
                          ann.subtree_edges[t].end(), std::back_inserter(sub));
    out[t].gamma = project(tc(pairs_of_edges(g, sub)), td.bags[t]);
    out[t].delta = project(tc(pairs_of_edges(g, all_y)), td.bags[t]);
  }
  return out;
}

std::vector<VertexTriple> global_mixed_triples(const TreeDecomposition& td,
                                               const BagAnnotations& ann, const Graph& g,
                                               const std::vector<std::vector<int>>& y,
                                               const std::vector<std::vector<Vertex>>& w) {
  std::vector<int> all_y;
  for (const auto& ids : y) all_y.insert(all_y.end(), ids.begin(), ids.end());
  std::sort(all_y.begin(), all_y.end());
  std::vector<Vertex> all_w;
  for (const auto& vs : w) all_w.insert(all_w.end(), vs.begin(), vs.end());
  std::sort(all_w.begin(), all_w.end());
  all_w.erase(std::unique(all_w.begin(), all_w.end()), all_w.end());

  std::vector<VertexTriple> out(td.node_count());
  for (int t = 0; t < td.node_count(); t++) {
    const auto& bag = td.bags[t];
    for (Vertex v : all_w)
      if (std::binary_search(bag.begin(), bag.end(), v)) out[t].z.push_back(v);
    std::vector<int> sub;
    std::set_intersection(all_y.begin(), all_y.end(), ann.subtree_edges[t].begin(),
                          ann.subtree_edges[t].end(), std::back_inserter(sub));
    out[t].gamma = project(tc_star(all_w, pairs_of_edges(g, sub)), bag);
    out[t].delta = project(tc_star(all_w, pairs_of_edges(g, all_y)), bag);
  }
  return out;
}

std::vector<VertexTriple> global_vertex_triples(const TreeDecomposition& td,
                                                const BagAnnotations& ann, const Graph& g,
                                                const std::vector<std::vector<Vertex>>& w) {
  std::vector<std::vector<int>> y(td.node_count());
  for (int t = 0; t < td.node_count(); t++) y[t] = ann.bag_edges[t];
  return global_mixed_triples(td, ann, g, y, w);
}

}  // namespace sndtw
