#include "sndtw/flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace sndtw {

namespace {
constexpr int kInfCap = 1 << 28;
}

void FlowNetwork::add_arc(int a, int b, int cap) {
  adj_[a].push_back((int)arcs_.size());
  arcs_.push_back({b, cap});
  adj_[b].push_back((int)arcs_.size());
  arcs_.push_back({a, 0});
}

FlowNetwork FlowNetwork::edge_disjoint(const Graph& g, const std::vector<int>& edge_ids,
                                       Vertex source, Vertex sink) {
  FlowNetwork net;
  net.adj_.resize(g.n);
  net.original_.resize(g.n);
  for (Vertex v = 0; v < g.n; v++) net.original_[v] = v;
  for (int id : edge_ids) {
    const Edge& e = g.edges.at(id);
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  net.source_ = source;
  net.sink_ = sink;
  return net;
}

FlowNetwork FlowNetwork::vertex_disjoint(const Graph& g, const std::vector<Vertex>& vertices,
                                         Vertex source, Vertex sink) {
  FlowNetwork net;
  std::vector<char> in(g.n, 0);
  for (Vertex v : vertices) in[v] = 1;
  in[source] = in[sink] = 1;
  // v_in = 2v, v_out = 2v+1
  net.adj_.resize(2 * g.n);
  net.original_.assign(2 * g.n, -1);
  for (Vertex v = 0; v < g.n; v++) {
    if (!in[v]) continue;
    net.original_[2 * v] = v;
    net.original_[2 * v + 1] = v;
    int cap = (v == source || v == sink) ? kInfCap : 1;
    net.add_arc(2 * v, 2 * v + 1, cap);
  }
  for (size_t id = 0; id < g.edges.size(); id++) {
    const Edge& e = g.edges[id];
    if (!in[e.u] || !in[e.v]) continue;
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  net.source_ = 2 * source;
  net.sink_ = 2 * sink + 1;
  return net;
}

FlowNetwork FlowNetwork::edge_disjoint_induced(const Graph& g, const std::vector<Vertex>& vertices,
                                               Vertex source, Vertex sink) {
  std::vector<char> in(g.n, 0);
  for (Vertex v : vertices) in[v] = 1;
  in[source] = in[sink] = 1;
  std::vector<int> ids;
  for (size_t id = 0; id < g.edges.size(); id++)
    if (in[g.edges[id].u] && in[g.edges[id].v]) ids.push_back((int)id);
  return edge_disjoint(g, ids, source, sink);
}

bool FlowNetwork::bfs_levels() {
  level_.assign(adj_.size(), -1);
  std::vector<int> q{source_};
  level_[source_] = 0;
  for (size_t h = 0; h < q.size(); h++) {
    int v = q[h];
    for (int aid : adj_[v]) {
      const Arc& a = arcs_[aid];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push_back(a.to);
      }
    }
  }
  return level_[sink_] >= 0;
}

int FlowNetwork::dfs_push(int v, int limit) {
  if (v == sink_) return limit;
  for (int& i = iter_[v]; i < (int)adj_[v].size(); i++) {
    int aid = adj_[v][i];
    Arc& a = arcs_[aid];
    if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
      int d = dfs_push(a.to, std::min(limit, a.cap));
      if (d > 0) {
        a.cap -= d;
        arcs_[aid ^ 1].cap += d;
        return d;
      }
    }
  }
  level_[v] = -1;
  return 0;
}

int FlowNetwork::max_flow(int limit) {
  int flow = 0;
  while (flow < limit && bfs_levels()) {
    iter_.assign(adj_.size(), 0);
    int d;
    while (flow < limit && (d = dfs_push(source_, limit - flow)) > 0) flow += d;
  }
  return flow;
}

std::vector<std::vector<Vertex>> FlowNetwork::decompose_paths() {
  // Remaining flow per forward arc equals the residual cap of its reverse.
  std::vector<int> rem(arcs_.size(), 0);
  for (size_t aid = 0; aid < arcs_.size(); aid += 2) rem[aid] = arcs_[aid ^ 1].cap;

  std::vector<std::vector<Vertex>> paths;
  std::vector<int> pos_in_path(adj_.size(), -1);
  while (true) {
    std::vector<int> arc_path;
    std::fill(pos_in_path.begin(), pos_in_path.end(), -1);
    int v = source_;
    pos_in_path[v] = 0;
    bool reached = false;
    while (true) {
      if (v == sink_) { reached = true; break; }
      int next = -1;
      for (int aid : adj_[v])
        if ((aid & 1) == 0 && rem[aid] > 0) { next = aid; break; }
      if (next < 0) break;
      int to = arcs_[next].to;
      if (pos_in_path[to] >= 0) {
        // Flow cycle: consume it and cut the walk back to its entry point.
        rem[next]--;
        int cut = pos_in_path[to];
        for (size_t i = cut; i < arc_path.size(); i++) {
          rem[arc_path[i]]--;
          pos_in_path[arcs_[arc_path[i]].to] = -1;
        }
        arc_path.resize(cut);
        v = to;
        continue;
      }
      arc_path.push_back(next);
      pos_in_path[to] = (int)arc_path.size();
      v = to;
    }
    if (!reached || arc_path.empty()) break;
    for (int aid : arc_path) rem[aid]--;
    std::vector<Vertex> path;
    Vertex prev = -2;
    auto push_node = [&](int nd) {
      Vertex ov = original_[nd];
      if (ov >= 0 && ov != prev) { path.push_back(ov); prev = ov; }
    };
    push_node(source_);
    for (int aid : arc_path) push_node(arcs_[aid].to);
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace sndtw
