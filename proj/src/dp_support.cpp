#include "sndtw/dp_support.hpp"

#include <algorithm>
#include <bit>

namespace sndtw {

std::vector<PartCode> all_partitions(int b) {
  if (b == 0) return {0};
  std::vector<PartCode> out;
  std::vector<int> labels(b, 0);
  // restricted growth strings: labels[i] <= 1 + max(labels[0..i-1])
  while (true) {
    out.push_back(part_canon(labels.data(), b));
    int i = b - 1;
    for (; i > 0; i--) {
      int mx = 0;
      for (int j = 0; j < i; j++) mx = std::max(mx, labels[j]);
      if (labels[i] <= mx) { labels[i]++; break; }
      labels[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

ConnectionSet part_to_cs(PartCode code, const std::vector<Vertex>& bag) {
  ConnectionSet cs = ConnectionSet::over(bag);
  int b = (int)bag.size();
  for (int i = 0; i < b; i++)
    for (int j = i + 1; j < b; j++)
      if (part_joined(code, i, j)) cs.add(bag[i], bag[j]);
  cs.canonicalize();
  return cs;
}

PartCode cs_to_part(const ConnectionSet& closed, const std::vector<Vertex>& bag) {
  int b = (int)bag.size();
  SmallDSU dsu;
  dsu.init(b);
  for (auto [u, v] : closed.pairs) {
    int i = (int)(std::lower_bound(bag.begin(), bag.end(), u) - bag.begin());
    int j = (int)(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    dsu.unite(i, j);
  }
  int labels[kMaxBagPositions];
  for (int i = 0; i < b; i++) labels[i] = dsu.find(i);
  return part_canon(labels, b);
}

int NodeCtx::pos_of(Vertex v) const {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it == bag.end() || *it != v) return -1;
  return (int)(it - bag.begin());
}

std::vector<NodeCtx> build_node_contexts(const Graph& g, const TreeDecomposition& td,
                                         const BagAnnotations& ann) {
  std::vector<NodeCtx> ctxs(td.node_count());
  auto index_in = [](const std::vector<Vertex>& ground, const std::vector<Vertex>& subset) {
    std::vector<int> out;
    out.reserve(subset.size());
    for (Vertex v : subset)
      out.push_back((int)(std::lower_bound(ground.begin(), ground.end(), v) - ground.begin()));
    return out;
  };
  for (int t = 0; t < td.node_count(); t++) {
    NodeCtx& c = ctxs[t];
    c.bag = td.bags[t];
    c.b = (int)c.bag.size();
    if (c.b > kMaxBagPositions)
      throw EngineLimitError("bag size exceeds engine capacity (" + std::to_string(c.b) + ")");
    const auto& ch = td.children[t];
    if (!ch.empty()) {
      c.left = ch[0];
      c.right = ch.size() > 1 ? ch[1] : -1;
      c.left_b = (int)td.bags[c.left].size();
      c.right_b = c.right >= 0 ? (int)td.bags[c.right].size() : 0;
      std::vector<Vertex> uni = c.bag;
      uni.insert(uni.end(), td.bags[c.left].begin(), td.bags[c.left].end());
      if (c.right >= 0)
        uni.insert(uni.end(), td.bags[c.right].begin(), td.bags[c.right].end());
      std::sort(uni.begin(), uni.end());
      uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      c.uni = std::move(uni);
      c.bag_in_uni = index_in(c.uni, c.bag);
      c.left_in_uni = index_in(c.uni, td.bags[c.left]);
      if (c.right >= 0) c.right_in_uni = index_in(c.uni, td.bags[c.right]);

      std::vector<Vertex> dl = c.bag;
      dl.insert(dl.end(), td.bags[c.left].begin(), td.bags[c.left].end());
      std::sort(dl.begin(), dl.end());
      dl.erase(std::unique(dl.begin(), dl.end()), dl.end());
      c.dl = std::move(dl);
      c.bag_in_dl = index_in(c.dl, c.bag);
      c.left_in_dl = index_in(c.dl, td.bags[c.left]);
      if (c.right >= 0) {
        std::vector<Vertex> dr = c.bag;
        dr.insert(dr.end(), td.bags[c.right].begin(), td.bags[c.right].end());
        std::sort(dr.begin(), dr.end());
        dr.erase(std::unique(dr.begin(), dr.end()), dr.end());
        c.dr = std::move(dr);
        c.bag_in_dr = index_in(c.dr, c.bag);
        c.right_in_dr = index_in(c.dr, td.bags[c.right]);
      }
    } else {
      c.uni = c.bag;
      c.bag_in_uni = index_in(c.uni, c.bag);
    }
    for (int id : ann.bag_edges[t]) {
      const Edge& e = g.edges[id];
      int pu = c.pos_of(e.u), pv = c.pos_of(e.v);
      c.et_bag.push_back({pu, pv});
      c.et_uni.push_back({c.bag_in_uni[pu], c.bag_in_uni[pv]});
      c.et_ids.push_back(id);
      c.et_cost.push_back(g.edge_cost.empty() ? Rat(0) : g.edge_cost[id]);
    }
    if ((int)c.et_ids.size() > 16)
      throw EngineLimitError("more than 16 bag edges at one node");
    int p = td.parent[t];
    for (int i = 0; i < c.b; i++) {
      bool in_parent =
          p >= 0 && std::binary_search(td.bags[p].begin(), td.bags[p].end(), c.bag[i]);
      if (!in_parent) c.new_positions.push_back(i);
    }
  }
  return ctxs;
}

namespace {

inline void apply_partition(SmallDSU& dsu, PartCode code, const std::vector<int>& map, int b) {
  int first_of[kMaxBagPositions];
  for (int l = 0; l < kMaxBagPositions; l++) first_of[l] = -1;
  for (int i = 0; i < b; i++) {
    int l = part_label(code, i);
    if (first_of[l] < 0)
      first_of[l] = map[i];
    else
      dsu.unite(first_of[l], map[i]);
  }
}

}  // namespace

PartCode gamma_step(const NodeCtx& ctx, PartCode left, PartCode right, uint32_t ymask) {
  SmallDSU dsu;
  dsu.init((int)ctx.uni.size());
  apply_partition(dsu, left, ctx.left_in_uni, ctx.left_b);
  if (ctx.right >= 0) apply_partition(dsu, right, ctx.right_in_uni, ctx.right_b);
  uint32_t m = ymask;
  while (m) {
    int e = std::countr_zero(m);
    m &= m - 1;
    dsu.unite(ctx.et_uni[e].first, ctx.et_uni[e].second);
  }
  int labels[kMaxBagPositions];
  // collapse roots over uni to labels over bag positions
  int root_label[3 * kMaxBagPositions];
  for (size_t i = 0; i < ctx.uni.size(); i++) root_label[i] = -1;
  int next = 0;
  for (int i = 0; i < ctx.b; i++) {
    int rt = dsu.find(ctx.bag_in_uni[i]);
    if (root_label[rt] < 0) root_label[rt] = next++;
    labels[i] = root_label[rt];
  }
  return part_canon(labels, ctx.b);
}

PartCode delta_force(const NodeCtx& ctx, bool left_side, PartCode delta, PartCode gamma_child) {
  const auto& ground = left_side ? ctx.dl : ctx.dr;
  const auto& bag_map = left_side ? ctx.bag_in_dl : ctx.bag_in_dr;
  const auto& child_map = left_side ? ctx.left_in_dl : ctx.right_in_dr;
  int child_b = left_side ? ctx.left_b : ctx.right_b;
  SmallDSU dsu;
  dsu.init((int)ground.size());
  apply_partition(dsu, delta, bag_map, ctx.b);
  apply_partition(dsu, gamma_child, child_map, child_b);
  int labels[kMaxBagPositions];
  int root_label[3 * kMaxBagPositions];
  for (size_t i = 0; i < ground.size(); i++) root_label[i] = -1;
  int next = 0;
  for (int i = 0; i < child_b; i++) {
    int rt = dsu.find(child_map[i]);
    if (root_label[rt] < 0) root_label[rt] = next++;
    labels[i] = root_label[rt];
  }
  return part_canon(labels, child_b);
}

}  // namespace sndtw
