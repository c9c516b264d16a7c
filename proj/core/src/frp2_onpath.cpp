#include "faultpath/frp2_onpath.hpp"

#include <algorithm>

#include "faultpath/rp_sweep.hpp"
#include "faultpath/validation.hpp"

namespace faultpath {

namespace {

// Minimum of banc over each subtree of from_s (entries < 0 are ignored).
std::vector<int32_t> subtree_min(const SpTree& from_s, const std::vector<int32_t>& banc,
                                 int32_t absent) {
  std::vector<int32_t> out(from_s.dist.size(), absent);
  for (auto it = from_s.order.rbegin(); it != from_s.order.rend(); ++it) {
    size_t xi = static_cast<size_t>(*it);
    int32_t v = banc[xi] < 0 ? absent : banc[xi];
    for (NodeId c : from_s.children(*it))
      v = std::min(v, out[static_cast<size_t>(c)]);
    out[xi] = v;
  }
  return out;
}

std::vector<int32_t> subtree_max(const SpTree& from_t, const std::vector<int32_t>& anc) {
  std::vector<int32_t> out(from_t.dist.size(), -1);
  for (auto it = from_t.order.rbegin(); it != from_t.order.rend(); ++it) {
    size_t xi = static_cast<size_t>(*it);
    int32_t v = anc[xi];
    for (NodeId c : from_t.children(*it))
      v = std::max(v, out[static_cast<size_t>(c)]);
    out[xi] = v;
  }
  return out;
}

struct OnPathSink {
  std::map<std::pair<EdgeId, EdgeId>, ExtDist> values;  // normalized keys

  void emit(EdgeId a, EdgeId b, const ExtDist& v) {
    auto key = std::minmax(a, b);
    auto [it, inserted] = values.emplace(std::make_pair(key.first, key.second), v);
    if (!inserted) {
      if (validation_enabled())
        validate(same_value(it->second, v), "on-path: overlapping covers disagree");
      it->second = min(it->second, v);
    }
  }
};

void onpath_rec(const GraphView& g, NodeId s, NodeId t, const ShortcutWeights& ws,
                const ShortcutWeights& wt, const ExtDist& offset, const SsrpSolver& base,
                OnPathSink& sink);

}  // namespace

PartitionPair both_divide(const GraphView& g, const SpTree& from_s, const SpTree& from_t,
                          const std::vector<NodeId>& path_nodes, size_t f_index,
                          const ShortcutWeights& ws, const ShortcutWeights& wt) {
  const size_t n = from_s.dist.size();
  const NodeId a = path_nodes[f_index];
  const NodeId b = path_nodes[f_index + 1];
  const int32_t fa = static_cast<int32_t>(f_index);

  std::vector<int32_t> anc_s = deepest_path_ancestor(from_s, path_nodes);
  std::vector<int32_t> banc = deepest_path_ancestor(from_t, path_nodes);
  std::vector<int32_t> minb = subtree_min(from_s, banc, static_cast<int32_t>(n));
  std::vector<int32_t> maxa = subtree_max(from_t, anc_s);

  PartitionPair out{
      std::vector<uint8_t>(n, 0), std::vector<uint8_t>(n, 0),
      ShortcutWeights{from_s.source, std::vector<ExtDist>(n, ExtDist::infinity())},
      ShortcutWeights{a, std::vector<ExtDist>(n, ExtDist::infinity())},
      ShortcutWeights{b, std::vector<ExtDist>(n, ExtDist::infinity())},
      ShortcutWeights{from_t.source, std::vector<ExtDist>(n, ExtDist::infinity())}};

  for (NodeId x = 0; x < static_cast<NodeId>(n); ++x) {
    size_t xi = static_cast<size_t>(x);
    if (from_s.reachable(x) && minb[xi] <= fa) out.in_a[xi] = 1;
    if (from_t.reachable(x) && maxa[xi] >= fa + 1) out.in_b[xi] = 1;
  }
  if (validation_enabled()) {
    for (size_t xi = 0; xi < n; ++xi)
      validate(!(out.in_a[xi] && out.in_b[xi]), "divide: parts not disjoint");
  }

  const ExtDist dist_ta = from_t.dist[static_cast<size_t>(a)];
  const ExtDist dist_sb = from_s.dist[static_cast<size_t>(b)];

  // A route may leave the far subtree through a virtual hub edge anchored at
  // the designated endpoint itself; fold those exits into that endpoint.
  ExtDist exit_s = ExtDist::infinity();
  ExtDist exit_t = ExtDist::infinity();
  for (NodeId z = 0; z < static_cast<NodeId>(n); ++z) {
    size_t zi = static_cast<size_t>(z);
    if (!(banc[zi] >= 0 && banc[zi] <= fa))
      exit_s = min(exit_s, ws.weight[zi].through_virtual() + from_t.dist[zi]);
    if (anc_s[zi] < fa + 1)
      exit_t = min(exit_t, wt.weight[zi].through_virtual() + from_s.dist[zi]);
  }

  for (NodeId x = 0; x < static_cast<NodeId>(n); ++x) {
    size_t xi = static_cast<size_t>(x);
    if (out.in_a[xi]) {
      out.a_near.weight[xi] = ws.weight[xi];
      if (banc[xi] >= 0 && banc[xi] <= fa) {  // x in the far subtree under a
        ExtDist best = wt.weight[xi];
        if (x == from_s.source) best = min(best, exit_s);
        g.for_neighbors(x, [&](NodeId y, EdgeId, const ExtDist& w) {
          size_t yi = static_cast<size_t>(y);
          if (banc[yi] >= 0 && banc[yi] <= fa) return;  // y under a as well
          best = min(best, from_t.dist[yi] + w);
        });
        out.a_far.weight[xi] = best - dist_ta;
      }
    }
    if (out.in_b[xi]) {
      out.b_far.weight[xi] = wt.weight[xi];
      if (anc_s[xi] >= fa + 1) {  // x in the near subtree under b
        ExtDist best = ws.weight[xi];
        if (x == from_t.source) best = min(best, exit_t);
        g.for_neighbors(x, [&](NodeId y, EdgeId, const ExtDist& w) {
          size_t yi = static_cast<size_t>(y);
          if (anc_s[yi] >= fa + 1) return;
          best = min(best, from_s.dist[yi] + w);
        });
        out.b_near.weight[xi] = best - dist_sb;
      }
    }
  }
  out.a_far.weight[static_cast<size_t>(a)] = ExtDist::zero();
  out.b_near.weight[static_cast<size_t>(b)] = ExtDist::zero();
  return out;
}

std::map<std::pair<size_t, size_t>, ExtDist> both_conquer(
    const GraphView& g, NodeId s, NodeId t, const ShortcutWeights& ws,
    const ShortcutWeights& wt, const PathOnTree& path, size_t c_index,
    const std::vector<ExtDist>& from_s_at_c, const std::vector<ExtDist>& from_t_at_c,
    const SsrpSolver& base) {
  std::map<std::pair<size_t, size_t>, ExtDist> out;
  const size_t hops = path.hops();
  if (c_index == 0 || c_index >= hops) return out;  // one side vacuous
  std::vector<EdgeId> ids = path.edge_ids();

  std::vector<EdgeId> left_ids(ids.begin(), ids.begin() + static_cast<long>(c_index));
  std::vector<EdgeId> right_ids(ids.begin() + static_cast<long>(c_index), ids.end());

  // d_{L~-e}(s, x) for x on the far half; L drops the near-to-far path edges.
  std::vector<NodeId> far_nodes(path.nodes.begin() + static_cast<long>(c_index) + 1,
                                path.nodes.end());
  RestrictedSsrp left = ssrp_shortcut_restricted(g.without_edges(right_ids), s, ws,
                                                 far_nodes, left_ids, base);
  std::vector<NodeId> near_nodes(path.nodes.begin(),
                                 path.nodes.begin() + static_cast<long>(c_index));
  RestrictedSsrp right = ssrp_shortcut_restricted(g.without_edges(left_ids), t, wt,
                                                  near_nodes, right_ids, base);

  const ExtDist total = path.total();
  // suffix[q]: best completion through far-path nodes q.. for the left fault
  for (size_t i = 0; i < c_index; ++i) {
    std::vector<ExtDist> suf(far_nodes.size() + 1, ExtDist::infinity());
    for (size_t q = far_nodes.size(); q-- > 0;) {
      size_t pos = c_index + 1 + q;  // path position of far_nodes[q]
      ExtDist cand = left.at(i, q) + (total - path.prefix[pos]);
      suf[q] = min(cand, suf[q + 1]);
    }
    for (size_t j = c_index; j < hops; ++j) {
      // e' = edge j; x ranges over path positions >= j + 1
      ExtDist v = suf[j - c_index];
      ExtDist t3 = from_s_at_c[i] + from_t_at_c[j];
      out.emplace(std::make_pair(i, j), min(v, t3));
    }
  }
  for (size_t j = c_index; j < hops; ++j) {
    size_t jr = j - c_index;
    ExtDist pre = ExtDist::infinity();
    for (size_t q = 0; q < near_nodes.size(); ++q) {
      pre = min(pre, right.at(jr, q) + path.prefix[q]);
      // pairs with e = edge q: x ranges over positions <= q, handled as we go
      auto it = out.find(std::make_pair(q, j));
      if (it != out.end()) it->second = min(it->second, pre);
    }
  }
  return out;
}

namespace {

void onpath_rec(const GraphView& g, NodeId s, NodeId t, const ShortcutWeights& ws,
                const ShortcutWeights& wt, const ExtDist& offset, const SsrpSolver& base,
                OnPathSink& sink) {
  GraphView aug = g.with_hub(ws).with_hub(wt);
  SpTree from_s = dijkstra(aug, s);
  validate(from_s.reachable(t), "on-path recursion: endpoints disconnected");
  SpTree from_t = dijkstra(aug, t);
  PathOnTree path = extract_path(from_s, t);
  const size_t hops = path.hops();
  if (hops == 0) return;
  std::vector<EdgeId> ids = path.edge_ids();
  validate(ids.size() == hops, "on-path recursion: virtual edge on path");

  size_t k;
  {
    GraphView with_wt = g.with_hub(wt);
    SsrpTable table_s = ssrp_shortcut(with_wt, s, ws, base, &ids);
    for (size_t i = 0; i < hops; ++i)
      sink.emit(ids[i], ids[i], offset + table_s.query(ids[i], t));
    if (hops == 1) return;

    GraphView with_ws = g.with_hub(ws);
    SsrpTable table_t = ssrp_shortcut(with_ws, t, wt, base, &ids);

    // Pick the split node: the farthest k with |A_{k-1}| at most half.
    std::vector<int32_t> banc = deepest_path_ancestor(from_t, path.nodes);
    std::vector<int32_t> minb =
        subtree_min(from_s, banc, static_cast<int32_t>(path.nodes.size()));
    std::vector<int64_t> size_a(path.nodes.size() + 1, 0);
    for (NodeId x : from_s.order) {
      int32_t v = minb[static_cast<size_t>(x)];
      if (v < static_cast<int32_t>(path.nodes.size()))
        ++size_a[static_cast<size_t>(v)];
    }
    for (size_t i = 1; i < size_a.size(); ++i) size_a[i] += size_a[i - 1];
    int64_t n_alive = 0;
    for (NodeId x = 0; x < g.node_count(); ++x)
      if (g.node_in(x)) ++n_alive;
    k = 1;
    for (size_t kk = 1; kk <= path.nodes.size() - 2; ++kk)
      if (2 * size_a[kk - 1] <= n_alive) k = kk;

    for (size_t kk : {k - 1, k, k + 1}) {
      if (kk == 0 || kk >= hops) continue;
      NodeId c = path.nodes[kk];
      std::vector<ExtDist> col_s(hops), col_t(hops);
      for (size_t i = 0; i < hops; ++i) {
        col_s[i] = table_s.query(ids[i], c);
        col_t[i] = table_t.query(ids[i], c);
      }
      auto conq = both_conquer(g, s, t, ws, wt, path, kk, col_s, col_t, base);
      for (auto& [ij, v] : conq) sink.emit(ids[ij.first], ids[ij.second], offset + v);
    }
  }

  // Recurse on the two halves with folded hub weights.
  if (k >= 2) {
    PartitionPair parts = both_divide(g, from_s, from_t, path.nodes, k - 1, ws, wt);
    NodeId a = path.nodes[k - 1];
    onpath_rec(g.induced(parts.in_a), s, a, parts.a_near, parts.a_far,
               offset + from_t.dist[static_cast<size_t>(a)], base, sink);
  }
  if (k + 2 <= hops) {
    PartitionPair parts = both_divide(g, from_s, from_t, path.nodes, k, ws, wt);
    NodeId b = path.nodes[k + 1];
    onpath_rec(g.induced(parts.in_b), b, t, parts.b_near, parts.b_far,
               offset + from_s.dist[static_cast<size_t>(b)], base, sink);
  }
}

}  // namespace

OnPathTable solve_onpath(const GraphView& g, NodeId s, NodeId t, const SsrpSolver& base) {
  OnPathTable out;
  SpTree from_s = dijkstra(g, s);
  if (!from_s.reachable(t)) return out;
  out.path_edges = extract_path(from_s, t).edge_ids();

  ShortcutWeights ws = ShortcutWeights::all_infinite(s, g.node_count());
  ShortcutWeights wt = ShortcutWeights::all_infinite(t, g.node_count());
  OnPathSink sink;
  onpath_rec(g, s, t, ws, wt, ExtDist::zero(), base, sink);

  const size_t l = out.path_edges.size();
  out.values.assign(l * l, ExtDist::infinity());
  for (size_t i = 0; i < l; ++i) {
    for (size_t j = 0; j < l; ++j) {
      auto key = std::minmax(out.path_edges[i], out.path_edges[j]);
      auto it = sink.values.find(std::make_pair(key.first, key.second));
      validate(it != sink.values.end(), "on-path: uncovered pair");
      out.values[i * l + j] = it->second;
    }
  }
  return out;
}

}  // namespace faultpath
