#include "faultpath/ssrp.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "faultpath/validation.hpp"

namespace faultpath {

namespace {

std::vector<EdgeId> real_tree_edges(const SpTree& t) {
  std::vector<EdgeId> out;
  for (NodeId x : t.order) {
    EdgeId l = t.parent_link[static_cast<size_t>(x)];
    if (l >= 0) out.push_back(l);
  }
  return out;
}

int32_t alive_edge_count(const GraphView& g) {
  int32_t m = 0;
  for (EdgeId e = 0; e < g.graph().edge_count(); ++e)
    if (g.edge_in(e)) ++m;
  return m;
}

}  // namespace

SsrpTable ssrp_naive(const GraphView& g, NodeId source,
                     const std::vector<EdgeId>* row_filter) {
  SpTree t = dijkstra(g, source);
  SsrpTable out;
  out.source = source;
  out.nofault = t.dist;
  std::vector<EdgeId> edges = real_tree_edges(t);
  if (row_filter != nullptr) {
    std::unordered_set<EdgeId> keep(row_filter->begin(), row_filter->end());
    std::erase_if(edges, [&](EdgeId e) { return !keep.contains(e); });
  }
  out.set_alive(t.order, t.dist.size());

  // One Dijkstra per row over reusable scratch; rows cover reachable nodes.
  const size_t n = t.dist.size();
  std::vector<ExtDist> dist(n, ExtDist::infinity());
  std::vector<uint8_t> done(n, 0);
  std::vector<NodeId> touched;
  using Entry = std::pair<ExtDist, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (EdgeId e : edges) {
    dist[static_cast<size_t>(source)] = ExtDist::zero();
    touched.push_back(source);
    heap.emplace(ExtDist::zero(), source);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (done[static_cast<size_t>(u)]) continue;
      done[static_cast<size_t>(u)] = 1;
      g.for_neighbors(u, [&](NodeId v, EdgeId link, const ExtDist& w) {
        if (link == e) return;
        ExtDist nd = d + w;
        size_t vi = static_cast<size_t>(v);
        if (nd < dist[vi]) {
          if (dist[vi].is_infinite() && !done[vi]) touched.push_back(v);
          dist[vi] = nd;
          heap.emplace(nd, v);
        }
      });
    }
    std::vector<ExtDist> row(t.order.size(), ExtDist::infinity());
    for (size_t i = 0; i < t.order.size(); ++i)
      row[i] = dist[static_cast<size_t>(t.order[i])];
    out.rows.emplace(e, std::move(row));
    for (NodeId x : touched) {
      dist[static_cast<size_t>(x)] = ExtDist::infinity();
      done[static_cast<size_t>(x)] = 0;
    }
    touched.clear();
  }
  return out;
}

SsrpSolver naive_solver() {
  return [](const GraphView& g, NodeId s, const std::vector<EdgeId>* f) {
    return ssrp_naive(g, s, f);
  };
}

SsrpTable ssrp_shortcut(const GraphView& g, NodeId source, const ShortcutWeights& w,
                        const SsrpSolver& base, const std::vector<EdgeId>* row_filter) {
  validate(w.hub == source, "ssrp_shortcut: hub must equal source");
  GraphView aug = g.with_hub(w);
  const int primary = aug.hub_count() - 1;
  SpTree tree = dijkstra(aug, source);
  const size_t n = tree.dist.size();

  if (validation_enabled()) {
    for (NodeId x = 0; x < static_cast<NodeId>(n); ++x) {
      if (!aug.node_in(x)) continue;
      validate(!value_less(w.weight[static_cast<size_t>(x)],
                           tree.dist[static_cast<size_t>(x)]),
               "shortcut weights below true distance");
      validate(tree.parent_link[static_cast<size_t>(x)] != virtual_link(primary),
               "valid shortcut weights must not enter the tree");
    }
  }

  SsrpTable out;
  out.source = source;
  out.nofault = tree.dist;

  std::vector<EdgeId> edges = real_tree_edges(tree);
  std::vector<EdgeId> wanted = edges;
  if (row_filter != nullptr) {
    std::unordered_set<EdgeId> keep(row_filter->begin(), row_filter->end());
    std::erase_if(wanted, [&](EdgeId e) { return !keep.contains(e); });
  }

  out.set_alive(tree.order, n);
  const int32_t n_eff = static_cast<int32_t>(tree.order.size());
  if (n_eff <= 4 || alive_edge_count(g) <= 4) {
    for (EdgeId e : wanted) {
      EdgeId removed[1] = {e};
      std::vector<ExtDist> full = dijkstra(aug.without_edges(removed), source).dist;
      std::vector<ExtDist> row(tree.order.size());
      for (size_t i = 0; i < tree.order.size(); ++i)
        row[i] = full[static_cast<size_t>(tree.order[i])];
      out.rows.emplace(e, std::move(row));
    }
    return out;
  }
  if (wanted.empty()) return out;  // nothing to fail: the no-fault row suffices

  CentroidSplit split = centroid_split(tree, source, {});
  const NodeId c = split.centroid;

  PathOnTree pi = extract_path(tree, c);
  std::vector<EdgeId> pi_real = pi.edge_ids();
  std::unordered_set<EdgeId> pi_set(pi_real.begin(), pi_real.end());
  auto pi_links = pi.link_pairs();
  std::vector<ExtDist> dist_nopi = dijkstra(aug.without_links(pi_links), source).dist;

  // Peeled weights for the two parts. The root side is solved twice: once
  // with the inherited weights (its rows are sound for any fault off the hub
  // path) and once with weights condensed through d_nopi (those condensed
  // routes avoid every hub-path edge, so only hub-path rows may read them).
  ShortcutWeights w1_plain{source, std::vector<ExtDist>(n, ExtDist::infinity())};
  ShortcutWeights w1_cond{source, std::vector<ExtDist>(n, ExtDist::infinity())};
  ShortcutWeights w2{c, std::vector<ExtDist>(n, ExtDist::infinity())};
  const ExtDist dist_sc = tree.dist[static_cast<size_t>(c)];
  for (NodeId x = 0; x < static_cast<NodeId>(n); ++x) {
    if (split.in_t1[static_cast<size_t>(x)]) {
      w1_plain.weight[static_cast<size_t>(x)] = w.weight[static_cast<size_t>(x)];
      w1_cond.weight[static_cast<size_t>(x)] =
          min(w.weight[static_cast<size_t>(x)], dist_nopi[static_cast<size_t>(x)]);
    }
    if (split.in_t2[static_cast<size_t>(x)] && x != c)
      w2.weight[static_cast<size_t>(x)] = w.weight[static_cast<size_t>(x)] - dist_sc;
  }
  w1_plain.weight[static_cast<size_t>(source)] = ExtDist::zero();
  w1_cond.weight[static_cast<size_t>(source)] = ExtDist::zero();
  w2.weight[static_cast<size_t>(c)] = ExtDist::zero();

  std::vector<EdgeId> pi_wanted;
  for (EdgeId e : wanted)
    if (pi_set.contains(e)) pi_wanted.push_back(e);

  SsrpTable rec1 = ssrp_shortcut(g.induced(split.in_t1), source, w1_plain, base,
                                 row_filter != nullptr ? &wanted : nullptr);
  SsrpTable rec1_cond =
      ssrp_shortcut(g.induced(split.in_t1), source, w1_cond, base, &pi_wanted);
  SsrpTable rec2 = ssrp_shortcut(g.induced(split.in_t2), c, w2, base,
                                 row_filter != nullptr ? &wanted : nullptr);

  SsrpTable base_s = base(g, source, row_filter != nullptr ? &wanted : nullptr);
  SsrpTable base_c = base(g, c, &pi_wanted);

  // Per-edge suffix minima of d_nopi(y) - d(y) along the hub path.
  const size_t path_len = pi.nodes.size();
  std::vector<ExtDist> suffix(path_len, ExtDist::infinity());
  for (size_t q = path_len; q-- > 0;) {
    NodeId y = pi.nodes[q];
    ExtDist val = dist_nopi[static_cast<size_t>(y)] - tree.dist[static_cast<size_t>(y)];
    suffix[q] = (q + 1 < path_len) ? min(val, suffix[q + 1]) : val;
  }
  std::unordered_map<EdgeId, ExtDist> path_min;  // e -> min over y at or after e
  for (size_t q = 1; q < path_len; ++q) {
    EdgeId link = pi.links[q - 1].link;
    if (link >= 0) path_min.emplace(link, suffix[q]);
  }

  enum class EdgeSide { kOnPath, kPart2, kPart1 };
  auto side_of = [&](EdgeId e) {
    if (pi_set.contains(e)) return EdgeSide::kOnPath;
    const auto& ed = g.graph().edge(e);
    if (split.in_t2[static_cast<size_t>(ed.u)] && split.in_t2[static_cast<size_t>(ed.v)])
      return EdgeSide::kPart2;
    return EdgeSide::kPart1;
  };

  for (EdgeId e : wanted) {
    std::vector<ExtDist> row(tree.order.size(), ExtDist::infinity());
    EdgeSide side = side_of(e);
    for (size_t oi = 0; oi < tree.order.size(); ++oi) {
      NodeId x = tree.order[oi];
      size_t xi = static_cast<size_t>(x);
      bool deep2 = split.in_t2[xi] && x != c;
      ExtDist v;
      switch (side) {
        case EdgeSide::kPart2:
          v = deep2 ? min(base_s.query(e, x), dist_sc + rec2.query(e, x))
                    : tree.dist[xi];
          break;
        case EdgeSide::kOnPath: {
          ExtDist h = path_min.at(e) + dist_sc + base_c.query(e, x);
          ExtDist alt = deep2 ? dist_nopi[xi]
                              : min(dist_nopi[xi], rec1_cond.query(e, x));
          v = min(min(base_s.query(e, x), alt), h);
          break;
        }
        case EdgeSide::kPart1:
          v = deep2 ? tree.dist[xi] : min(base_s.query(e, x), rec1.query(e, x));
          break;
      }
      row[oi] = v;
    }
    out.rows.emplace(e, std::move(row));
  }
  return out;
}

RestrictedSsrp ssrp_shortcut_restricted(const GraphView& g, NodeId source,
                                        const ShortcutWeights& w,
                                        const std::vector<NodeId>& xs,
                                        const std::vector<EdgeId>& fs,
                                        const SsrpSolver& base) {
  GraphView aug = g.with_hub(w);
  const int primary = aug.hub_count() - 1;
  SpTree tree = dijkstra(aug, source);
  const size_t n = tree.dist.size();

  // H: nodes whose tree path uses no primary virtual edge.
  std::vector<uint8_t> in_h(n, 0);
  for (NodeId x : tree.order) {
    size_t xi = static_cast<size_t>(x);
    if (x == source) {
      in_h[xi] = 1;
      continue;
    }
    EdgeId l = tree.parent_link[xi];
    if (l == virtual_link(primary)) continue;
    in_h[xi] = in_h[static_cast<size_t>(tree.parent[xi])];
  }

  if (validation_enabled()) {
    for (NodeId x : xs) {
      if (!tree.reachable(x) || in_h[static_cast<size_t>(x)]) continue;
      // The tree path to x uses a virtual edge; no f may lie on it.
      std::unordered_set<EdgeId> on_path;
      for (NodeId y = x; y != source; y = tree.parent[static_cast<size_t>(y)]) {
        EdgeId l = tree.parent_link[static_cast<size_t>(y)];
        if (l >= 0) on_path.insert(l);
      }
      for (EdgeId f : fs)
        validate(!on_path.contains(f), "restricted ssrp: contract violated");
    }
  }

  // Fold paths that re-enter H into per-node entry weights.
  ShortcutWeights w2{source, std::vector<ExtDist>(n, ExtDist::infinity())};
  for (NodeId y = 0; y < static_cast<NodeId>(n); ++y) {
    size_t yi = static_cast<size_t>(y);
    if (!in_h[yi] || !aug.node_in(y)) continue;
    ExtDist best = w.weight[yi];
    g.for_neighbors(y, [&](NodeId z, EdgeId, const ExtDist& wt) {
      if (in_h[static_cast<size_t>(z)]) return;
      best = min(best, tree.dist[static_cast<size_t>(z)] + wt);
    });
    w2.weight[yi] = best;
  }
  w2.weight[static_cast<size_t>(source)] = ExtDist::zero();

  SsrpTable inner = ssrp_shortcut(g.induced(in_h), source, w2, base, &fs);

  RestrictedSsrp out;
  out.nodes = xs;
  out.edges = fs;
  out.values.assign(xs.size() * fs.size(), ExtDist::infinity());
  for (size_t ei = 0; ei < fs.size(); ++ei) {
    EdgeId e = fs[ei];
    const auto& ed = g.graph().edge(e);
    bool e_in_h = g.edge_in(e) && in_h[static_cast<size_t>(ed.u)] &&
                  in_h[static_cast<size_t>(ed.v)];
    for (size_t xi = 0; xi < xs.size(); ++xi) {
      NodeId x = xs[xi];
      ExtDist v;
      if (!in_h[static_cast<size_t>(x)] || !e_in_h) {
        v = tree.dist[static_cast<size_t>(x)];
      } else {
        v = inner.query(e, x);
      }
      out.values[ei * xs.size() + xi] = v;
    }
  }
  return out;
}

}  // namespace faultpath
