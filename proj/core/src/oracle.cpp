#include "faultpath/oracle.hpp"

#include <algorithm>
#include <queue>

#include "faultpath/gadget.hpp"

namespace faultpath {

OracleGraph::OracleGraph(const GraphView& g) : n_(g.node_count()) {
  adj_.resize(static_cast<size_t>(n_));
  for (NodeId u = 0; u < n_; ++u) {
    if (!g.node_in(u)) continue;
    g.for_neighbors(u, [&](NodeId v, EdgeId link, const ExtDist& w) {
      adj_[static_cast<size_t>(u)].push_back(
          Arc{v, is_virtual_link(link) ? kNoEdge : link, w});
    });
  }
}

std::vector<ExtDist> OracleGraph::dist_without(NodeId src,
                                               std::span<const EdgeId> removed) const {
  std::vector<ExtDist> dist(static_cast<size_t>(n_), ExtDist::infinity());
  std::vector<uint8_t> done(static_cast<size_t>(n_), 0);
  dist[static_cast<size_t>(src)] = ExtDist::zero();
  auto relax = [&](NodeId u, const ExtDist& d, auto&& push) {
    for (const Arc& a : adj_[static_cast<size_t>(u)]) {
      if (a.id != kNoEdge &&
          std::find(removed.begin(), removed.end(), a.id) != removed.end())
        continue;
      ExtDist nd = d + a.w;
      if (nd < dist[static_cast<size_t>(a.to)]) {
        dist[static_cast<size_t>(a.to)] = nd;
        push(nd, a.to);
      }
    }
  };
  if (n_ <= 128) {
    // Label-scan variant; also keeps the oracle on a different algorithm
    // than the production heap search.
    for (;;) {
      NodeId u = kNoNode;
      for (NodeId x = 0; x < n_; ++x)
        if (!done[static_cast<size_t>(x)] && dist[static_cast<size_t>(x)].is_finite() &&
            (u == kNoNode || dist[static_cast<size_t>(x)] < dist[static_cast<size_t>(u)]))
          u = x;
      if (u == kNoNode) break;
      done[static_cast<size_t>(u)] = 1;
      relax(u, dist[static_cast<size_t>(u)], [](const ExtDist&, NodeId) {});
    }
    return dist;
  }
  using Entry = std::pair<ExtDist, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.emplace(ExtDist::zero(), src);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[static_cast<size_t>(u)]) continue;
    done[static_cast<size_t>(u)] = 1;
    relax(u, d, [&](const ExtDist& nd, NodeId v) { heap.emplace(nd, v); });
  }
  return dist;
}

namespace {

void enum_paths_rec(const GraphView& g, NodeId u, NodeId t, std::vector<uint8_t>& used,
                    const ExtDist& acc, ExtDist& best) {
  if (u == t) {
    best = min(best, acc);
    return;
  }
  g.for_neighbors(u, [&](NodeId v, EdgeId, const ExtDist& w) {
    if (used[static_cast<size_t>(v)]) return;
    used[static_cast<size_t>(v)] = 1;
    enum_paths_rec(g, v, t, used, acc + w, best);
    used[static_cast<size_t>(v)] = 0;
  });
}

}  // namespace

ExtDist enumerate_paths_dist(const GraphView& g, NodeId s, NodeId t) {
  ExtDist best = ExtDist::infinity();
  std::vector<uint8_t> used(static_cast<size_t>(g.node_count()), 0);
  used[static_cast<size_t>(s)] = 1;
  enum_paths_rec(g, s, t, used, ExtDist::zero(), best);
  return best;
}

BruteRp brute_rp(const GraphView& g, NodeId s, NodeId t) {
  BruteRp out;
  SpTree tree = dijkstra(g, s);
  if (!tree.reachable(t)) return out;
  out.path_edges = extract_path(tree, t).edge_ids();
  OracleGraph og(g);
  for (EdgeId e : out.path_edges) {
    EdgeId removed[1] = {e};
    out.dist.push_back(og.dist_without(s, removed)[static_cast<size_t>(t)]);
  }
  return out;
}

SsrpTable brute_ssrp(const GraphView& g, NodeId source) {
  SsrpTable out;
  out.source = source;
  SpTree tree = dijkstra(g, source);
  out.nofault = tree.dist;
  OracleGraph og(g);
  for (NodeId x : tree.order) {
    EdgeId e = tree.parent_link[static_cast<size_t>(x)];
    if (e < 0) continue;
    EdgeId removed[1] = {e};
    out.rows.emplace(e, og.dist_without(source, removed));
  }
  return out;
}

Brute2Frp::Brute2Frp(const GraphView& g, NodeId s, NodeId t) {
  m_ = g.graph().edge_count();
  OracleGraph og(g);
  nofault_ = og.dist_without(s, {})[static_cast<size_t>(t)];
  single_.reserve(static_cast<size_t>(m_));
  for (EdgeId e = 0; e < m_; ++e) {
    EdgeId removed[1] = {e};
    single_.push_back(og.dist_without(s, removed)[static_cast<size_t>(t)]);
  }
  pair_.resize(static_cast<size_t>(m_) * (static_cast<size_t>(m_) - 1) / 2);
  size_t idx = 0;
  for (EdgeId e = 0; e < m_; ++e) {
    for (EdgeId f = e + 1; f < m_; ++f) {
      EdgeId removed[2] = {e, f};
      pair_[idx++] = og.dist_without(s, removed)[static_cast<size_t>(t)];
    }
  }
}

const ExtDist& Brute2Frp::slot(EdgeId e, EdgeId f) const {
  size_t a = static_cast<size_t>(std::min(e, f));
  size_t b = static_cast<size_t>(std::max(e, f));
  size_t m = static_cast<size_t>(m_);
  // index of (a, b) in the row-major upper triangle
  size_t base = a * m - a * (a + 1) / 2;
  return pair_[base + (b - a - 1)];
}

ExtDist Brute2Frp::query(EdgeId e, EdgeId f) const {
  if (e == f) return single_[static_cast<size_t>(e)];
  return slot(e, f);
}

BruteTriangleResult brute_triangle(const TriangleInstance& inst) {
  BruteTriangleResult out;
  out.exists.assign(static_cast<size_t>(inst.a_count), 0);
  out.min_sum.assign(static_cast<size_t>(inst.a_count), 0);
  // adjacency of B x C as per-b sorted lists
  std::vector<std::vector<std::pair<int32_t, int64_t>>> bc(
      static_cast<size_t>(inst.bc_count));
  for (size_t i = 0; i < inst.edges_bc.size(); ++i) {
    auto [b, c] = inst.edges_bc[i];
    bc[static_cast<size_t>(b)].emplace_back(c, inst.weighted() ? inst.w_bc[i] : 1);
  }
  std::vector<int64_t> ca(static_cast<size_t>(inst.a_count) *
                              static_cast<size_t>(inst.bc_count),
                          -1);
  for (size_t i = 0; i < inst.edges_ca.size(); ++i) {
    auto [c, a] = inst.edges_ca[i];
    int64_t w = inst.weighted() ? inst.w_ca[i] : 1;
    ca[static_cast<size_t>(a) * static_cast<size_t>(inst.bc_count) +
       static_cast<size_t>(c)] = w;
  }
  for (size_t i = 0; i < inst.edges_ab.size(); ++i) {
    auto [a, b] = inst.edges_ab[i];
    int64_t wab = inst.weighted() ? inst.w_ab[i] : 1;
    for (auto [c, wbc] : bc[static_cast<size_t>(b)]) {
      int64_t wca = ca[static_cast<size_t>(a) * static_cast<size_t>(inst.bc_count) +
                       static_cast<size_t>(c)];
      if (wca < 0) continue;
      int64_t sum = wab + wbc + wca;
      size_t ai = static_cast<size_t>(a);
      if (!out.exists[ai] || sum < out.min_sum[ai]) out.min_sum[ai] = sum;
      out.exists[ai] = 1;
    }
  }
  return out;
}

}  // namespace faultpath
