#include "faultpath/rp_sweep.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "faultpath/validation.hpp"

namespace faultpath {

std::vector<int32_t> deepest_path_ancestor(const SpTree& from_s,
                                           const std::vector<NodeId>& path_nodes) {
  std::vector<int32_t> pos(from_s.dist.size(), -1);
  for (size_t q = 0; q < path_nodes.size(); ++q)
    pos[static_cast<size_t>(path_nodes[q])] = static_cast<int32_t>(q);
  std::vector<int32_t> anc(from_s.dist.size(), -1);
  for (NodeId x : from_s.order) {
    size_t xi = static_cast<size_t>(x);
    if (pos[xi] >= 0) {
      anc[xi] = pos[xi];
    } else if (x != from_s.source) {
      anc[xi] = anc[static_cast<size_t>(from_s.parent[xi])];
    }
  }
  return anc;
}

RpResult rp_sweep(const GraphView& g, NodeId s, NodeId t, const SpTree& from_s,
                  const SpTree& from_t, const SsrpTable& far_ssrp) {
  RpResult out;
  if (!from_s.reachable(t)) return out;
  out.path = extract_path(from_s, t);
  out.path_edges = out.path.edge_ids();
  const size_t hops = out.path.hops();
  validate(out.path_edges.size() == hops, "rp_sweep: virtual edge on base path");

  std::vector<int32_t> anc = deepest_path_ancestor(from_s, out.path.nodes);

  // Per non-path edge {x, y}: active at fault positions p in (anc_lo, anc_hi],
  // with the deeper endpoint inside the cut subtree.
  struct Cand {
    ExtDist key;
    EdgeId e;
    NodeId outside, inside;
    int32_t lo, hi;
  };
  std::vector<Cand> cands;
  std::unordered_set<EdgeId> on_path(out.path_edges.begin(), out.path_edges.end());
  for (EdgeId e = 0; e < g.graph().edge_count(); ++e) {
    if (!g.edge_in(e) || on_path.contains(e)) continue;
    const auto& ed = g.graph().edge(e);
    int32_t au = anc[static_cast<size_t>(ed.u)], av = anc[static_cast<size_t>(ed.v)];
    if (au < 0 || av < 0 || au == av) continue;
    NodeId outside = au < av ? ed.u : ed.v;
    NodeId inside = au < av ? ed.v : ed.u;
    if (!from_t.reachable(inside)) continue;
    ExtDist key = from_s.dist[static_cast<size_t>(outside)] + g.graph().edge_dist(e) +
                  from_t.dist[static_cast<size_t>(inside)];
    cands.push_back(Cand{key, e, outside, inside, std::min(au, av), std::max(au, av)});
  }
  std::vector<size_t> by_lo(cands.size()), by_hi(cands.size());
  for (size_t i = 0; i < cands.size(); ++i) by_lo[i] = by_hi[i] = i;
  std::sort(by_lo.begin(), by_lo.end(),
            [&](size_t a, size_t b) { return cands[a].lo < cands[b].lo; });
  std::sort(by_hi.begin(), by_hi.end(),
            [&](size_t a, size_t b) { return cands[a].hi < cands[b].hi; });

  std::set<std::pair<ExtDist, EdgeId>> active;
  size_t next_in = 0, next_out = 0;
  std::vector<const Cand*> by_edge(static_cast<size_t>(g.graph().edge_count()), nullptr);
  for (const Cand& c : cands) by_edge[static_cast<size_t>(c.e)] = &c;

  out.dist.assign(hops, ExtDist::infinity());
  out.crossing.assign(hops, kNoEdge);
  out.dual.assign(hops, ExtDist::infinity());
  out.replacement.assign(hops, {});
  std::unordered_set<EdgeId> union_set;

  for (int32_t p = 1; p <= static_cast<int32_t>(hops); ++p) {
    while (next_in < by_lo.size() && cands[by_lo[next_in]].lo + 1 <= p) {
      const Cand& c = cands[by_lo[next_in]];
      if (validation_enabled()) {
        auto it = active.lower_bound({c.key, kNoEdge});
        validate(it == active.end() || !(it->first == c.key),
                 "rp_sweep: exact key tie between distinct edges");
      }
      active.emplace(c.key, c.e);
      ++next_in;
    }
    while (next_out < by_hi.size() && cands[by_hi[next_out]].hi < p) {
      const Cand& c = cands[by_hi[next_out]];
      active.erase({c.key, c.e});
      ++next_out;
    }
    size_t pe = static_cast<size_t>(p) - 1;
    if (active.empty()) continue;
    auto it = active.begin();
    out.dist[pe] = it->first;
    out.crossing[pe] = it->second;
    if (far_ssrp.has_row(it->second)) {
      // The crossing edge is a tree edge of t: candidate tails must be
      // re-read from the fault table, not the no-fault distances.
      ExtDist best = ExtDist::infinity();
      for (auto& [key, e2] : active) {
        if (e2 == it->second) continue;
        const Cand& c = *by_edge[static_cast<size_t>(e2)];
        best = min(best, from_s.dist[static_cast<size_t>(c.outside)] +
                             g.graph().edge_dist(e2) + far_ssrp.query(it->second, c.inside));
      }
      out.dual[pe] = best;
    } else if (std::next(it) != active.end()) {
      out.dual[pe] = std::next(it)->first;
    }

    // pi(s, outside) + {outside, inside} + pi(inside, t)
    const Cand& c = *by_edge[static_cast<size_t>(it->second)];
    std::vector<EdgeId>& repl = out.replacement[pe];
    {
      std::vector<EdgeId> front;
      for (NodeId x = c.outside; x != s; x = from_s.parent[static_cast<size_t>(x)])
        front.push_back(from_s.parent_link[static_cast<size_t>(x)]);
      std::reverse(front.begin(), front.end());
      repl = std::move(front);
      repl.push_back(c.e);
      for (NodeId x = c.inside; x != t; x = from_t.parent[static_cast<size_t>(x)])
        repl.push_back(from_t.parent_link[static_cast<size_t>(x)]);
    }
    for (EdgeId e : repl) union_set.insert(e);

    if (validation_enabled()) {
      // Exactly one replacement edge crosses the fault's subtree cut, and it
      // is the chosen candidate.
      int crossings = 0;
      for (EdgeId e : repl) {
        const auto& ed = g.graph().edge(e);
        bool bu = from_s.in_subtree(out.path.nodes[static_cast<size_t>(p)], ed.u);
        bool bv = from_s.in_subtree(out.path.nodes[static_cast<size_t>(p)], ed.v);
        if (bu != bv && !on_path.contains(e)) {
          ++crossings;
          validate(e == it->second, "rp_sweep: crossing edge mismatch");
        }
      }
      validate(crossings == 1, "rp_sweep: crossing edge not unique");
    }
  }
  out.union_edges.assign(union_set.begin(), union_set.end());
  std::sort(out.union_edges.begin(), out.union_edges.end());
  return out;
}

}  // namespace faultpath
