#include "faultpath/frp2_offpath.hpp"

#include <algorithm>
#include <bit>

#include "faultpath/validation.hpp"

namespace faultpath {

namespace {

// Range-min over a sparse set of (pre-order position, value) points.
class CompactRM {
 public:
  void add(int32_t pos, const ExtDist& v) { pts_.emplace_back(pos, v); }
  void build() {
    std::sort(pts_.begin(), pts_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t n = pts_.size();
    if (n == 0) return;
    int levels = std::bit_width(n);
    tab_.assign(static_cast<size_t>(levels), {});
    tab_[0].resize(n);
    for (size_t i = 0; i < n; ++i) tab_[0][i] = static_cast<int32_t>(i);
    for (int k = 1; k < levels; ++k) {
      size_t len = size_t(1) << k;
      tab_[static_cast<size_t>(k)].resize(n - len + 1);
      for (size_t i = 0; i + len <= n; ++i) {
        int32_t a = tab_[static_cast<size_t>(k - 1)][i];
        int32_t b = tab_[static_cast<size_t>(k - 1)][i + len / 2];
        tab_[static_cast<size_t>(k)][i] =
            pts_[static_cast<size_t>(b)].second < pts_[static_cast<size_t>(a)].second ? b
                                                                                      : a;
      }
    }
  }
  // Minimum over points with position in [lo, hi).
  ExtDist query(int32_t lo, int32_t hi) const {
    if (pts_.empty() || lo >= hi) return ExtDist::infinity();
    auto cmp = [](const std::pair<int32_t, ExtDist>& p, int32_t v) {
      return p.first < v;
    };
    size_t a = static_cast<size_t>(
        std::lower_bound(pts_.begin(), pts_.end(), lo, cmp) - pts_.begin());
    size_t b = static_cast<size_t>(
        std::lower_bound(pts_.begin(), pts_.end(), hi, cmp) - pts_.begin());
    if (a >= b) return ExtDist::infinity();
    int k = std::bit_width(b - a) - 1;
    int32_t i = tab_[static_cast<size_t>(k)][a];
    int32_t j = tab_[static_cast<size_t>(k)][b - (size_t(1) << k)];
    const ExtDist& vi = pts_[static_cast<size_t>(i)].second;
    const ExtDist& vj = pts_[static_cast<size_t>(j)].second;
    return min(vi, vj);
  }

 private:
  std::vector<std::pair<int32_t, ExtDist>> pts_;
  std::vector<std::vector<int32_t>> tab_;
};

}  // namespace

PlacementTag classify(const Orientation& near, const Orientation& far, size_t fault_index,
                      EdgeRef e2) {
  NodeId below_near = near.path_nodes[fault_index + 1];
  bool nu = near.near_tree->in_subtree(below_near, e2.u);
  bool nv = near.near_tree->in_subtree(below_near, e2.v);
  if (nu != nv) return {OffPathCase::kCrossNear};

  NodeId below_far = near.path_nodes[fault_index];  // subtree root in the far tree
  bool fu = far.near_tree->in_subtree(below_far, e2.u);
  bool fv = far.near_tree->in_subtree(below_far, e2.v);
  if (fu != fv) return {OffPathCase::kCrossFar};

  auto tree_child = [&](const SpTree& t) -> NodeId {
    if (t.parent_link[static_cast<size_t>(e2.u)] == e2.id) return e2.u;
    if (t.parent_link[static_cast<size_t>(e2.v)] == e2.id) return e2.v;
    return kNoNode;
  };
  NodeId near_child = tree_child(*near.near_tree);
  if (near_child == kNoNode) return {OffPathCase::kDetourNear};
  NodeId far_child = tree_child(*far.near_tree);
  if (far_child == kNoNode) return {OffPathCase::kDetourFar};

  // In both trees: at least one side has disjoint subtrees. (The trees may
  // enter the edge from the same end; each side uses its own child.)
  bool near_witness = !near.near_tree->in_subtree(below_near, near_child);
  if (validation_enabled() && !near_witness) {
    validate(!far.near_tree->in_subtree(below_far, far_child),
             "tree-tree pair disjoint in neither orientation");
  }
  return {OffPathCase::kTreeTree, near_witness};
}

NeighborMin::NeighborMin(const GraphView& g, const SpTree& near) {
  size_t n = near.dist.size();
  per_node_.resize(n);
  std::vector<std::vector<std::pair<int32_t, ExtDist>>> raw(n);
  for (NodeId x = 0; x < static_cast<NodeId>(n); ++x) {
    if (!g.node_in(x) || !near.reachable(x)) continue;
    int32_t px = near.pre_in[static_cast<size_t>(x)];
    const ExtDist& dx = near.dist[static_cast<size_t>(x)];
    g.for_neighbors(x, [&](NodeId y, EdgeId, const ExtDist& w) {
      raw[static_cast<size_t>(y)].emplace_back(px, dx + w);
    });
  }
  for (size_t y = 0; y < n; ++y) {
    auto& pn = per_node_[y];
    auto& r = raw[y];
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    pn.pos.reserve(r.size());
    pn.val.reserve(r.size());
    for (auto& [p, v] : r) {
      pn.pos.push_back(p);
      pn.val.push_back(v);
    }
    size_t m = pn.val.size();
    if (m == 0) continue;
    int levels = std::bit_width(m);
    pn.table.assign(static_cast<size_t>(levels), {});
    pn.table[0].resize(m);
    for (size_t i = 0; i < m; ++i) pn.table[0][i] = static_cast<int32_t>(i);
    for (int k = 1; k < levels; ++k) {
      size_t len = size_t(1) << k;
      pn.table[static_cast<size_t>(k)].resize(m - len + 1);
      for (size_t i = 0; i + len <= m; ++i) {
        int32_t a = pn.table[static_cast<size_t>(k - 1)][i];
        int32_t b = pn.table[static_cast<size_t>(k - 1)][i + len / 2];
        pn.table[static_cast<size_t>(k)][i] =
            pn.val[static_cast<size_t>(b)] < pn.val[static_cast<size_t>(a)] ? b : a;
      }
    }
  }
}

ExtDist NeighborMin::range_min(const PerNode& pn, int32_t lo, int32_t hi) const {
  size_t a = static_cast<size_t>(std::lower_bound(pn.pos.begin(), pn.pos.end(), lo) -
                                 pn.pos.begin());
  size_t b = static_cast<size_t>(std::lower_bound(pn.pos.begin(), pn.pos.end(), hi) -
                                 pn.pos.begin());
  if (a >= b) return ExtDist::infinity();
  int k = std::bit_width(b - a) - 1;
  int32_t i = pn.table[static_cast<size_t>(k)][a];
  int32_t j = pn.table[static_cast<size_t>(k)][b - (size_t(1) << k)];
  return min(pn.val[static_cast<size_t>(i)], pn.val[static_cast<size_t>(j)]);
}

ExtDist NeighborMin::query(NodeId y, const IntervalSet& xs) const {
  const PerNode& pn = per_node_[static_cast<size_t>(y)];
  ExtDist best = ExtDist::infinity();
  for (auto [lo, hi] : xs.parts()) best = min(best, range_min(pn, lo, hi));
  return best;
}

namespace {

struct CmState {
  const GraphView* g;
  const SpTree* near;
  const SsrpTable* far;
  const std::vector<EdgeId>* fps;
  std::map<std::pair<EdgeId, EdgeId>, ExtDist> out;
  std::vector<ExtDist> h, h_noc;
  std::vector<NodeId> touched;

  void accumulate(EdgeId f, EdgeId fp, const ExtDist& v) {
    if (v.is_infinite()) return;
    auto [it, ins] = out.emplace(std::make_pair(f, fp), v);
    if (!ins) it->second = min(it->second, v);
  }
};

NodeId edge_child(const SpTree& t, const WeightedGraph::Edge& ed, EdgeId e) {
  if (t.parent_link[static_cast<size_t>(ed.u)] == e) return ed.u;
  if (t.parent_link[static_cast<size_t>(ed.v)] == e) return ed.v;
  return kNoNode;
}

// The cross-contribution of one split branch: faults f in `fs_part`, entry
// points x in `opp` (which contains the centroid).
void cm_branch(CmState& st, const CentroidSplit& split, bool part_is_root_side,
               const std::vector<NodeId>& opp, const std::vector<EdgeId>& fs_part) {
  if (fs_part.empty() || opp.empty()) return;
  const SpTree& near = *st.near;
  NodeId c = split.centroid;

  for (NodeId x : opp) {
    size_t hx = static_cast<size_t>(x);
    const ExtDist& dx = near.dist[hx];
    st.g->for_neighbors(x, [&](NodeId y, EdgeId, const ExtDist& w) {
      size_t yi = static_cast<size_t>(y);
      ExtDist cand = dx + w;
      if (st.h[yi].is_infinite() && st.h_noc[yi].is_infinite()) st.touched.push_back(y);
      st.h[yi] = min(st.h[yi], cand);
      if (x != c) st.h_noc[yi] = min(st.h_noc[yi], cand);
    });
  }

  for (EdgeId fp : *st.fps) {
    CompactRM rm;
    for (NodeId y : st.touched) {
      if (!near.reachable(y)) continue;
      rm.add(near.pre_in[static_cast<size_t>(y)],
             st.h[static_cast<size_t>(y)] + st.far->query(fp, y));
    }
    rm.build();
    for (EdgeId f : fs_part) {
      const auto& ed = st.g->graph().edge(f);
      NodeId ch = edge_child(near, ed, f);
      NodeId par = ed.u == ch ? ed.v : ed.u;
      if (part_is_root_side && near.in_subtree(ch, c)) continue;  // empty domain
      int32_t lo = near.pre_in[static_cast<size_t>(ch)];
      int32_t hi = near.pre_out[static_cast<size_t>(ch)];
      ExtDist v;
      if (par == c) {
        v = rm.query(lo + 1, hi);
        ExtDist corr = st.h_noc[static_cast<size_t>(ch)] + st.far->query(fp, ch);
        v = min(v, corr);
      } else {
        v = rm.query(lo, hi);
      }
      st.accumulate(f, fp, v);
    }
  }

  for (NodeId y : st.touched) {
    st.h[static_cast<size_t>(y)] = ExtDist::infinity();
    st.h_noc[static_cast<size_t>(y)] = ExtDist::infinity();
  }
  st.touched.clear();
}

void cm_rec(CmState& st, NodeId root, const std::vector<uint8_t>& member,
            const std::vector<EdgeId>& fs) {
  if (fs.empty()) return;
  const SpTree& near = *st.near;
  int32_t count = 0;
  for (uint8_t b : member) count += b;

  if (count <= 2) {
    for (EdgeId f : fs) {
      const auto& ed = st.g->graph().edge(f);
      NodeId ch = edge_child(near, ed, f);
      NodeId par = ed.u == ch ? ed.v : ed.u;
      std::vector<std::pair<NodeId, ExtDist>> cands;
      st.g->for_neighbors(par, [&](NodeId y, EdgeId link, const ExtDist& w) {
        if (link == f || !near.in_subtree(ch, y)) return;
        cands.emplace_back(y, near.dist[static_cast<size_t>(par)] + w);
      });
      for (EdgeId fp : *st.fps) {
        ExtDist v = ExtDist::infinity();
        for (auto& [y, base] : cands) v = min(v, base + st.far->query(fp, y));
        st.accumulate(f, fp, v);
      }
    }
    return;
  }

  CentroidSplit split = centroid_split(near, root, member);
  std::vector<EdgeId> fs1, fs2;
  for (EdgeId f : fs) {
    const auto& ed = st.g->graph().edge(f);
    bool in2 = split.in_t2[static_cast<size_t>(ed.u)] &&
               split.in_t2[static_cast<size_t>(ed.v)];
    (in2 ? fs2 : fs1).push_back(f);
  }
  std::vector<NodeId> members1, members2;
  for (NodeId x = 0; x < static_cast<NodeId>(member.size()); ++x) {
    if (split.in_t1[static_cast<size_t>(x)]) members1.push_back(x);
    if (split.in_t2[static_cast<size_t>(x)]) members2.push_back(x);
  }
  cm_branch(st, split, /*part_is_root_side=*/true, members2, fs1);
  cm_branch(st, split, /*part_is_root_side=*/false, members1, fs2);
  cm_rec(st, root, split.in_t1, fs1);
  cm_rec(st, split.centroid, split.in_t2, fs2);
}

}  // namespace

std::map<std::pair<EdgeId, EdgeId>, ExtDist> centroid_min(
    const GraphView& g, const SpTree& near_tree, const SsrpTable& far_ssrp, NodeId root,
    const std::vector<uint8_t>& member, const std::vector<EdgeId>& fs,
    const std::vector<EdgeId>& fps) {
  CmState st;
  st.g = &g;
  st.near = &near_tree;
  st.far = &far_ssrp;
  st.fps = &fps;
  size_t n = near_tree.dist.size();
  st.h.assign(n, ExtDist::infinity());
  st.h_noc.assign(n, ExtDist::infinity());
  std::vector<uint8_t> mem = member;
  if (mem.empty()) {
    mem.assign(n, 0);
    for (NodeId x : near_tree.order) mem[static_cast<size_t>(x)] = 1;
  }
  cm_rec(st, root, mem, fs);
  return std::move(st.out);
}

std::map<std::pair<EdgeId, EdgeId>, ExtDist> solve_case_detour(
    const GraphView& g, const Orientation& o, const std::vector<OffPair>& pairs) {
  std::map<std::pair<EdgeId, EdgeId>, ExtDist> out;
  if (pairs.empty()) return out;
  std::vector<EdgeId> fs, fps;
  for (const OffPair& p : pairs) {
    fs.push_back(o.path_ids[p.fault_index]);
    fps.push_back(p.e2);
  }
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  std::sort(fps.begin(), fps.end());
  fps.erase(std::unique(fps.begin(), fps.end()), fps.end());

  auto table = centroid_min(g, *o.near_tree, *o.far_ssrp, o.from, {}, fs, fps);
  for (const OffPair& p : pairs) {
    EdgeId e = o.path_ids[p.fault_index];
    auto it = table.find(std::make_pair(e, p.e2));
    out.emplace(std::make_pair(e, p.e2),
                it == table.end() ? ExtDist::infinity() : it->second);
  }
  return out;
}

namespace {

struct WinPair {
  EdgeId e, e2;
  int32_t p, q;  // fault path position (1-based node of the lower endpoint), slab of e2
  NodeId ech;    // path node below the fault
  NodeId ch2;    // child endpoint of e2 in the near tree
};

struct TreeCaseState {
  const GraphView* g;
  const Orientation* o;
  const NeighborMin* nm;
  std::vector<std::vector<NodeId>> buckets;  // nodes by deepest path ancestor
  std::map<std::pair<EdgeId, EdgeId>, ExtDist> out;

  void accumulate(EdgeId e, EdgeId e2, const ExtDist& v) {
    auto [it, ins] = out.emplace(std::make_pair(e, e2), v);
    if (!ins) it->second = min(it->second, v);
  }

  int64_t slab_size(int32_t i, int32_t j) const {
    const SpTree& near = *o->near_tree;
    int64_t s = near.subtree_size(o->path_nodes[static_cast<size_t>(i)]);
    if (j < static_cast<int32_t>(o->path_nodes.size()))
      s -= near.subtree_size(o->path_nodes[static_cast<size_t>(j)]);
    return s + (i > 0 ? 1 : 0);
  }

  void window(int32_t i, int32_t j, int32_t k, const std::vector<WinPair>& wps);
  void solve(int32_t i, int32_t k, std::vector<WinPair> wps);
};

void TreeCaseState::window(int32_t i, int32_t j, int32_t k,
                           const std::vector<WinPair>& wps) {
  if (wps.empty()) return;
  const SpTree& near = *o->near_tree;
  const SsrpTable& far = *o->far_ssrp;
  const int32_t l = static_cast<int32_t>(o->path_nodes.size());
  auto vnode = [&](int32_t a) { return o->path_nodes[static_cast<size_t>(a)]; };

  std::vector<std::pair<EdgeId, NodeId>> es, e2s;  // (edge, subtree child)
  for (const WinPair& w : wps) {
    es.emplace_back(w.e, w.ech);
    e2s.emplace_back(w.e2, w.ch2);
  }
  auto dedup = [](std::vector<std::pair<EdgeId, NodeId>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(es);
  dedup(e2s);

  IntervalSet whole = IntervalSet::whole(near);
  IntervalSet sub_vi = IntervalSet::subtree(near, vnode(i));
  IntervalSet sub_vj = IntervalSet::subtree(near, vnode(j));
  IntervalSet sub_vk = k < l ? IntervalSet::subtree(near, vnode(k)) : IntervalSet();
  IntervalSet g0i = i > 0 ? whole.minus(sub_vi) : IntervalSet();
  IntervalSet g0j = whole.minus(sub_vj);
  int32_t pre_vj1 = near.pre_in[static_cast<size_t>(vnode(j - 1))];
  IntervalSet slab2 = sub_vj.minus(sub_vk).unite(IntervalSet::interval(pre_vj1, pre_vj1 + 1));

  std::vector<NodeId> ys;  // slab [i, j) members
  for (int32_t a = i; a < j; ++a)
    ys.insert(ys.end(), buckets[static_cast<size_t>(a)].begin(),
              buckets[static_cast<size_t>(a)].end());

  // x above the window, y in the e2 subtree
  if (i > 0) {
    std::vector<ExtDist> h1(ys.size());
    for (size_t yi = 0; yi < ys.size(); ++yi) h1[yi] = nm->query(ys[yi], g0i);
    for (auto& [e, ech] : es) {
      CompactRM rm;
      for (size_t yi = 0; yi < ys.size(); ++yi)
        rm.add(near.pre_in[static_cast<size_t>(ys[yi])], h1[yi] + far.query(e, ys[yi]));
      rm.build();
      for (const WinPair& w : wps) {
        if (w.e != e) continue;
        ExtDist v = rm.query(near.pre_in[static_cast<size_t>(w.ch2)],
                             near.pre_out[static_cast<size_t>(w.ch2)]);
        accumulate(w.e, w.e2, v);
      }
    }
  }

  // x in the window slab above e2, y in the e2 subtree
  {
    std::vector<uint8_t> member1(near.dist.size(), 0);
    for (int32_t a = i; a < j; ++a)
      for (NodeId x : buckets[static_cast<size_t>(a)])
        member1[static_cast<size_t>(x)] = 1;
    NodeId root1 = i > 0 ? vnode(i - 1) : o->from;
    if (i > 0) member1[static_cast<size_t>(vnode(i - 1))] = 1;
    std::vector<EdgeId> fs, fps;
    for (auto& [e2, ch2] : e2s) fs.push_back(e2);
    for (auto& [e, ech] : es) fps.push_back(e);
    auto cm = centroid_min(*g, near, far, root1, member1, fs, fps);
    for (const WinPair& w : wps) {
      auto it = cm.find(std::make_pair(w.e2, w.e));
      if (it != cm.end()) accumulate(w.e, w.e2, it->second);
    }
  }

  // x in the lower slab outside the fault subtree, y in the e2 subtree
  for (auto& [e, ech] : es) {
    IntervalSet xset = slab2.minus(IntervalSet::subtree(near, ech));
    CompactRM rm;
    std::vector<ExtDist> h4(ys.size());
    for (size_t yi = 0; yi < ys.size(); ++yi) {
      h4[yi] = nm->query(ys[yi], xset);
      rm.add(near.pre_in[static_cast<size_t>(ys[yi])], h4[yi] + far.query(e, ys[yi]));
    }
    rm.build();
    for (const WinPair& w : wps) {
      if (w.e != e) continue;
      int32_t lo = near.pre_in[static_cast<size_t>(w.ch2)];
      int32_t hi = near.pre_out[static_cast<size_t>(w.ch2)];
      NodeId par2 = near.parent[static_cast<size_t>(w.ch2)];
      ExtDist v;
      if (par2 == vnode(j - 1)) {
        v = rm.query(lo + 1, hi);
        ExtDist corr = nm->query(w.ch2, xset.minus_point(pre_vj1)) + far.query(e, w.ch2);
        v = min(v, corr);
      } else {
        v = rm.query(lo, hi);
      }
      accumulate(w.e, w.e2, v);
    }
  }

  // x above the e2 subtree, y in the fault subtree
  for (auto& [e2, ch2] : e2s) {
    IntervalSet xset = g0j.minus(IntervalSet::subtree(near, ch2));
    std::vector<ExtDist> vals(near.dist.size(), ExtDist::infinity());
    for (NodeId y : near.order)
      vals[static_cast<size_t>(y)] = nm->query(y, xset) + far.query(e2, y);
    TreeRangeMin trm(near, vals);
    for (const WinPair& w : wps) {
      if (w.e2 != e2) continue;
      ExtDist v;
      if (w.p == j) {
        v = trm.query(IntervalSet::proper_subtree(near, w.ech)).first;
        ExtDist corr = nm->query(w.ech, xset.minus_point(pre_vj1)) + far.query(e2, w.ech);
        v = min(v, corr);
      } else {
        v = trm.query(IntervalSet::subtree(near, w.ech)).first;
      }
      accumulate(w.e, w.e2, v);
    }
  }

  // x in the lower slab, y in the fault subtree
  {
    std::vector<uint8_t> member2(near.dist.size(), 0);
    for (int32_t a = j; a < k; ++a)
      for (NodeId x : buckets[static_cast<size_t>(a)])
        member2[static_cast<size_t>(x)] = 1;
    member2[static_cast<size_t>(vnode(j - 1))] = 1;
    std::vector<EdgeId> fs, fps;
    for (auto& [e, ech] : es) fs.push_back(e);
    for (auto& [e2, ch2] : e2s) fps.push_back(e2);
    auto cm = centroid_min(*g, near, far, vnode(j - 1), member2, fs, fps);
    for (const WinPair& w : wps) {
      auto it = cm.find(std::make_pair(w.e, w.e2));
      if (it != cm.end()) accumulate(w.e, w.e2, it->second);
    }
  }
}

void TreeCaseState::solve(int32_t i, int32_t k, std::vector<WinPair> wps) {
  if (wps.empty()) return;
  validate(k > i + 1, "window recursion: pairs in a trivial range");
  int64_t total = slab_size(i, k);
  int32_t j = i + 1;
  while (j < k && 3 * slab_size(i, j) < total) ++j;

  std::vector<WinPair> left, right, win1, win2;
  if (3 * slab_size(i, j) <= 2 * total) {
    for (const WinPair& w : wps) {
      if (w.p < j) left.push_back(w);
      else if (w.q >= j) right.push_back(w);
      else win1.push_back(w);
    }
    window(i, j, k, win1);
    solve(i, j, std::move(left));
    solve(j, k, std::move(right));
  } else {
    for (const WinPair& w : wps) {
      if (w.p < j - 1) left.push_back(w);
      else if (w.q >= j) right.push_back(w);
      else if (w.q == j - 1) win2.push_back(w);
      else win1.push_back(w);
    }
    if (j - 1 > i) {
      window(i, j - 1, k, win1);
    } else {
      validate(win1.empty(), "window recursion: dropped pairs");
    }
    window(j - 1, j, k, win2);
    solve(i, j - 1, std::move(left));
    solve(j, k, std::move(right));
  }
}

}  // namespace

std::map<std::pair<EdgeId, EdgeId>, ExtDist> solve_case_tree(
    const GraphView& g, const Orientation& o, const NeighborMin& nm,
    const std::vector<OffPair>& pairs) {
  std::map<std::pair<EdgeId, EdgeId>, ExtDist> out;
  if (pairs.empty()) return out;
  const SpTree& near = *o.near_tree;
  const int32_t l = static_cast<int32_t>(o.path_nodes.size());

  TreeCaseState st;
  st.g = &g;
  st.o = &o;
  st.nm = &nm;
  st.buckets.resize(static_cast<size_t>(l));
  for (NodeId x : near.order) {
    int32_t a = o.anc[static_cast<size_t>(x)];
    if (a >= 0) st.buckets[static_cast<size_t>(a)].push_back(x);
  }

  std::vector<WinPair> wps;
  for (const OffPair& p : pairs) {
    WinPair w;
    w.e = o.path_ids[p.fault_index];
    w.e2 = p.e2;
    w.p = static_cast<int32_t>(p.fault_index) + 1;
    w.ech = o.path_nodes[static_cast<size_t>(w.p)];
    const auto& ed = g.graph().edge(p.e2);
    w.ch2 = near.parent_link[static_cast<size_t>(ed.u)] == p.e2 ? ed.u : ed.v;
    w.q = o.anc[static_cast<size_t>(w.ch2)];
    validate(w.q >= 0 && w.q < w.p, "tree case: pair without witness");
    wps.push_back(w);
  }
  st.solve(0, l, std::move(wps));

  for (const OffPair& p : pairs) {
    auto key = std::make_pair(o.path_ids[p.fault_index], p.e2);
    auto it = st.out.find(key);
    out.emplace(key, it == st.out.end() ? ExtDist::infinity() : it->second);
  }
  return out;
}

}  // namespace faultpath
