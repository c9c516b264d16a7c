#include "faultpath/sp_tree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace faultpath {

void SpTree::finalize() {
  size_t n = dist.size();
  children_.assign(n, {});
  subtree_size_.assign(n, 0);
  for (NodeId x = 0; x < static_cast<NodeId>(n); ++x) {
    NodeId p = parent[static_cast<size_t>(x)];
    if (p != kNoNode) children_[static_cast<size_t>(p)].push_back(x);
  }
  pre_in.assign(n, -1);
  pre_out.assign(n, -1);
  order.clear();
  if (source == kNoNode || dist[static_cast<size_t>(source)].is_infinite()) return;
  // Iterative DFS; children are already in ascending node order.
  std::vector<std::pair<NodeId, size_t>> stack;
  int32_t timer = 0;
  pre_in[static_cast<size_t>(source)] = timer++;
  order.push_back(source);
  stack.emplace_back(source, 0);
  while (!stack.empty()) {
    auto& [x, ci] = stack.back();
    if (ci < children_[static_cast<size_t>(x)].size()) {
      NodeId c = children_[static_cast<size_t>(x)][ci++];
      pre_in[static_cast<size_t>(c)] = timer++;
      order.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      pre_out[static_cast<size_t>(x)] = timer;
      subtree_size_[static_cast<size_t>(x)] =
          pre_out[static_cast<size_t>(x)] - pre_in[static_cast<size_t>(x)];
      stack.pop_back();
    }
  }
}

SpTree dijkstra(const GraphView& g, NodeId source) {
  size_t n = static_cast<size_t>(g.node_count());
  if (source < 0 || source >= g.node_count() || !g.node_in(source))
    throw std::invalid_argument("dijkstra: bad source");
  SpTree t;
  t.source = source;
  t.dist.assign(n, ExtDist::infinity());
  t.parent.assign(n, kNoNode);
  t.parent_link.assign(n, kNoEdge);

  using Entry = std::pair<ExtDist, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<uint8_t> done(n, 0);
  t.dist[static_cast<size_t>(source)] = ExtDist::zero();
  heap.emplace(ExtDist::zero(), source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[static_cast<size_t>(u)]) continue;  // lazy deletion
    done[static_cast<size_t>(u)] = 1;
    g.for_neighbors(u, [&](NodeId v, EdgeId link, const ExtDist& w) {
      ExtDist nd = d + w;
      if (nd < t.dist[static_cast<size_t>(v)]) {
        t.dist[static_cast<size_t>(v)] = nd;
        t.parent[static_cast<size_t>(v)] = u;
        t.parent_link[static_cast<size_t>(v)] = link;
        heap.emplace(nd, v);
      }
    });
  }
  t.finalize();
  return t;
}

std::vector<EdgeId> PathOnTree::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(links.size());
  for (const PathLink& l : links)
    if (!is_virtual_link(l.link)) out.push_back(l.link);
  return out;
}

std::vector<std::pair<EdgeId, NodeId>> PathOnTree::link_pairs() const {
  std::vector<std::pair<EdgeId, NodeId>> out;
  out.reserve(links.size());
  for (const PathLink& l : links) out.emplace_back(l.link, l.to);
  return out;
}

PathOnTree extract_path(const SpTree& tree, NodeId target) {
  if (!tree.reachable(target)) throw std::invalid_argument("extract_path: unreachable target");
  PathOnTree p;
  NodeId x = target;
  while (x != tree.source) {
    p.nodes.push_back(x);
    p.links.push_back(PathLink{tree.parent_link[static_cast<size_t>(x)], x});
    x = tree.parent[static_cast<size_t>(x)];
  }
  p.nodes.push_back(tree.source);
  std::reverse(p.nodes.begin(), p.nodes.end());
  std::reverse(p.links.begin(), p.links.end());
  p.prefix.reserve(p.nodes.size());
  for (NodeId v : p.nodes) p.prefix.push_back(tree.dist[static_cast<size_t>(v)]);
  return p;
}

CentroidSplit centroid_split(const SpTree& tree, NodeId root,
                             const std::vector<uint8_t>& member) {
  size_t nn = tree.dist.size();
  auto in = [&](NodeId x) {
    return member.empty() ? tree.reachable(x) : member[static_cast<size_t>(x)] != 0;
  };
  if (!in(root)) throw std::invalid_argument("centroid_split: root not in subtree");

  // Subtree sizes restricted to the member set, via a DFS from root.
  std::vector<int32_t> size(nn, 0);
  std::vector<NodeId> dfs_order;
  {
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      dfs_order.push_back(x);
      for (NodeId c : tree.children(x))
        if (in(c)) stack.push_back(c);
    }
    for (auto it = dfs_order.rbegin(); it != dfs_order.rend(); ++it) {
      size[static_cast<size_t>(*it)] = 1;
      for (NodeId c : tree.children(*it))
        if (in(c)) size[static_cast<size_t>(*it)] += size[static_cast<size_t>(c)];
    }
  }
  int32_t n = size[static_cast<size_t>(root)];
  if (n < 3) throw std::invalid_argument("centroid_split: subtree too small");
  int32_t hi = (2 * n + 2) / 3;  // ceil(2n/3)
  int32_t lo = n / 3;            // floor(n/3)

  auto heaviest_child = [&](NodeId x) {
    NodeId best = kNoNode;
    for (NodeId c : tree.children(x)) {
      if (!in(c)) continue;
      if (best == kNoNode || size[static_cast<size_t>(c)] > size[static_cast<size_t>(best)])
        best = c;
    }
    return best;
  };

  NodeId c = root, parent_of_c = kNoNode;
  while (size[static_cast<size_t>(c)] > hi) {
    parent_of_c = c;
    c = heaviest_child(c);
  }

  CentroidSplit out;
  out.in_t1.assign(nn, 0);
  out.in_t2.assign(nn, 0);
  std::vector<NodeId> bundle_roots;
  if (size[static_cast<size_t>(c)] >= lo + 1) {
    out.centroid = c;
    bundle_roots.push_back(c);
  } else {
    // The walked-to child is too light; bundle children of its parent,
    // heaviest first (node id breaks ties), until the low bound is met.
    out.centroid = parent_of_c;
    std::vector<NodeId> kids;
    for (NodeId k : tree.children(parent_of_c))
      if (in(k)) kids.push_back(k);
    std::stable_sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      return size[static_cast<size_t>(a)] > size[static_cast<size_t>(b)];
    });
    int32_t acc = 0;
    for (NodeId k : kids) {
      bundle_roots.push_back(k);
      acc += size[static_cast<size_t>(k)];
      if (acc >= lo) break;
    }
  }

  // T2 = centroid plus the bundled subtrees; T1 = the rest plus centroid.
  std::vector<NodeId> stack;
  if (out.centroid != c) {
    stack = bundle_roots;
  } else {
    stack.push_back(c);
  }
  out.in_t2[static_cast<size_t>(out.centroid)] = 1;
  out.size_t2 = 1;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    if (!out.in_t2[static_cast<size_t>(x)]) {
      out.in_t2[static_cast<size_t>(x)] = 1;
      ++out.size_t2;
    }
    for (NodeId ch : tree.children(x))
      if (in(ch)) stack.push_back(ch);
  }
  for (NodeId x : dfs_order) {
    if (!out.in_t2[static_cast<size_t>(x)] || x == out.centroid) {
      out.in_t1[static_cast<size_t>(x)] = 1;
      ++out.size_t1;
    }
  }
  return out;
}

}  // namespace faultpath
