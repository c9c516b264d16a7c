#include "faultpath/rmq.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace faultpath {

RangeMin::RangeMin(std::vector<ExtDist> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("RangeMin: empty array");
  size_t n = values_.size();
  int levels = std::bit_width(n);
  table_.resize(static_cast<size_t>(levels));
  table_[0].resize(n);
  for (size_t i = 0; i < n; ++i) table_[0][i] = static_cast<int32_t>(i);
  for (int k = 1; k < levels; ++k) {
    size_t len = size_t(1) << k;
    table_[static_cast<size_t>(k)].resize(n - len + 1);
    for (size_t i = 0; i + len <= n; ++i) {
      table_[static_cast<size_t>(k)][i] = static_cast<int32_t>(
          better(static_cast<size_t>(table_[static_cast<size_t>(k - 1)][i]),
                 static_cast<size_t>(table_[static_cast<size_t>(k - 1)][i + len / 2])));
    }
  }
}

std::pair<ExtDist, size_t> RangeMin::query(size_t a, size_t b) const {
  if (a >= b || b > values_.size()) throw std::invalid_argument("RangeMin: bad range");
  int k = std::bit_width(b - a) - 1;
  size_t i = static_cast<size_t>(table_[static_cast<size_t>(k)][a]);
  size_t j = static_cast<size_t>(table_[static_cast<size_t>(k)][b - (size_t(1) << k)]);
  size_t best = better(i, j);
  // Lowest index among exact ties.
  if (i != j && values_[i] == values_[j]) best = std::min(i, j);
  return {values_[best], best};
}

IntervalSet IntervalSet::interval(int32_t lo, int32_t hi) {
  IntervalSet s;
  if (lo < hi) s.parts_.emplace_back(lo, hi);
  return s;
}

IntervalSet IntervalSet::whole(const SpTree& t) {
  return interval(0, static_cast<int32_t>(t.order.size()));
}

IntervalSet IntervalSet::subtree(const SpTree& t, NodeId root) {
  if (!t.reachable(root)) return {};
  return interval(t.pre_in[static_cast<size_t>(root)], t.pre_out[static_cast<size_t>(root)]);
}

IntervalSet IntervalSet::proper_subtree(const SpTree& t, NodeId root) {
  if (!t.reachable(root)) return {};
  return interval(t.pre_in[static_cast<size_t>(root)] + 1,
                  t.pre_out[static_cast<size_t>(root)]);
}

void IntervalSet::normalize() {
  std::sort(parts_.begin(), parts_.end());
  std::vector<std::pair<int32_t, int32_t>> merged;
  for (auto [lo, hi] : parts_) {
    if (lo >= hi) continue;
    if (!merged.empty() && lo <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, hi);
    } else {
      merged.emplace_back(lo, hi);
    }
  }
  parts_ = std::move(merged);
  if (parts_.size() > kMaxIntervals)
    throw std::invalid_argument("IntervalSet: expression too complex");
}

IntervalSet IntervalSet::minus(const IntervalSet& o) const {
  IntervalSet out;
  for (auto [lo, hi] : parts_) {
    int32_t cur = lo;
    for (auto [olo, ohi] : o.parts_) {
      if (ohi <= cur || olo >= hi) continue;
      if (olo > cur) out.parts_.emplace_back(cur, std::min(olo, hi));
      cur = std::max(cur, ohi);
      if (cur >= hi) break;
    }
    if (cur < hi) out.parts_.emplace_back(cur, hi);
  }
  out.normalize();
  return out;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  IntervalSet out;
  for (auto [lo, hi] : parts_) {
    for (auto [olo, ohi] : o.parts_) {
      int32_t l = std::max(lo, olo), h = std::min(hi, ohi);
      if (l < h) out.parts_.emplace_back(l, h);
    }
  }
  out.normalize();
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  IntervalSet out;
  out.parts_ = parts_;
  out.parts_.insert(out.parts_.end(), o.parts_.begin(), o.parts_.end());
  out.normalize();
  return out;
}

IntervalSet IntervalSet::minus_point(int32_t pos) const {
  return minus(interval(pos, pos + 1));
}

TreeRangeMin::TreeRangeMin(const SpTree& tree, const std::vector<ExtDist>& values)
    : tree_(&tree),
      rm_([&] {
        std::vector<ExtDist> ordered;
        ordered.reserve(std::max<size_t>(tree.order.size(), 1));
        for (NodeId x : tree.order) ordered.push_back(values[static_cast<size_t>(x)]);
        if (ordered.empty()) ordered.push_back(ExtDist::infinity());
        return ordered;
      }()) {}

std::pair<ExtDist, NodeId> TreeRangeMin::query(const IntervalSet& set) const {
  ExtDist best = ExtDist::infinity();
  NodeId arg = kNoNode;
  for (auto [lo, hi] : set.parts()) {
    auto hi_clamped = std::min<size_t>(static_cast<size_t>(hi), rm_.size());
    if (static_cast<size_t>(lo) >= hi_clamped) continue;
    auto [v, idx] = rm_.query(static_cast<size_t>(lo), hi_clamped);
    if (v < best) {
      best = v;
      arg = tree_->order[idx];
    }
  }
  return {best, arg};
}

}  // namespace faultpath
