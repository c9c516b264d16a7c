#ifndef FAULTPATH_RMQ_HPP_
#define FAULTPATH_RMQ_HPP_

#include <utility>
#include <vector>

#include "faultpath/ext_dist.hpp"
#include "faultpath/sp_tree.hpp"

namespace faultpath {

// Sparse-table range minimum over ExtDist values. O(n log n) build, O(1)
// query; the argmin is the lowest attaining index.
class RangeMin {
 public:
  explicit RangeMin(std::vector<ExtDist> values);

  size_t size() const { return values_.size(); }
  const ExtDist& value(size_t i) const { return values_[i]; }

  // Minimum over [a, b); throws on an empty or inverted range.
  std::pair<ExtDist, size_t> query(size_t a, size_t b) const;

 private:
  size_t better(size_t i, size_t j) const {
    return values_[j] < values_[i] ? j : i;
  }

  std::vector<ExtDist> values_;
  std::vector<std::vector<int32_t>> table_;  // table_[k][i]: argmin of [i, i+2^k)
};

// A union of at most kMaxIntervals disjoint pre-order intervals, closed under
// the set algebra the callers need: subtrees, differences, intersections and
// single-point removals.
class IntervalSet {
 public:
  static constexpr int kMaxIntervals = 8;

  IntervalSet() = default;
  static IntervalSet interval(int32_t lo, int32_t hi);
  static IntervalSet whole(const SpTree& t);
  static IntervalSet subtree(const SpTree& t, NodeId root);
  // Subtree without its root position.
  static IntervalSet proper_subtree(const SpTree& t, NodeId root);

  IntervalSet minus(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet minus_point(int32_t pos) const;

  bool empty() const { return parts_.empty(); }
  const std::vector<std::pair<int32_t, int32_t>>& parts() const { return parts_; }

 private:
  void normalize();
  std::vector<std::pair<int32_t, int32_t>> parts_;  // sorted, disjoint [lo, hi)
};

// Range minimum over per-node values laid out in a tree's pre-order.
class TreeRangeMin {
 public:
  // values are indexed by node id; unreachable nodes are ignored.
  TreeRangeMin(const SpTree& tree, const std::vector<ExtDist>& values);

  // Minimum over the node set; (infinity, kNoNode) if empty.
  std::pair<ExtDist, NodeId> query(const IntervalSet& set) const;

  const SpTree& tree() const { return *tree_; }

 private:
  const SpTree* tree_;
  RangeMin rm_;
};

}  // namespace faultpath

#endif  // FAULTPATH_RMQ_HPP_
