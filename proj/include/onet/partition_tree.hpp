#pragma once

// Median partition tree along a single axis.  Built over a caller-provided
// id order (sorted by the axis value, ties broken by the caller); every node
// holding more than `threshold` points splits at the median: the left child
// takes the first ceil(m/2) ids and the dividing line is the largest axis
// value inside it.  A node's region is the open interval bounded by the
// ancestor lines, so sibling regions share only the line itself.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace onet {

struct TreeNode {
  std::size_t begin = 0, end = 0;  // [begin,end) into the tree's id order
  int left = -1, right = -1, parent = -1;
  int depth = 0;
  double split = 0.0;  // dividing line, valid iff internal
  double region_lo = -std::numeric_limits<double>::infinity();
  double region_hi = std::numeric_limits<double>::infinity();

  bool leaf() const { return left < 0; }
  std::size_t count() const { return end - begin; }
};

struct WalkStop {
  int node = -1;
  bool crossing = false;  // stopped at a node whose line meets the query
};

class PartitionTree {
 public:
  PartitionTree() = default;

  // `ids` must be pre-sorted by coord_by_id ascending (tie order is up to
  // the caller and is preserved by the split rule).
  PartitionTree(std::vector<std::size_t> ids, const std::vector<double>& coord_by_id,
                std::int64_t threshold)
      : ids_(std::move(ids)), threshold_(threshold) {
    if (threshold < 1) throw std::invalid_argument("PartitionTree: threshold must be >= 1");
    coord_.reserve(ids_.size());
    for (std::size_t id : ids_) {
      if (id >= coord_by_id.size())
        throw std::invalid_argument("PartitionTree: id out of range");
      coord_.push_back(coord_by_id[id]);
    }
    for (std::size_t i = 1; i < coord_.size(); ++i)
      if (coord_[i - 1] > coord_[i])
        throw std::invalid_argument("PartitionTree: ids not sorted by coordinate");
    if (ids_.empty()) return;

    TreeNode root;
    root.begin = 0;
    root.end = ids_.size();
    nodes_.push_back(root);
    std::vector<int> work = {0};
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      std::size_t m = nodes_[v].count();
      if (std::int64_t(m) <= threshold_) continue;
      std::size_t half = (m + 1) / 2;  // left child takes the larger half
      double line = coord_[nodes_[v].begin + half - 1];

      TreeNode l, r;
      l.begin = nodes_[v].begin;
      l.end = l.begin + half;
      l.parent = v;
      l.depth = nodes_[v].depth + 1;
      l.region_lo = nodes_[v].region_lo;
      l.region_hi = line;
      r.begin = l.end;
      r.end = nodes_[v].end;
      r.parent = v;
      r.depth = l.depth;
      r.region_lo = line;
      r.region_hi = nodes_[v].region_hi;

      nodes_[v].split = line;
      nodes_[v].left = int(nodes_.size());
      nodes_.push_back(l);
      nodes_[v].right = int(nodes_.size());
      nodes_.push_back(r);
      work.push_back(nodes_[v].left);
      work.push_back(nodes_[v].right);
    }
  }

  int root() const { return nodes_.empty() ? -1 : 0; }
  std::size_t node_count() const { return nodes_.size(); }
  const TreeNode& node(int i) const { return nodes_[std::size_t(i)]; }
  const std::vector<std::size_t>& order() const { return ids_; }
  std::int64_t threshold() const { return threshold_; }

  // Walk from the root toward the query interval [lo,hi]: descend into the
  // child whose region contains it and stop at the first node whose line
  // meets the interval, or at a leaf.  Along the way the interval stays
  // inside the closure of the current node's region, and all ground points
  // with coordinate in [lo,hi] stay inside the current subtree.
  WalkStop find_stop(double lo, double hi) const {
    if (nodes_.empty()) return {};
    int v = 0;
    for (;;) {
      const TreeNode& nd = nodes_[std::size_t(v)];
      if (nd.leaf()) return {v, false};
      if (lo <= nd.split && nd.split <= hi) return {v, true};
      v = hi < nd.split ? nd.left : nd.right;
    }
  }

  std::int64_t max_depth() const {
    std::int64_t d = 0;
    for (const TreeNode& nd : nodes_) d = std::max<std::int64_t>(d, nd.depth);
    return d;
  }

 private:
  std::vector<std::size_t> ids_;
  std::vector<double> coord_;  // aligned with ids_
  std::vector<TreeNode> nodes_;
  std::int64_t threshold_ = 1;
};

}  // namespace onet
