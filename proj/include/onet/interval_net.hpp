#pragma once

// Online net for intervals over a fixed 1D ground set.  Deterministic:
// an arriving interval is ignored unless it is heavy (contains >= eps*n
// ground points, exact rational compare) and currently unhit; in that case
// the one or two median points of its ground intersection are added.
// Against an adaptive adversary the net stays within a 2*(ceil(log2(1/eps))+1)
// factor of the optimal offline hitting set.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "geometry.hpp"
#include "rational.hpp"

namespace onet {

struct IntervalStep {
  Interval sigma;
  bool heavy = false;
  bool was_hit = false;
  std::vector<std::size_t> added;  // indices into the sorted ground order
};

class IntervalNet {
 public:
  IntervalNet(const GroundSet& X, Rational eps) : X_(&X), eps_(eps) {
    if (X.dim() != 1) throw std::invalid_argument("IntervalNet: ground set must be 1D");
    if (!(Rational(0) < eps) || Rational(1) < eps)
      throw std::invalid_argument("IntervalNet: eps must be in (0,1]");
    order_.resize(X.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t a, std::size_t b) { return X.coord(a, 0) < X.coord(b, 0); });
    sorted_.reserve(order_.size());
    for (std::size_t i : order_) sorted_.push_back(X.coord(i, 0));
    threshold_ = heavy_threshold(eps_, std::int64_t(X.size()));
  }

  const Rational& eps() const { return eps_; }
  std::int64_t threshold() const { return threshold_; }

  // sorted-order index range [first,last) of ground points inside sigma
  std::pair<std::size_t, std::size_t> range_of(const Interval& sigma) const {
    auto first = std::lower_bound(sorted_.begin(), sorted_.end(), sigma.lo);
    auto last = std::upper_bound(sorted_.begin(), sorted_.end(), sigma.hi);
    return {std::size_t(first - sorted_.begin()), std::size_t(last - sorted_.begin())};
  }

  bool is_heavy(const Interval& sigma) const {
    auto [a, b] = range_of(sigma);
    return std::int64_t(b - a) >= threshold_;
  }

  bool is_hit(const Interval& sigma) const {
    auto it = net_coords_.lower_bound(sigma.lo);
    return it != net_coords_.end() && *it <= sigma.hi;
  }

  // Process one arrival.  Adds the points at 1-based median positions
  // floor(k/2) and ceil(k/2) of the k covered ground points; the indices
  // coincide when k is even, so even k adds one point and odd k two.
  // k == 1 degenerates to position 0, clamped to the single point.
  IntervalStep process(const Interval& sigma) {
    if (!(sigma.lo <= sigma.hi)) throw std::invalid_argument("IntervalNet: empty interval");
    IntervalStep step;
    step.sigma = sigma;
    auto [a, b] = range_of(sigma);
    std::int64_t k = std::int64_t(b - a);
    step.heavy = k >= threshold_;
    step.was_hit = is_hit(sigma);
    if (!step.heavy || step.was_hit) return step;

    std::int64_t i1 = std::max<std::int64_t>(1, k / 2);
    std::int64_t i2 = (k + 1) / 2;
    add(a + std::size_t(i1 - 1), step);
    if (i2 != i1) add(a + std::size_t(i2 - 1), step);
    steps_.push_back(step);
    return step;
  }

  // net as ground-set point ids
  std::vector<std::size_t> net_ids() const {
    std::vector<std::size_t> ids;
    ids.reserve(net_sorted_idx_.size());
    for (std::size_t s : net_sorted_idx_) ids.push_back(order_[s]);
    return ids;
  }
  std::size_t net_size() const { return net_sorted_idx_.size(); }
  const std::set<double>& net_coords() const { return net_coords_; }
  const std::vector<IntervalStep>& history() const { return steps_; }
  const std::vector<double>& sorted_coords() const { return sorted_; }

 private:
  void add(std::size_t sorted_idx, IntervalStep& step) {
    if (net_sorted_idx_.insert(sorted_idx).second) {
      net_coords_.insert(sorted_[sorted_idx]);
      step.added.push_back(sorted_idx);
    }
  }

  const GroundSet* X_;
  Rational eps_;
  std::int64_t threshold_ = 1;
  std::vector<std::size_t> order_;  // sorted position -> ground id
  std::vector<double> sorted_;
  std::set<std::size_t> net_sorted_idx_;
  std::set<double> net_coords_;
  std::vector<IntervalStep> steps_;  // heavy-and-unhit arrivals only
};

// competitive bound for the interval algorithm: 2*(ceil(log2(1/eps)) + 1)
inline std::int64_t interval_ratio_bound(const Rational& eps) {
  // ceil(log2(den/num)) by integers: smallest t with num * 2^t >= den
  std::int64_t t = 0;
  std::int64_t v = eps.num;
  while (v < eps.den) { v <<= 1; ++t; }
  return 2 * (t + 1);
}

}  // namespace onet
