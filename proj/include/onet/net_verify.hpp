#pragma once

// Exact verification that a candidate net hits every heavy axis-aligned
// rectangle over a 2D point set Q.  "Heavy" is an absolute count: a closed
// rectangle R violates iff |R cap Q| >= t and R contains no net point.
//
// Enumerating all combinatorially distinct rectangles is Theta(k^4) and
// hopeless at k ~ 10^3, but every net-free closed rectangle can be grown
// into a maximal net-free open region of the form
//       (x-gap between consecutive active net x's)  x  (y-slab between
//        consecutive net y's, with +-inf sentinels),
// so checking all slab x gap regions is an exact equivalent.  We sweep the
// slab top per slab bottom and evaluate each gap exactly once, at the
// moment it is split (or at sweep end): gap counts only grow until then.
// Cost O(m * (k + m) * log k) for m net points instead of k^4.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace onet::detail {

struct VerifyPoint {
  double x = 0, y = 0;
  bool is_net = false;
};

struct VerifyResult {
  bool ok = true;
  // open bounds of a violating net-free region when !ok (may be +-inf)
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  std::int64_t count = 0;
};

// Fenwick tree with version stamps so per-sweep resets are O(1)
class StampedFenwick {
 public:
  explicit StampedFenwick(std::size_t n) : val_(n + 1, 0), ver_(n + 1, 0) {}
  void reset() { ++cur_; }
  void add(std::size_t i) {
    for (std::size_t p = i + 1; p < val_.size(); p += p & (0 - p)) {
      if (ver_[p] != cur_) { ver_[p] = cur_; val_[p] = 0; }
      ++val_[p];
    }
  }
  // count of inserted ranks in [0, i]; i may be npos-like (signed -1 -> 0)
  std::int64_t prefix(std::int64_t i) const {
    std::int64_t s = 0;
    for (std::int64_t p = i + 1; p > 0; p -= p & (-p))
      if (ver_[std::size_t(p)] == cur_) s += val_[std::size_t(p)];
    return s;
  }
  // strictly between boundary ranks a and b (sentinels: a=-1, b=K)
  std::int64_t open_range(std::int64_t a, std::int64_t b) const {
    if (b - a <= 1) return 0;
    return prefix(b - 1) - prefix(a);
  }

 private:
  mutable std::vector<std::int64_t> val_;
  mutable std::vector<std::uint32_t> ver_;
  std::uint32_t cur_ = 1;
};

// Every heavy closed rectangle (>= t points of pts) contains a net point?
inline VerifyResult verify_rect_net(const std::vector<VerifyPoint>& pts, std::int64_t t) {
  VerifyResult res;
  const std::size_t k = pts.size();
  if (t < 1) t = 1;             // threshold is >= 1 for every real caller
  if (std::int64_t(k) < t) return res;

  // rank-compress x over distinct values
  std::vector<double> xs(k);
  for (std::size_t i = 0; i < k; ++i) xs[i] = pts[i].x;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::int64_t K = std::int64_t(xs.size());
  auto xrank = [&](double v) {
    return std::int64_t(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
  };
  auto xval = [&](std::int64_t r) {
    if (r < 0) return -std::numeric_limits<double>::infinity();
    if (r >= K) return std::numeric_limits<double>::infinity();
    return xs[std::size_t(r)];
  };

  // global y order; bottoms are net y values (plus -inf)
  std::vector<std::size_t> by_y(k);
  for (std::size_t i = 0; i < k; ++i) by_y[i] = i;
  std::sort(by_y.begin(), by_y.end(),
            [&](std::size_t a, std::size_t b) { return pts[a].y < pts[b].y; });

  std::vector<double> bottoms;
  bottoms.push_back(-std::numeric_limits<double>::infinity());
  for (std::size_t i : by_y)
    if (pts[i].is_net && (bottoms.size() == 1 || bottoms.back() != pts[i].y))
      bottoms.push_back(pts[i].y);

  StampedFenwick fen{std::size_t(K)};

  struct Gap {
    std::int64_t hi;  // right boundary rank (K = +inf)
    std::int64_t cnt;
  };

  const double y_top_inf = std::numeric_limits<double>::infinity();

  for (double y_c : bottoms) {
    // first index in by_y with y strictly above the slab bottom
    std::size_t start = std::size_t(
        std::lower_bound(by_y.begin(), by_y.end(), y_c,
                         [&](std::size_t a, double v) { return pts[a].y <= v; }) -
        by_y.begin());
    if (std::int64_t(k - start) < t) break;  // suffixes only shrink from here

    fen.reset();
    std::map<std::int64_t, Gap> gaps;  // left boundary rank (-1 = -inf) -> gap
    gaps[-1] = Gap{K, 0};

    auto check = [&](std::int64_t lo, const Gap& g, double y_hi) {
      if (g.cnt >= t) {
        res.ok = false;
        res.x_lo = xval(lo);
        res.x_hi = xval(g.hi);
        res.y_lo = y_c;
        res.y_hi = y_hi;
        res.count = g.cnt;
        return true;
      }
      return false;
    };

    std::size_t i = start;
    while (i < k) {
      const double yv = pts[by_y[i]].y;
      std::size_t j = i;
      while (j < k && pts[by_y[j]].y == yv) ++j;

      // splits first: the slab (y_c, yv) excludes everything at yv itself
      for (std::size_t u = i; u < j; ++u) {
        const VerifyPoint& p = pts[by_y[u]];
        if (!p.is_net) continue;
        std::int64_t r = xrank(p.x);
        auto it = gaps.upper_bound(r);
        --it;  // gap with left boundary <= r; always exists (-1 sentinel)
        if (it->first == r || it->second.hi <= r) continue;  // already a boundary
        if (check(it->first, it->second, yv)) return res;
        std::int64_t hi = it->second.hi;
        it->second = Gap{r, fen.open_range(it->first, r)};
        gaps[r] = Gap{hi, fen.open_range(r, hi)};
      }
      // then insert all points at this y (net points land on their own
      // boundary and never count; that is correct, a rectangle containing
      // them is hit by definition)
      for (std::size_t u = i; u < j; ++u) {
        std::int64_t r = xrank(pts[by_y[u]].x);
        auto it = gaps.upper_bound(r);
        --it;
        if (it->first < r && r < it->second.hi) {
          ++it->second.cnt;
          fen.add(std::size_t(r));
        }
      }
      i = j;
    }
    for (auto& [lo, g] : gaps)
      if (check(lo, g, y_top_inf)) return res;
  }
  return res;
}

// Test oracle: literal maximum over all combinatorially distinct closed
// rectangles (boundaries at point coordinates).  Quartic; small inputs only.
inline std::int64_t max_net_free_count_brute(const std::vector<VerifyPoint>& pts) {
  std::vector<double> xs, ys;
  for (auto& p : pts) { xs.push_back(p.x); ys.push_back(p.y); }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::int64_t best = 0;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a; b < xs.size(); ++b)
      for (std::size_t c = 0; c < ys.size(); ++c)
        for (std::size_t d = c; d < ys.size(); ++d) {
          std::int64_t cnt = 0;
          bool free_of_net = true;
          for (auto& p : pts) {
            if (p.x < xs[a] || p.x > xs[b] || p.y < ys[c] || p.y > ys[d]) continue;
            if (p.is_net) { free_of_net = false; break; }
            ++cnt;
          }
          if (free_of_net) best = std::max(best, cnt);
        }
  return best;
}

}  // namespace onet::detail
