#pragma once

// Offline optima used as competitive-ratio denominators and as test oracles.
//
// Three exact solvers cover the instance sizes the harness feeds them: a
// greedy sweep for 1D interval stabbing restricted to the ground set (exact
// by the usual exchange argument), and two branch-and-bound searches, one for
// minimum hitting sets of heavy rectangles over a small ground set and one
// for piercing small families of axis boxes from the whole ambient space.
// Families beyond the exact limits fall back to piercing_bounds(), which
// brackets the optimum between a pairwise-disjoint subfamily and a greedy
// piercing.  Every oracle re-checks its own certificate before returning.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "rational.hpp"

namespace onet {

struct OracleLimits {
  std::size_t points = 24;   // ground-set cap for the rectangle search
  std::size_t sets = 48;     // heavy-rectangle cap
  std::size_t objects = 16;  // box cap for the piercing search
};

struct OracleResult {
  enum class Kind { exact, bounds };
  Kind kind = Kind::exact;
  std::int64_t value = 0;  // meaningful when exact
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::vector<Point> certificate;             // attains upper (and value when exact)
  std::vector<std::size_t> disjoint_witness;  // pairwise-disjoint shape indices
  bool approximate = false;  // a numeric pairwise test participated

  std::int64_t best_lower() const { return kind == Kind::exact ? value : lower; }
};

namespace detail {

inline void verify_certificate(const std::vector<Point>& certificate,
                               const std::vector<Shape>& shapes, const char* who) {
  for (const Shape& s : shapes) {
    bool covered = false;
    for (const Point& p : certificate)
      if (contains(s, p)) {
        covered = true;
        break;
      }
    if (!covered) throw std::logic_error(std::string(who) + ": certificate misses a shape");
  }
}

// shared branch-and-bound core for minimum set cover: at most 64 sets (so a
// coverage mask fits one word), any number of candidates.  cand_covers[c]
// holds the sets candidate c covers; set_cands[s] lists the candidates
// inside set s.  Uses a greedy start, a lower bound from sets sharing no
// candidate, and branches on the thinnest uncovered set.
struct SetCoverExact {
  const std::vector<std::vector<std::uint32_t>>& set_cands;
  const std::vector<std::uint64_t>& cand_covers;
  std::vector<std::vector<bool>> share;  // set pairs reachable by one candidate
  std::uint64_t universe = 0;
  std::size_t best = 0;
  std::vector<std::size_t> best_pick;
  std::vector<std::size_t> pick;

  SetCoverExact(const std::vector<std::vector<std::uint32_t>>& sc,
                const std::vector<std::uint64_t>& cc)
      : set_cands(sc), cand_covers(cc) {
    const std::size_t s_count = sc.size();
    universe = (s_count == 64) ? ~0ull : ((1ull << s_count) - 1);
    share.assign(s_count, std::vector<bool>(s_count, false));
    for (std::uint64_t mask : cand_covers) {
      std::uint64_t rest = mask;
      while (rest) {
        std::size_t i = std::size_t(std::countr_zero(rest));
        rest &= rest - 1;
        std::uint64_t other = mask;
        while (other) {
          std::size_t j = std::size_t(std::countr_zero(other));
          other &= other - 1;
          share[i][j] = true;
        }
      }
    }
  }

  std::size_t disjoint_lower(std::uint64_t covered) const {
    std::size_t lb = 0;
    std::size_t taken[64];
    for (std::size_t s = 0; s < set_cands.size(); ++s) {
      if (covered >> s & 1) continue;
      bool clean = true;
      for (std::size_t t = 0; t < lb && clean; ++t) clean = !share[s][taken[t]];
      if (clean) taken[lb++] = s;
    }
    return lb;
  }

  void greedy_start() {
    std::uint64_t covered = 0;
    while (covered != universe) {
      std::size_t arg = 0;
      int most = -1;
      for (std::size_t c = 0; c < cand_covers.size(); ++c) {
        int gain = std::popcount(cand_covers[c] & ~covered);
        if (gain > most) {
          most = gain;
          arg = c;
        }
      }
      if (most <= 0) throw std::logic_error("SetCoverExact: uncoverable set");
      covered |= cand_covers[arg];
      pick.push_back(arg);
    }
    best = pick.size();
    best_pick = pick;
    pick.clear();
  }

  void branch(std::uint64_t covered) {
    if (covered == universe) {
      if (pick.size() < best) {
        best = pick.size();
        best_pick = pick;
      }
      return;
    }
    if (pick.size() + disjoint_lower(covered) >= best) return;

    std::size_t target = set_cands.size();
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t s = 0; s < set_cands.size(); ++s) {
      if (covered >> s & 1) continue;
      if (set_cands[s].size() < fewest) {
        fewest = set_cands[s].size();
        target = s;
      }
    }
    for (std::uint32_t c : set_cands[target]) {
      pick.push_back(c);
      branch(covered | cand_covers[c]);
      pick.pop_back();
    }
  }

  std::vector<std::size_t> solve() {
    if (set_cands.empty()) return {};
    greedy_start();
    branch(0);
    return best_pick;
  }
};

}  // namespace detail

// Minimum number of ground-set points stabbing every heavy interval.  Sweep
// by each interval's rightmost contained point; placing there is optimal by
// the exchange argument, since any solution can shift its leftmost choice
// right without losing coverage.
inline OracleResult opt_interval_net(const GroundSet& X, const Rational& eps,
                                     const std::vector<Interval>& intervals) {
  require_dim(X.dim(), 1, "opt_interval_net");
  const std::int64_t n = std::int64_t(X.size());
  std::vector<double> xs = X.column(0);
  std::sort(xs.begin(), xs.end());

  struct HeavyIv {
    double lo, rightmost;
  };
  std::vector<HeavyIv> heavy;
  for (const Interval& iv : intervals) {
    auto first = std::lower_bound(xs.begin(), xs.end(), iv.lo);
    auto last = std::upper_bound(xs.begin(), xs.end(), iv.hi);
    std::int64_t count = last - first;
    if (!meets_threshold(count, eps, n)) continue;
    heavy.push_back({iv.lo, *(last - 1)});  // count >= 1 whenever heavy
  }
  std::sort(heavy.begin(), heavy.end(),
            [](const HeavyIv& a, const HeavyIv& b) { return a.rightmost < b.rightmost; });

  OracleResult res;
  res.kind = OracleResult::Kind::exact;
  double last_placed = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (const HeavyIv& iv : heavy) {
    if (any && last_placed >= iv.lo) continue;  // already stabbed
    last_placed = iv.rightmost;
    any = true;
    res.certificate.push_back({iv.rightmost});
  }
  res.value = std::int64_t(res.certificate.size());
  res.lower = res.upper = res.value;

  std::vector<Shape> as_shapes;
  for (const HeavyIv& iv : heavy) as_shapes.push_back(Interval{iv.lo, iv.rightmost});
  detail::verify_certificate(res.certificate, as_shapes, "opt_interval_net");
  return res;
}

// Minimum subset of the ground set hitting every heavy rectangle.  Refuses
// (nullopt) past the limits; callers fall back to piercing_bounds.
inline std::optional<OracleResult> opt_rect_net_exact(const GroundSet& X, const Rational& eps,
                                                      const std::vector<AxisBox>& rects,
                                                      OracleLimits limits = {}) {
  require_dim(X.dim(), 2, "opt_rect_net_exact");
  const std::size_t n = X.size();
  if (n > limits.points || n > 64) return std::nullopt;

  std::vector<std::uint64_t> set_masks;
  std::vector<const AxisBox*> heavy;
  for (const AxisBox& r : rects) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (r.contains(X.point(i))) mask |= 1ull << i;
    if (!meets_threshold(std::popcount(mask), eps, std::int64_t(n))) continue;
    heavy.push_back(&r);
    set_masks.push_back(mask);
  }
  if (set_masks.size() > limits.sets || set_masks.size() > 64) return std::nullopt;

  // a rectangle whose point set contains another's is hit for free
  std::vector<std::uint64_t> minimal;
  for (std::size_t a = 0; a < set_masks.size(); ++a) {
    bool keep = true;
    for (std::size_t b = 0; b < set_masks.size() && keep; ++b) {
      if (a == b) continue;
      if ((set_masks[a] & set_masks[b]) == set_masks[b] &&
          (set_masks[a] != set_masks[b] || b < a))
        keep = false;
    }
    if (keep) minimal.push_back(set_masks[a]);
  }

  std::vector<std::uint64_t> cand_covers(n, 0);
  std::vector<std::vector<std::uint32_t>> set_cands(minimal.size());
  for (std::size_t s = 0; s < minimal.size(); ++s)
    for (std::size_t i = 0; i < n; ++i)
      if (minimal[s] >> i & 1) {
        cand_covers[i] |= 1ull << s;
        set_cands[s].push_back(std::uint32_t(i));
      }

  detail::SetCoverExact solver(set_cands, cand_covers);
  std::vector<std::size_t> chosen = solver.solve();

  OracleResult res;
  res.kind = OracleResult::Kind::exact;
  for (std::size_t i : chosen) res.certificate.push_back(X.point(i));
  res.value = std::int64_t(res.certificate.size());
  res.lower = res.upper = res.value;

  std::vector<Shape> as_shapes;
  for (const AxisBox* r : heavy) as_shapes.push_back(*r);
  detail::verify_certificate(res.certificate, as_shapes, "opt_rect_net_exact");
  return res;
}

// Minimum piercing set for axis boxes, points drawn from the whole space.
// There is always an optimum whose coordinates are box lower corners (push
// each point down per axis until it leaves some pierced box), so the
// candidate pool is the product of per-dimension lower coordinates.
inline std::optional<OracleResult> opt_piercing_boxes_exact(const std::vector<AxisBox>& boxes,
                                                            OracleLimits limits = {}) {
  OracleResult res;
  res.kind = OracleResult::Kind::exact;
  if (boxes.empty()) return res;
  const std::size_t n = boxes.size();
  if (n > limits.objects || n > 64) return std::nullopt;
  const std::size_t d = boxes[0].dim();

  std::vector<std::vector<double>> lows(d);
  for (const AxisBox& b : boxes) {
    require_dim(b.dim(), d, "opt_piercing_boxes_exact");
    for (std::size_t k = 0; k < d; ++k) lows[k].push_back(b.lo[k]);
  }
  for (auto& v : lows) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::vector<Point> cands;
  std::vector<std::uint64_t> covers;
  Point cur(d);
  auto emit = [&](auto&& self, std::size_t k) -> void {
    if (k == d) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (boxes[i].contains(cur)) mask |= 1ull << i;
      if (mask) {
        cands.push_back(cur);
        covers.push_back(mask);
      }
      return;
    }
    for (double v : lows[k]) {
      cur[k] = v;
      self(self, k + 1);
    }
  };
  emit(emit, 0);

  // dominated candidates (piercing a subset of another's boxes) are dead weight
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
      if (a == b) continue;
      if ((covers[a] & covers[b]) == covers[a] && (covers[a] != covers[b] || b < a))
        dominated = true;
    }
    if (!dominated) keep.push_back(a);
  }
  std::vector<std::vector<std::uint32_t>> set_cands(n);
  std::vector<std::uint64_t> cand_covers;
  std::vector<Point> pool;
  for (std::size_t idx = 0; idx < keep.size(); ++idx) {
    cand_covers.push_back(covers[keep[idx]]);
    pool.push_back(cands[keep[idx]]);
    for (std::size_t s = 0; s < n; ++s)
      if (covers[keep[idx]] >> s & 1) set_cands[s].push_back(std::uint32_t(idx));
  }
  for (std::size_t s = 0; s < n; ++s)
    if (set_cands[s].empty())
      throw std::logic_error("opt_piercing_boxes_exact: empty candidate set");

  detail::SetCoverExact solver(set_cands, cand_covers);
  std::vector<std::size_t> chosen = solver.solve();
  for (std::size_t c : chosen) res.certificate.push_back(pool[c]);
  res.value = std::int64_t(res.certificate.size());
  res.lower = res.upper = res.value;

  std::vector<Shape> as_shapes(boxes.begin(), boxes.end());
  detail::verify_certificate(res.certificate, as_shapes, "opt_piercing_boxes_exact");
  return res;
}

// ---- pairwise intersection -------------------------------------------------

struct IntersectionWitness {
  bool intersecting = false;
  bool numeric = false;  // decided by the projection iteration, not closed form
  Point common;          // meaningful when intersecting
};

inline Point project_to_box(const AxisBox& b, Point p) {
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::clamp(p[i], b.lo[i], b.hi[i]);
  return p;
}

// closest point of a (closed, axis-aligned) ellipsoid: inside points stay,
// outside ones solve the one-parameter Lagrange condition by bisection
inline Point project_to_ellipsoid(const Ellipsoid& e, const Point& p) {
  if (e.quad(p) <= 1.0) return p;
  const std::size_t d = p.size();
  Point u(d);
  double lam_hi_sq = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    u[i] = p[i] - e.center[i];
    lam_hi_sq += e.axes[i] * e.axes[i] * u[i] * u[i];
  }
  double lo = 0.0, hi = std::sqrt(lam_hi_sq);
  auto excess = [&](double lam) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      double t = e.axes[i] * u[i] / (e.axes[i] * e.axes[i] + lam);
      s += t * t;
    }
    return s - 1.0;
  };
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  double lam = 0.5 * (lo + hi);
  Point x(d);
  for (std::size_t i = 0; i < d; ++i)
    x[i] = e.center[i] + u[i] * e.axes[i] * e.axes[i] / (e.axes[i] * e.axes[i] + lam);
  return x;
}

namespace detail {

inline Point project_to_shape(const Shape& s, const Point& p) {
  if (const AxisBox* b = std::get_if<AxisBox>(&s)) return project_to_box(*b, p);
  if (const Ellipsoid* e = std::get_if<Ellipsoid>(&s)) return project_to_ellipsoid(*e, p);
  throw std::invalid_argument("project_to_shape: expected a box or an ellipsoid");
}

inline Point shape_anchor(const Shape& s) {
  if (const AxisBox* b = std::get_if<AxisBox>(&s)) {
    Point c(b->dim());
    for (std::size_t i = 0; i < b->dim(); ++i) c[i] = 0.5 * (b->lo[i] + b->hi[i]);
    return c;
  }
  return std::get<Ellipsoid>(s).center;
}

// total order on shapes so the numeric path sees each unordered pair in one
// canonical orientation (keeps the predicate exactly symmetric)
inline bool shape_before(const Shape& a, const Shape& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  Point ca = shape_anchor(a), cb = shape_anchor(b);
  if (ca != cb) return ca < cb;
  auto extents = [](const Shape& s) -> Point {
    if (const AxisBox* box = std::get_if<AxisBox>(&s)) return box->hi;
    return std::get<Ellipsoid>(s).axes;
  };
  return extents(a) < extents(b);
}

}  // namespace detail

// Closed-form where possible (box/box overlap, ball/ball distance, coincident
// centers, center containment); otherwise damped alternating projection with
// 200 rounds and gap tolerance 1e-9.  Instances meant for bound checks keep
// 1e-3 clearance from tangency, so the numeric verdict is decisive there.
inline IntersectionWitness shapes_intersect(const Shape& a_in, const Shape& b_in) {
  const bool flip = detail::shape_before(b_in, a_in);
  const Shape& a = flip ? b_in : a_in;
  const Shape& b = flip ? a_in : b_in;
  require_dim(shape_dim(a), shape_dim(b), "shapes_intersect");

  IntersectionWitness w;
  if (const AxisBox* ba = std::get_if<AxisBox>(&a)) {
    if (const AxisBox* bb = std::get_if<AxisBox>(&b)) {
      Point common(ba->dim());
      for (std::size_t i = 0; i < ba->dim(); ++i) {
        double lo = std::max(ba->lo[i], bb->lo[i]);
        double hi = std::min(ba->hi[i], bb->hi[i]);
        if (lo > hi) return w;
        common[i] = lo;
      }
      w.intersecting = true;
      w.common = common;
      return w;
    }
  }
  const Ellipsoid* ea = std::get_if<Ellipsoid>(&a);
  const Ellipsoid* eb = std::get_if<Ellipsoid>(&b);
  if (ea && eb) {
    if (ea->center == eb->center) {
      w.intersecting = true;
      w.common = ea->center;
      return w;
    }
    bool ball_a = std::adjacent_find(ea->axes.begin(), ea->axes.end(),
                                     std::not_equal_to<>()) == ea->axes.end();
    bool ball_b = std::adjacent_find(eb->axes.begin(), eb->axes.end(),
                                     std::not_equal_to<>()) == eb->axes.end();
    if (ball_a && ball_b) {
      double gap = l2_dist(ea->center, eb->center);
      double ra = ea->axes[0], rb = eb->axes[0];
      if (gap <= ra + rb) {
        w.intersecting = true;
        w.common = ea->center;
        for (std::size_t i = 0; i < w.common.size(); ++i)
          w.common[i] += (eb->center[i] - ea->center[i]) * (ra / (ra + rb));
      }
      return w;
    }
  }
  // mixed or general ellipsoids: quick accepts, then the projection loop
  if (contains(a, detail::shape_anchor(b)) || contains(b, detail::shape_anchor(a))) {
    w.intersecting = true;
    w.common = contains(a, detail::shape_anchor(b)) ? detail::shape_anchor(b)
                                                    : detail::shape_anchor(a);
    return w;
  }
  w.numeric = true;
  const double relax = 0.8;
  Point x = detail::shape_anchor(a);
  Point pa = x, pb = x;
  for (int iter = 0; iter < 200; ++iter) {
    pa = detail::project_to_shape(a, x);
    pb = detail::project_to_shape(b, pa);
    Point next(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) next[i] = x[i] + relax * (pb[i] - x[i]);
    x = next;
  }
  pa = detail::project_to_shape(a, x);
  pb = detail::project_to_shape(b, pa);
  if (l2_dist(pa, pb) <= 1e-9) {
    w.intersecting = true;
    w.common = pa;
    for (std::size_t i = 0; i < pa.size(); ++i) w.common[i] = 0.5 * (pa[i] + pb[i]);
  }
  return w;
}

// fat objects pierce like boxes or balls; reuse those predicates
inline Shape to_pierceable(const FatObject& f) {
  switch (f.kind) {
    case FatObject::Kind::hypercube:
    case FatObject::Kind::linf_ball: {
      Point lo = f.center, hi = f.center;
      for (std::size_t i = 0; i < f.dim(); ++i) {
        lo[i] -= f.width;
        hi[i] += f.width;
      }
      return make_box(lo, hi);
    }
    case FatObject::Kind::axis_box: {
      Point lo = f.center, hi = f.center;
      for (std::size_t i = 0; i < f.dim(); ++i) {
        double half = (i == 0) ? f.height : f.width;
        lo[i] -= half;
        hi[i] += half;
      }
      return make_box(lo, hi);
    }
    case FatObject::Kind::l2_ball:
      return Ellipsoid{f.center, Point(f.dim(), f.height)};
  }
  throw std::logic_error("to_pierceable: unknown kind");
}

namespace detail {

// exact maximum independent set for small graphs, lowest-bit branching
inline std::size_t mis_size(std::uint32_t mask, const std::vector<std::uint32_t>& adj,
                            std::map<std::uint32_t, std::size_t>& memo) {
  if (!mask) return 0;
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::size_t v = std::size_t(std::countr_zero(mask));
  std::uint32_t without = mask & (mask - 1);
  std::size_t best = mis_size(without, adj, memo);
  std::size_t with = 1 + mis_size(without & ~adj[v], adj, memo);
  best = std::max(best, with);
  memo.emplace(mask, best);
  return best;
}

}  // namespace detail

// Sandwich the piercing optimum: a pairwise-disjoint subfamily from below
// (exact maximum when n <= 20, first-fit greedy past that) and a greedy
// piercing over shape centers and pairwise witness points from above.
inline OracleResult piercing_bounds(const std::vector<Shape>& shapes) {
  OracleResult res;
  res.kind = OracleResult::Kind::bounds;
  const std::size_t n = shapes.size();
  if (n == 0) return res;

  std::vector<std::vector<bool>> meets(n, std::vector<bool>(n, false));
  std::vector<Point> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(detail::shape_anchor(shapes[i]));
  for (std::size_t i = 0; i < n; ++i) {
    meets[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      IntersectionWitness w = shapes_intersect(shapes[i], shapes[j]);
      res.approximate = res.approximate || w.numeric;
      meets[i][j] = meets[j][i] = w.intersecting;
      if (w.intersecting) pool.push_back(w.common);
    }
  }

  if (n <= 20) {
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && meets[i][j]) adj[i] |= 1u << j;
    std::map<std::uint32_t, std::size_t> memo;
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    res.lower = std::int64_t(detail::mis_size(full, adj, memo));
    // reconstruct one maximum family by replaying the recurrence
    std::uint32_t mask = full;
    while (mask) {
      std::size_t v = std::size_t(std::countr_zero(mask));
      std::uint32_t without = mask & (mask - 1);
      if (detail::mis_size(mask, adj, memo) ==
          1 + detail::mis_size(without & ~adj[v], adj, memo)) {
        res.disjoint_witness.push_back(v);
        mask = without & ~adj[v];
      } else {
        mask = without;
      }
    }
  } else {
    // fewest-conflicts-first keeps the greedy family competitive
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && meets[i][j]) ++degree[i];
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (degree[a] != degree[b]) return degree[a] < degree[b];
      return a < b;
    });
    for (std::size_t cand : order) {
      bool clean = true;
      for (std::size_t got : res.disjoint_witness) clean = clean && !meets[cand][got];
      if (clean) res.disjoint_witness.push_back(cand);
    }
    std::sort(res.disjoint_witness.begin(), res.disjoint_witness.end());
    res.lower = std::int64_t(res.disjoint_witness.size());
  }

  std::vector<bool> covered(n, false);
  std::size_t left = n;
  while (left > 0) {
    std::size_t arg = pool.size();
    std::size_t most = 0;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t s = 0; s < n; ++s)
        if (!covered[s] && contains(shapes[s], pool[c])) ++gain;
      if (gain > most) {
        most = gain;
        arg = c;
      }
    }
    if (arg == pool.size())
      throw std::logic_error("piercing_bounds: no candidate covers the rest");
    res.certificate.push_back(pool[arg]);
    for (std::size_t s = 0; s < n; ++s)
      if (!covered[s] && contains(shapes[s], pool[arg])) {
        covered[s] = true;
        --left;
      }
  }
  res.upper = std::int64_t(res.certificate.size());

  detail::verify_certificate(res.certificate, shapes, "piercing_bounds");
  if (res.lower > res.upper)
    throw std::logic_error("piercing_bounds: disjoint family exceeds greedy cover "
                           "(near-tangent numeric instance?)");
  return res;
}

}  // namespace onet
