#pragma once

// Release-gate invariant suite behind the CLI's selftest subcommand: quick
// deterministic checks over every module, each reduced to a named pass/fail.
// The suite trades coverage depth for latency; the full story lives in the
// unit and acceptance binaries.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "geometry.hpp"
#include "interval_net.hpp"
#include "offline_oracle.hpp"
#include "piercing_center.hpp"
#include "piercing_fat.hpp"
#include "rational.hpp"
#include "rect_net.hpp"
#include "rng.hpp"
#include "trial.hpp"

namespace onet {

struct SelfcheckResult {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_ok = true;

  void add(const std::string& name, bool ok) {
    checks.push_back({name, ok});
    all_ok = all_ok && ok;
  }
};

inline SelfcheckResult run_selfcheck() {
  SelfcheckResult out;

  {
    Rng a(42), b(42), c(43);
    bool same = true, differ = false;
    for (int i = 0; i < 64; ++i) {
      double x = a.next_double(), y = b.next_double(), z = c.next_double();
      same = same && x == y;
      differ = differ || x != z;
    }
    out.add("rng determinism", same && differ && mix_seed(1, 2) != mix_seed(2, 1));
  }

  {
    bool ok = meets_threshold(8, Rational{1, 2}, 16) && !meets_threshold(7, Rational{1, 2}, 16) &&
              Rational(2, 4) == Rational(1, 2);
    out.add("exact heaviness threshold", ok);
  }

  {
    InstanceSpec s;
    s.family = Family::interval_net;
    s.n = 64;
    s.eps = Rational{1, 16};
    s.ground_kind = "grid";
    s.shape_kind = "nested";
    GroundSet X = gen_ground_set(s);
    auto stream = gen_shapes(s, &X);
    IntervalNet alg(X, s.eps);
    std::vector<Interval> ivs;
    for (const Shape& sh : stream) {
      alg.process(std::get<Interval>(sh));
      ivs.push_back(std::get<Interval>(sh));
    }
    OracleResult opt = opt_interval_net(X, s.eps, ivs);
    bool ok = alg.net_size() == 5 && opt.value == 1 &&
              double(alg.net_size()) <= double(interval_ratio_bound(s.eps));
    out.add("interval forced growth vs exact optimum", ok);
  }

  {
    Rng rng(7);
    bool ok = true;
    for (int it = 0; it < 50 && ok; ++it) {
      std::vector<Point> blockers;
      int m = int(rng.below(12));
      for (int i = 0; i < m; ++i) blockers.push_back({rng.next_double(), rng.next_double()});
      auto rects = enumerate_anchored_maximal(0.0, 1.0, true, blockers);
      std::size_t inside = 0;
      for (const Point& p : blockers)
        if (0.0 < p[0] && p[0] < 1.0) ++inside;
      ok = rects.size() <= 2 * inside + 1;
      double y0 = rng.next_double() * 0.5;
      AxisBox clip = make_box({0.0, y0}, {0.05, y0 + 0.3});
      OpenRect grown = extend_in_strip(clip, 0.0, 1.0, true, blockers);
      bool found = false;
      for (const OpenRect& r : rects) found = found || r == grown;
      ok = ok && found;
    }
    out.add("strip enumeration cap and extension membership", ok);
  }

  {
    Rng rng(11);
    bool ok = true;
    for (int it = 0; it < 2000 && ok; ++it) {
      double step = std::ldexp(1.0, int(rng.below(7)) - 3);
      Point q = {double(std::int64_t(rng.below(4096)) - 2048) * std::ldexp(step, -10),
                 double(std::int64_t(rng.below(4096)) - 2048) * std::ldexp(step, -10)};
      Point r = closest_lattice_point(q, step);
      for (std::size_t k = 0; k < 2; ++k) {
        ok = ok && std::abs(r[k] - q[k]) <= step / 2.0 + 1e-12;
        ok = ok && std::abs(r[k] / step - std::round(r[k] / step)) < 1e-9;
      }
    }
    out.add("lattice rounding within half pitch", ok);
  }

  {
    BoundParams bp;
    auto bd = check_block_diameter(bp, 2000, 19);
    out.add("golden-section block diameter", bd.pass && bd.worst_rel <= golden_step() + 1e-12);
  }

  {
    auto cubes = nested_cubes(2, 16.0);
    CenterPiercer alg(2);
    for (const AxisBox& b : cubes) alg.process(Shape{b});
    std::vector<Shape> shapes(cubes.begin(), cubes.end());
    OracleResult bounds = piercing_bounds(shapes);
    out.add("shrinking cubes pierce count and collapsed bounds",
            alg.points().size() == 5 && alg.all_pierced() && bounds.lower == 1 &&
                bounds.upper == 1);
  }

  {
    Rng rng(23);
    bool ok = true;
    for (int it = 0; it < 60 && ok; ++it) {
      auto rand_shape = [&]() -> Shape {
        if (rng.below(2) == 0) {
          Point lo = {rng.uniform(0, 4), rng.uniform(0, 4)};
          return make_box(lo, {lo[0] + rng.uniform(0.2, 2.0), lo[1] + rng.uniform(0.2, 2.0)});
        }
        Ellipsoid e;
        e.center = {rng.uniform(0, 4), rng.uniform(0, 4)};
        e.axes = {rng.uniform(0.2, 1.5), rng.uniform(0.2, 1.5)};
        return e;
      };
      Shape a = rand_shape(), b = rand_shape();
      ok = shapes_intersect(a, b).intersecting == shapes_intersect(b, a).intersecting;
    }
    out.add("intersection test symmetry", ok);
  }

  {
    ExperimentConfig cfg;
    cfg.instance.family = Family::interval_net;
    cfg.instance.n = 256;
    cfg.instance.stream_len = 24;
    cfg.instance.eps = Rational{1, 8};
    cfg.instance.seed = 99;
    cfg.trials = 3;
    cfg.timing = false;
    auto r1 = run_experiment(cfg);
    auto r2 = run_experiment(cfg);
    out.add("experiment rows reproduce byte for byte",
            csv_table(r1.reports) == csv_table(r2.reports) && r1.all_pass);
  }

  return out;
}

inline bool selfcheck_print(std::ostream& os) {
  SelfcheckResult res = run_selfcheck();
  for (const auto& [name, ok] : res.checks) os << (ok ? "ok   " : "FAIL ") << name << "\n";
  os << (res.all_ok ? "selftest passed" : "selftest FAILED") << " (" << res.checks.size()
     << " checks)\n";
  return res.all_ok;
}

}  // namespace onet
