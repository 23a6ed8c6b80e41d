#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <variant>
#include <vector>

#include <onet/generators.hpp>
#include <onet/geometry.hpp>
#include <onet/interval_net.hpp>
#include <onet/offline_oracle.hpp>
#include <onet/piercing_center.hpp>
#include <onet/rational.hpp>

using namespace onet;

TEST_CASE("family names round-trip") {
  for (Family f : {Family::interval_net, Family::rect_net2, Family::box_net3,
                   Family::pierce_box, Family::pierce_ellipsoid, Family::pierce_fat})
    CHECK(family_from(family_name(f)) == f);
  CHECK_THROWS_AS(family_from("lasers"), std::invalid_argument);
  CHECK(family_dim(Family::rect_net2, 7) == 2);
  CHECK(family_dim(Family::pierce_box, 3) == 3);
}

TEST_CASE("instance spec json round-trip") {
  InstanceSpec s;
  s.family = Family::pierce_ellipsoid;
  s.d = 3;
  s.n = 128;
  s.stream_len = 40;
  s.eps = Rational{1, 16};
  s.M = 8.0;
  s.alpha = 0.75;
  s.C = 1.5;
  s.seed = 99;
  s.ground_kind = "gaussian";
  s.shape_kind = "cluster";
  s.clusters = 4;

  json j = s;
  InstanceSpec t = j.get<InstanceSpec>();
  CHECK(t.family == s.family);
  CHECK(t.d == s.d);
  CHECK(t.n == s.n);
  CHECK(t.stream_len == s.stream_len);
  CHECK(t.eps.num == s.eps.num);
  CHECK(t.eps.den == s.eps.den);
  CHECK(t.M == s.M);
  CHECK(t.alpha == s.alpha);
  CHECK(t.C == s.C);
  CHECK(t.seed == s.seed);
  CHECK(t.ground_kind == s.ground_kind);
  CHECK(t.shape_kind == s.shape_kind);
  CHECK(t.clusters == s.clusters);
}

TEST_CASE("ground sets: uniform and gaussian stay in the unit cube") {
  for (const char* kind : {"uniform", "gaussian"}) {
    InstanceSpec s;
    s.family = Family::rect_net2;
    s.n = 300;
    s.seed = 5;
    s.ground_kind = kind;
    GroundSet X = gen_ground_set(s);
    REQUIRE(X.dim() == 2);
    REQUIRE(X.size() == 300);
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t d = 0; d < 2; ++d) {
        CHECK(X.coord(i, d) >= 0.0);
        CHECK(X.coord(i, d) <= 1.0);
      }
  }
}

TEST_CASE("ground sets: grid layouts") {
  InstanceSpec s;
  s.family = Family::interval_net;
  s.n = 16;
  s.ground_kind = "grid";
  GroundSet line = gen_ground_set(s);
  REQUIRE(line.size() == 16);
  for (std::size_t i = 0; i < 16; ++i) CHECK(line.coord(i, 0) == double(i));

  s.family = Family::rect_net2;
  s.n = 64;
  GroundSet plane = gen_ground_set(s);
  REQUIRE(plane.size() == 64);
  std::set<std::pair<double, double>> seen;
  for (std::size_t i = 0; i < 64; ++i) {
    double x = plane.coord(i, 0), y = plane.coord(i, 1);
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    seen.insert({x, y});
  }
  CHECK(seen.size() == 64);

  s.n = 50;
  CHECK_THROWS_AS(gen_ground_set(s), std::invalid_argument);
}

TEST_CASE("ground set generation is deterministic per seed") {
  InstanceSpec s;
  s.family = Family::box_net3;
  s.n = 100;
  s.seed = 1234;
  GroundSet a = gen_ground_set(s);
  GroundSet b = gen_ground_set(s);
  s.seed = 1235;
  GroundSet c = gen_ground_set(s);
  bool same = true, differ = false;
  for (std::size_t i = 0; i < 100; ++i)
    for (std::size_t d = 0; d < 3; ++d) {
      same = same && a.coord(i, d) == b.coord(i, d);
      differ = differ || a.coord(i, d) != c.coord(i, d);
    }
  CHECK(same);
  CHECK(differ);
}

TEST_CASE("halving interval stream: lengths, heaviness, forced growth") {
  CHECK_THROWS_AS(nested_intervals(24, Rational{1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(nested_intervals(16, Rational{3, 4}), std::invalid_argument);

  auto two = nested_intervals(8, Rational{1, 2});
  REQUIRE(two.size() == 2);
  CHECK(two[0].lo == 0.0);
  CHECK(two[0].hi == 7.0);
  CHECK(two[1].lo == 4.0);
  CHECK(two[1].hi == 7.0);

  InstanceSpec s;
  s.family = Family::interval_net;
  s.n = 64;
  s.eps = Rational{1, 16};
  s.ground_kind = "grid";
  s.shape_kind = "nested";
  GroundSet X = gen_ground_set(s);
  auto stream = gen_shapes(s, &X);
  REQUIRE(stream.size() == 5);  // ceil(log2(16)) + 1

  IntervalNet net(X, s.eps);
  for (const Shape& sh : stream) {
    const auto& iv = std::get<Interval>(sh);
    CHECK(is_heavy(sh, X, s.eps));
    auto step = net.process(iv);
    CHECK(step.heavy);
    CHECK_FALSE(step.was_hit);  // each emission dodges all earlier medians
  }
  CHECK(net.net_size() == 5);

  std::vector<Interval> ivs;
  for (const Shape& sh : stream) ivs.push_back(std::get<Interval>(sh));
  OracleResult opt = opt_interval_net(X, s.eps, ivs);
  CHECK(opt.value == 1);  // the streams nest, one point stabs them all
}

TEST_CASE("shrinking cube stream forces one pierce point per arrival") {
  auto cubes = nested_cubes(2, 16.0);
  REQUIRE(cubes.size() == 5);
  CHECK(cubes[0].hi[0] - cubes[0].lo[0] == Catch::Approx(16.0));
  CHECK(cubes[4].hi[0] - cubes[4].lo[0] == Catch::Approx(1.0));

  CenterPiercer alg(2);
  for (const AxisBox& b : cubes) {
    auto added = alg.process(Shape{b});
    CHECK(added.has_value());  // never pierced on arrival
    CHECK(alg.all_pierced());
  }
  CHECK(alg.points().size() == 5);

  std::vector<Shape> shapes(cubes.begin(), cubes.end());
  OracleResult bounds = piercing_bounds(shapes);
  CHECK(bounds.lower == 1);
  CHECK(bounds.upper == 1);
}

TEST_CASE("box piercing regime respects size and aspect caps") {
  InstanceSpec s;
  s.family = Family::pierce_box;
  s.d = 3;
  s.stream_len = 200;
  s.M = 16.0;
  s.C = 2.0;
  s.seed = 7;
  auto shapes = gen_shapes(s, nullptr);
  REQUIRE(shapes.size() == 200);
  for (const Shape& sh : shapes) {
    const auto& b = std::get<AxisBox>(sh);
    double smin = 1e300, smax = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      double side = b.hi[k] - b.lo[k];
      double center = (b.hi[k] + b.lo[k]) / 2.0;
      smin = std::min(smin, side);
      smax = std::max(smax, side);
      CHECK(side >= 1.0);
      CHECK(side <= s.M * (1.0 + 1e-12));
      CHECK(center >= 0.0);
      CHECK(center <= 2.0 * s.M);
    }
    CHECK(smax / smin <= s.C * (1.0 + 1e-12));
  }
}

TEST_CASE("aspect cap of one yields hypercubes") {
  InstanceSpec s;
  s.family = Family::pierce_box;
  s.d = 2;
  s.stream_len = 60;
  s.M = 8.0;
  s.C = 1.0;
  s.seed = 3;
  for (const Shape& sh : gen_shapes(s, nullptr)) {
    const auto& b = std::get<AxisBox>(sh);
    double s0 = b.hi[0] - b.lo[0], s1 = b.hi[1] - b.lo[1];
    CHECK(std::abs(s0 - s1) <= 1e-12 * s0);
  }
}

TEST_CASE("ellipsoid regime respects axis caps") {
  InstanceSpec s;
  s.family = Family::pierce_ellipsoid;
  s.d = 2;
  s.stream_len = 120;
  s.M = 16.0;
  s.C = 2.0;
  s.seed = 11;
  for (const Shape& sh : gen_shapes(s, nullptr)) {
    const auto& e = std::get<Ellipsoid>(sh);
    double amin = std::min(e.axes[0], e.axes[1]);
    double amax = std::max(e.axes[0], e.axes[1]);
    CHECK(amin >= 1.0);
    CHECK(amax <= s.M * (1.0 + 1e-12));
    CHECK(amax / amin <= s.C * (1.0 + 1e-12));
  }
}

TEST_CASE("fat regime carries the declared fatness exactly") {
  InstanceSpec s;
  s.family = Family::pierce_fat;
  s.d = 2;
  s.stream_len = 80;
  s.M = 16.0;
  s.seed = 21;

  s.alpha = 1.0;
  for (const Shape& sh : gen_shapes(s, nullptr)) {
    const auto& f = std::get<FatObject>(sh);
    CHECK(f.kind == FatObject::Kind::hypercube);
    CHECK(f.width == f.height);
    CHECK(f.width >= 1.0);
    CHECK(f.width <= s.M);
  }

  s.alpha = 0.75;
  for (const Shape& sh : gen_shapes(s, nullptr)) {
    const auto& f = std::get<FatObject>(sh);
    CHECK(f.kind == FatObject::Kind::axis_box);
    CHECK(f.alpha() >= 0.75);  // the height snap never thins the object
    CHECK(f.alpha() <= 0.75 * (1.0 + 1e-5));
    CHECK(f.width >= 1.0);
    CHECK(f.width <= s.alpha * s.M);
  }
}

TEST_CASE("heavy-only range streams emit nothing light") {
  InstanceSpec s;
  s.family = Family::rect_net2;
  s.n = 512;
  s.stream_len = 80;
  s.eps = Rational{1, 8};
  s.seed = 31;
  Instance inst = materialize(s);
  REQUIRE(inst.shapes.size() == 80);
  for (const Shape& sh : inst.shapes) CHECK(is_heavy(sh, inst.ground, s.eps));

  s.family = Family::interval_net;
  s.n = 256;
  s.seed = 32;
  Instance line = materialize(s);
  for (const Shape& sh : line.shapes) CHECK(is_heavy(sh, line.ground, s.eps));
}

TEST_CASE("ellipsoid cluster instances collapse the piercing bounds") {
  InstanceSpec s;
  s.family = Family::pierce_ellipsoid;
  s.d = 2;
  s.stream_len = 24;
  s.M = 16.0;
  s.C = 2.0;
  s.seed = 41;
  s.shape_kind = "cluster";
  s.clusters = 3;
  auto shapes = gen_shapes(s, nullptr);
  REQUIRE(shapes.size() == 24);

  // same-cluster members contain each other's centers; cross-cluster pairs
  // are far apart
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto& ei = std::get<Ellipsoid>(shapes[i]);
    for (std::size_t j = 0; j < shapes.size(); ++j) {
      const auto& ej = std::get<Ellipsoid>(shapes[j]);
      if (i % s.clusters == j % s.clusters)
        CHECK(ei.contains(ej.center));
      else
        CHECK_FALSE(shapes_intersect(shapes[i], shapes[j]).intersecting);
    }
  }

  OracleResult bounds = piercing_bounds(shapes);
  CHECK(bounds.lower == std::int64_t(s.clusters));
  CHECK(bounds.upper == std::int64_t(s.clusters));
}

TEST_CASE("materialized instances round-trip through json") {
  InstanceSpec s;
  s.family = Family::box_net3;
  s.n = 27;
  s.stream_len = 10;
  s.eps = Rational{1, 4};
  s.seed = 55;
  Instance inst = materialize(s);
  json j = instance_to_json(inst);
  Instance back = instance_from_json(j);
  CHECK(instance_to_json(back).dump() == j.dump());
  CHECK(back.ground.size() == inst.ground.size());
  CHECK(back.shapes.size() == inst.shapes.size());

  Instance again = materialize(s);
  CHECK(instance_to_json(again).dump() == j.dump());
}
