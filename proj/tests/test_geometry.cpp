#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <onet/geometry.hpp>
#include <onet/rng.hpp>

using namespace onet;

TEST_CASE("interval containment is closed") {
    Interval iv{1.0, 3.0};
    CHECK(iv.contains(1.0));
    CHECK(iv.contains(3.0));
    CHECK(iv.contains(2.0));
    CHECK_FALSE(iv.contains(0.999999));
    CHECK_FALSE(iv.contains(3.000001));
}

TEST_CASE("axis box containment, sides, center") {
    AxisBox b = make_box({0.0, -1.0}, {2.0, 1.0});
    CHECK(b.contains({0.0, -1.0}));
    CHECK(b.contains({2.0, 1.0}));
    CHECK(b.contains({1.0, 0.0}));
    CHECK_FALSE(b.contains({2.0, 1.0 + 1e-12}));
    CHECK(b.side(0) == 2.0);
    CHECK(b.side(1) == 2.0);
    CHECK(b.center() == Point{1.0, 0.0});
    CHECK_THROWS_AS(make_box({1.0}, {0.0}), std::invalid_argument);
    // degenerate boxes are allowed
    AxisBox deg = make_box({1.0, 1.0}, {1.0, 2.0});
    CHECK(deg.contains({1.0, 1.5}));
}

TEST_CASE("ellipsoid containment is closed at the boundary") {
    Ellipsoid e{{0.0, 0.0}, {2.0, 1.0}};
    CHECK(e.contains({2.0, 0.0}));
    CHECK(e.contains({0.0, -1.0}));
    CHECK(e.contains({0.0, 0.0}));
    CHECK_FALSE(e.contains({2.0, 0.1}));
    CHECK(e.quad({1.0, 0.5}) == Catch::Approx(0.5));
}

TEST_CASE("fat object kinds agree with their defining radii") {
    // hypercube / linf ball: membership is an L_inf ball of radius width
    FatObject cube{FatObject::Kind::hypercube, {0.0, 0.0}, 1.0, 1.0};
    CHECK(cube.contains({1.0, 1.0}));
    CHECK_FALSE(cube.contains({1.0, 1.0 + 1e-9}));
    CHECK(cube.alpha() == 1.0);

    FatObject ball{FatObject::Kind::l2_ball, {0.0, 0.0}, 1.0 / std::sqrt(2.0), 1.0};
    CHECK(ball.contains({1.0, 0.0}));
    CHECK(ball.contains({0.5, 0.5}));
    CHECK_FALSE(ball.contains({0.9, 0.5}));
    CHECK(ball.alpha() == Catch::Approx(1.0 / std::sqrt(2.0)));

    // axis box: half-side height along dim 0, width along the rest
    FatObject slab{FatObject::Kind::axis_box, {0.0, 0.0}, 0.5, 1.0};
    CHECK(slab.contains({1.0, 0.5}));
    CHECK_FALSE(slab.contains({1.0, 0.500001}));
    CHECK_FALSE(slab.contains({1.1, 0.0}));
    CHECK(slab.alpha() == 0.5);
}

TEST_CASE("shape variant dispatch") {
    Shape s1 = Interval{0.0, 1.0};
    Shape s2 = make_box({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0});
    Shape s3 = Ellipsoid{{0.0, 0.0}, {1.0, 1.0}};
    CHECK(shape_dim(s1) == 1);
    CHECK(shape_dim(s2) == 3);
    CHECK(shape_dim(s3) == 2);
    CHECK(contains(s1, {0.5}));
    CHECK(contains(s2, {1.0, 0.0, 0.5}));
    CHECK_FALSE(contains(s3, {1.0, 1.0}));
}

TEST_CASE("distances") {
    CHECK(linf_dist({0.0, 3.0}, {1.0, 1.0}) == 2.0);
    CHECK(l2_dist({0.0, 0.0}, {3.0, 4.0}) == 5.0);
    CHECK_THROWS_AS(l2_dist({0.0}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("ground set round trip and columns") {
    std::vector<Point> pts = {{1.0, 4.0}, {2.0, 5.0}, {3.0, 6.0}};
    GroundSet g = GroundSet::from_points(pts, 2);
    CHECK(g.size() == 3);
    CHECK(g.dim() == 2);
    CHECK(g.point(1) == Point{2.0, 5.0});
    CHECK(g.column(1) == std::vector<double>{4.0, 5.0, 6.0});
}

TEST_CASE("heavy_count fast path matches generic dispatch") {
    Rng rng(404);
    const std::size_t n = 500;
    GroundSet g(2, n);
    for (std::size_t i = 0; i < n; ++i) {
        g.coord(i, 0) = rng.uniform(0.0, 1.0);
        g.coord(i, 1) = rng.uniform(0.0, 1.0);
    }
    for (int trial = 0; trial < 200; ++trial) {
        double x0 = rng.uniform(0.0, 1.0), x1 = rng.uniform(0.0, 1.0);
        double y0 = rng.uniform(0.0, 1.0), y1 = rng.uniform(0.0, 1.0);
        AxisBox b = make_box({std::min(x0, x1), std::min(y0, y1)},
                             {std::max(x0, x1), std::max(y0, y1)});
        std::int64_t fast = heavy_count(Shape{b}, g);
        std::int64_t slow = 0;
        for (std::size_t i = 0; i < n; ++i) slow += b.contains(g.point(i)) ? 1 : 0;
        REQUIRE(fast == slow);
    }
}

TEST_CASE("is_heavy thresholds exactly") {
    // 8 collinear points; a box holding 2 of them is 1/4-heavy, not 1/3-heavy
    std::vector<Point> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({double(i), 0.0});
    GroundSet g = GroundSet::from_points(pts, 2);
    Shape b = make_box({0.0, -1.0}, {1.0, 1.0});
    CHECK(heavy_count(b, g) == 2);
    CHECK(is_heavy(b, g, Rational(1, 4)));
    CHECK_FALSE(is_heavy(b, g, Rational(1, 3)));
}
