#include <catch2/catch_amalgamated.hpp>

#include <onet/json_codec.hpp>

using namespace onet;
using nlohmann::json;

namespace {

bool same_shape(const Shape& a, const Shape& b) {
    return shape_to_json(a) == shape_to_json(b);
}

}  // namespace

TEST_CASE("shape json round trips") {
    std::vector<Shape> shapes = {
        Interval{-1.5, 2.25},
        make_box({0.0, 1.0}, {2.0, 3.0}),
        make_box({0.0, 1.0, -2.0}, {2.0, 3.0, 4.0}),
        Ellipsoid{{1.0, 2.0}, {0.5, 3.0}},
        FatObject{FatObject::Kind::hypercube, {1.0, 1.0}, 2.0, 2.0},
        FatObject{FatObject::Kind::l2_ball, {0.0, 0.0, 0.0}, 1.0, 1.7320508},
        FatObject{FatObject::Kind::axis_box, {5.0, 6.0}, 1.0, 2.0},
    };
    for (const Shape& s : shapes) {
        json j = shape_to_json(s);
        Shape back = shape_from_json(j);
        CHECK(same_shape(s, back));
        // text round trip too, exercising the parser
        Shape back2 = shape_from_json(json::parse(j.dump()));
        CHECK(same_shape(s, back2));
    }
}

TEST_CASE("shape json rejects unknown tags") {
    CHECK_THROWS(shape_from_json(json{{"shape", "triangle"}}));
    CHECK_THROWS(fat_kind_from("pentagon"));
}

TEST_CASE("rational json round trip") {
    json j = Rational(3, 12);
    Rational r = j.get<Rational>();
    CHECK(r == Rational(1, 4));
    CHECK(j.at("num").get<std::int64_t>() == 1);
    CHECK(j.at("den").get<std::int64_t>() == 4);
}

TEST_CASE("ground set json round trip") {
    std::vector<Point> pts = {{0.5, -1.0}, {2.0, 3.0}, {4.0, 5.5}};
    GroundSet g = GroundSet::from_points(pts, 2);
    json j = ground_set_to_json(g);
    GroundSet back = ground_set_from_json(j);
    REQUIRE(back.size() == g.size());
    REQUIRE(back.dim() == g.dim());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(back.point(i) == g.point(i));
}
