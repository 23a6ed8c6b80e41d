#include <catch2/catch_amalgamated.hpp>

#include <onet/rational.hpp>

using onet::Rational;

TEST_CASE("rational normalizes sign and gcd") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(3, -9) == Rational(-1, 3));
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK(Rational(5).num == 5);
    CHECK(Rational(5).den == 1);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(3, 4).inv() == Rational(4, 3));
    CHECK(Rational(7, 2).to_double() == 3.5);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK_FALSE(Rational(1, 2) < Rational(1, 2));
}

TEST_CASE("rational ceil") {
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4, 1).ceil() == 4);
    CHECK(Rational(0, 5).ceil() == 0);
    CHECK(Rational(1, 100).ceil() == 1);
}

TEST_CASE("heaviness threshold is an exact ceiling") {
    CHECK(onet::heavy_threshold(Rational(1, 8), 100) == 13);
    CHECK(onet::heavy_threshold(Rational(1, 8), 96) == 12);
    CHECK(onet::heavy_threshold(Rational(1, 3), 10) == 4);
    CHECK(onet::heavy_threshold(Rational(1), 7) == 7);

    CHECK(onet::meets_threshold(13, Rational(1, 8), 100));
    CHECK_FALSE(onet::meets_threshold(12, Rational(1, 8), 100));
    // exactly on the rational boundary
    CHECK(onet::meets_threshold(12, Rational(1, 8), 96));
    CHECK_FALSE(onet::meets_threshold(11, Rational(1, 8), 96));
}

TEST_CASE("threshold comparison avoids double rounding") {
    // n and eps chosen so eps*n is irrepresentable in floating point:
    // 1/3 * 10^15 = 333333333333333.33..; count 333333333333334 qualifies.
    Rational eps(1, 3);
    std::int64_t n = 1000000000000000;
    CHECK(onet::meets_threshold(333333333333334, eps, n));
    CHECK_FALSE(onet::meets_threshold(333333333333333, eps, n));
}
