#pragma once

// Exact rational arithmetic for heaviness thresholds.  Densities like
// eps = 1/16 must compare exactly against integer point counts: a range is
// heavy iff count >= eps*n, evaluated as count*den >= num*n in integers.
// Keeping eps (and delta) rational avoids the count==threshold coin flips
// that doubles would introduce on dyadic inputs.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace onet {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double to_double() const { return double(num) / double(den); }

  Rational inv() const {
    if (num == 0) throw std::domain_error("rational: inverse of zero");
    return Rational(den, num);
  }

  friend Rational operator*(Rational a, Rational b) {
    // cross-reduce first; operands here stay tiny (eps, delta, n) so int64
    // never gets close to overflow
    std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }
  friend Rational operator/(Rational a, Rational b) { return a * b.inv(); }
  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }

  // smallest integer >= num/den
  std::int64_t ceil() const {
    std::int64_t q = num / den, r = num % den;
    return q + (r > 0 ? 1 : 0);
  }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

// threshold count for an eps-heavy range over n points: ceil(eps*n)
inline std::int64_t heavy_threshold(const Rational& eps, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("heavy_threshold: negative n");
  return Rational(eps.num * n, eps.den).ceil();
}

// count >= eps*n, exactly
inline bool meets_threshold(std::int64_t count, const Rational& eps, std::int64_t n) {
  return count * eps.den >= eps.num * n;
}

}  // namespace onet
