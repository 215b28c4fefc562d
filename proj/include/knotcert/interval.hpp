#ifndef KNOTCERT_INTERVAL_HPP
#define KNOTCERT_INTERVAL_HPP

#include <map>
#include <optional>
#include <string>

#include "knotcert/numeric.hpp"

namespace knotcert {

// Closed interval with exact rational endpoints; all operations round outward,
// so any real in [lo,hi] stays enclosed.
struct RatInterval {
  Rational lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(const Rational& x) : lo(x), hi(x) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  bool is_exact() const { return lo == hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  Rational width() const { return hi - lo; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
// Throws std::domain_error if b contains zero.
RatInterval operator/(const RatInterval& a, const RatInterval& b);
RatInterval pow_interval(const RatInterval& a, long e);

// Outward-rounded sqrt; requires x.lo >= 0. `precision_bits` controls the
// dyadic grid the endpoints are rounded to.
RatInterval sqrt_interval(const RatInterval& x, unsigned precision_bits);

enum class Truth { True, False, Indeterminate };

// a <= b (or a < b when strict) for every pair of values in the intervals?
Truth interval_le(const RatInterval& a, const RatInterval& b, bool strict);

// Bracket of gamma = 1/r where r is the positive root of x^5+2x^4+x^3-1.
// Invariants: lo < hi, width <= eps, and p(1/hi) < 0 < p(1/lo).
struct GammaInterval {
  RatInterval value;
  Rational eps;
};

// Defining quintic p(x) = x^5 + 2x^4 + x^3 - 1.
Rational gamma_poly(const Rational& x);

GammaInterval gamma_interval(const Rational& eps);

// Shared gamma evaluations at one precision, with quarter-power cache.
class GammaTable {
 public:
  explicit GammaTable(const Rational& eps);
  const GammaInterval& gamma() const { return gamma_; }
  const Rational& eps() const { return gamma_.eps; }
  // gamma^(k/4) for integer k (k may be negative).
  RatInterval pow_quarter(long k) const;
  // gamma^k for integer k.
  RatInterval pow_int(long k) const;

 private:
  GammaInterval gamma_;
  unsigned sqrt_bits_;
  mutable std::map<long, RatInterval> quarter_cache_;
};

}  // namespace knotcert

#endif
