#include "knotcert/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotcert {

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by interval containing zero");
  RatInterval inv(1 / b.hi, 1 / b.lo);
  return a * inv;
}

RatInterval pow_interval(const RatInterval& a, long e) {
  if (e == 0) return RatInterval(Rational(1));
  if (e < 0) return RatInterval(Rational(1)) / pow_interval(a, -e);
  if (e % 2 == 1 || a.lo >= 0)
    return {pow_rational(a.lo, e), pow_rational(a.hi, e)};
  if (a.hi <= 0)
    return {pow_rational(a.hi, e), pow_rational(a.lo, e)};
  // even power straddling zero
  return {Rational(0), std::max(pow_rational(a.lo, e), pow_rational(a.hi, e))};
}

namespace {

// floor/ceil of sqrt(q) on the grid 1/2^bits
Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q <= 0) return 0;
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * bits);
  Integer t = q.get_num() * q.get_den() * scale;  // sqrt(a/b) = sqrt(ab)/b
  Integer root = isqrt_floor(t);
  Integer den = q.get_den();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(root, den);
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q <= 0) return 0;
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * bits);
  Integer t = q.get_num() * q.get_den() * scale;
  Integer root = isqrt_floor(t);
  if (root * root < t) root += 1;
  Integer den = q.get_den();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(root, den);
  r.canonicalize();
  return r;
}

}  // namespace

RatInterval sqrt_interval(const RatInterval& x, unsigned precision_bits) {
  if (x.lo < 0) throw std::domain_error("sqrt_interval of interval with negative lower end");
  return {sqrt_lower(x.lo, precision_bits), sqrt_upper(x.hi, precision_bits)};
}

Truth interval_le(const RatInterval& a, const RatInterval& b, bool strict) {
  if (strict) {
    if (a.hi < b.lo) return Truth::True;
    if (a.lo >= b.hi) return Truth::False;
  } else {
    if (a.hi <= b.lo) return Truth::True;
    if (a.lo > b.hi) return Truth::False;
  }
  return Truth::Indeterminate;
}

Rational gamma_poly(const Rational& x) {
  Rational x2 = x * x;
  Rational x3 = x2 * x;
  return x3 * x2 + 2 * x2 * x2 + x3 - 1;
}

GammaInterval gamma_interval(const Rational& eps) {
  if (eps <= 0) throw std::domain_error("gamma_interval: eps must be positive");
  // p is strictly increasing on [0,1] with p(1/2) < 0 < p(1).
  Rational lo(1, 2), hi(1);
  // bisect the root bracket until the inverted bracket is tight enough
  while (1 / lo - 1 / hi > eps) {
    Rational mid = (lo + hi) / 2;
    if (gamma_poly(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  GammaInterval g;
  g.value = RatInterval(1 / hi, 1 / lo);
  g.eps = eps;
  return g;
}

GammaTable::GammaTable(const Rational& eps) : gamma_(gamma_interval(eps)) {
  // grid fine enough that sqrt rounding stays below the gamma bracket width
  size_t eps_bits = mpz_sizeinbase(eps.get_den().get_mpz_t(), 2);
  sqrt_bits_ = static_cast<unsigned>(eps_bits + 32);
}

RatInterval GammaTable::pow_int(long k) const { return pow_interval(gamma_.value, k); }

RatInterval GammaTable::pow_quarter(long k) const {
  auto it = quarter_cache_.find(k);
  if (it != quarter_cache_.end()) return it->second;
  RatInterval r;
  if (k % 4 == 0) {
    r = pow_int(k / 4);
  } else {
    long a = k >= 0 ? k : -k;
    RatInterval base = pow_interval(gamma_.value, a);
    RatInterval root = sqrt_interval(sqrt_interval(base, sqrt_bits_), sqrt_bits_);
    r = (k >= 0) ? root : RatInterval(Rational(1)) / root;
  }
  quarter_cache_.emplace(k, r);
  return r;
}

}  // namespace knotcert
