#include "gal/field.hpp"

#include <numeric>

#include "gal/error.hpp"

namespace gal {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t RootField::pow(std::int64_t a, std::int64_t e) const {
  a = reduce(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::int64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::int64_t RootField::inv(std::int64_t a) const {
  a = reduce(a);
  require(a != 0, errc::invalid_parameter, "division by zero");
  return pow(a, p_ - 2);
}

RootField RootField::make(const std::vector<std::int64_t>& required_orders,
                          std::optional<std::int64_t> prime) {
  std::int64_t l = 1;
  for (std::int64_t o : required_orders) {
    require(o >= 1, errc::invalid_field, "required order must be positive");
    l = std::lcm(l, o);
    require(l < (std::int64_t(1) << 24), errc::invalid_field, "required orders too large");
  }
  std::int64_t n = 2 * l;
  std::int64_t p;
  if (prime) {
    p = *prime;
    require(is_prime(p) && p % 2 == 1, errc::invalid_field, "prime must be an odd prime");
    require(p % n == 1, errc::invalid_field,
            "prime must be = 1 mod " + std::to_string(n));
  } else {
    p = 2 * n + 1;
    while (!(is_prime(p) && p % n == 1)) ++p;
  }

  // canonical zeta_N: smallest x >= 2 of multiplicative order exactly N
  RootField f;
  f.p_ = p;
  f.n_ = n;
  std::vector<std::int64_t> primes;
  std::int64_t m = n;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (std::int64_t x = 2; x < p; ++x) {
    if (f.pow(x, n) != 1) continue;
    bool primitive = true;
    for (std::int64_t q : primes)
      if (f.pow(x, n / q) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      f.zeta_ = x;
      return f;
    }
  }
  fail(errc::invalid_field, "no primitive root of the requested order");
}

std::int64_t RootField::zeta(std::int64_t d) const {
  require(d >= 1 && n_ % d == 0, errc::invalid_field,
          "root order " + std::to_string(d) + " does not divide N = " + std::to_string(n_));
  return pow(zeta_, n_ / d);
}

std::int64_t RootField::root(const RootOfUnity& r) const { return pow(zeta(r.den), r.num); }

std::optional<std::int64_t> RootField::sqrt(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) return 0;
  if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;
  // Tonelli-Shanks
  std::int64_t q = p_ - 1, s = 0;
  while (q % 2 == 0) q /= 2, ++s;
  if (s == 1) return pow(a, (p_ + 1) / 4);
  std::int64_t z = 2;
  while (pow(z, (p_ - 1) / 2) == 1) ++z;
  std::int64_t m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mul(tt, tt);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t k = 0; k < m - i - 1; ++k) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

}  // namespace gal
