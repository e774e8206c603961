#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gal/roots.hpp"

namespace gal {

/// Prime field F_p carrying a fixed primitive N-th root of unity zeta_N,
/// p odd, p = 1 (mod N).  All scalars used by the constructions are powers
/// of zeta_N, so arithmetic is exact.
class RootField {
public:
  RootField() = default;

  /// N = 2 * lcm(required_orders).  With no prime given, picks the smallest
  /// prime p > 2N with p = 1 (mod N).  A supplied prime must be odd and
  /// satisfy the congruence.
  static RootField make(const std::vector<std::int64_t>& required_orders,
                        std::optional<std::int64_t> prime = std::nullopt);

  std::int64_t p() const { return p_; }
  std::int64_t n() const { return n_; }
  std::int64_t zeta_n() const { return zeta_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return ((a - b) % p_ + p_) % p_; }
  std::int64_t neg(std::int64_t a) const { return (p_ - a % p_) % p_; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
  std::int64_t pow(std::int64_t a, std::int64_t e) const;
  std::int64_t inv(std::int64_t a) const;
  std::int64_t reduce(std::int64_t a) const { return (a % p_ + p_) % p_; }

  /// zeta_d = zeta_N^(N/d); requires d | N.
  std::int64_t zeta(std::int64_t d) const;
  /// Exact image of a root of unity; requires its order to divide N.
  std::int64_t root(const RootOfUnity& r) const;
  /// Square root if one exists (Tonelli-Shanks), else nullopt.
  std::optional<std::int64_t> sqrt(std::int64_t a) const;

  bool operator==(const RootField& o) const {
    return p_ == o.p_ && n_ == o.n_ && zeta_ == o.zeta_;
  }
  bool operator!=(const RootField& o) const { return !(*this == o); }

private:
  std::int64_t p_ = 0;
  std::int64_t n_ = 0;
  std::int64_t zeta_ = 0;
};

bool is_prime(std::int64_t n);

}  // namespace gal
