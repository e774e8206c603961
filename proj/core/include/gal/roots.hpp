#pragma once

#include <cstdint>
#include <string>

namespace gal {

/// Root of unity represented exactly as a reduced fraction num/den of a full
/// turn (0 <= num < den).  Multiplication adds fractions mod 1, so equality
/// and arithmetic are exact and field independent.
struct RootOfUnity {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static RootOfUnity one() { return {0, 1}; }
  static RootOfUnity minus_one() { return {1, 2}; }
  /// zeta_d^k, the k-th power of the canonical primitive d-th root.
  static RootOfUnity make(std::int64_t k, std::int64_t d);

  RootOfUnity mul(const RootOfUnity& o) const;
  RootOfUnity pow(std::int64_t e) const;
  RootOfUnity inv() const { return pow(-1); }
  bool is_one() const { return num == 0; }
  /// Multiplicative order (the reduced denominator).
  std::int64_t order() const { return den; }

  bool operator==(const RootOfUnity& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  /// Total order by fraction value; puts 1 first, used for canonical choices.
  bool operator<(const RootOfUnity& o) const;

  std::string str() const;
};

}  // namespace gal
