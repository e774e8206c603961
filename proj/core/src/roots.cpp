#include "gal/roots.hpp"

#include <numeric>

#include "gal/error.hpp"

namespace gal {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::no_character: return "no-character";
    case errc::invalid_bicharacter: return "invalid-bicharacter";
    case errc::invalid_field: return "invalid-field";
    case errc::not_self_paired: return "not-self-paired";
    case errc::splitting_violation: return "splitting-violation";
    case errc::no_form: return "no-form";
    case errc::no_involution: return "no-involution";
    case errc::rejected_parameters: return "rejected-parameters";
    case errc::verification_failure: return "verification-failure";
    case errc::parse_error: return "parse-error";
    case errc::unsupported: return "unsupported";
    case errc::internal_error: return "internal-error";
  }
  return "unknown-error";
}

RootOfUnity RootOfUnity::make(std::int64_t k, std::int64_t d) {
  require(d >= 1, errc::invalid_parameter, "root order must be positive");
  k %= d;
  if (k < 0) k += d;
  std::int64_t g = std::gcd(k, d);
  if (k == 0) return {0, 1};
  return {k / g, d / g};
}

RootOfUnity RootOfUnity::mul(const RootOfUnity& o) const {
  std::int64_t l = std::lcm(den, o.den);
  return make(num * (l / den) + o.num * (l / o.den), l);
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const { return make(num * e, den); }

bool RootOfUnity::operator<(const RootOfUnity& o) const {
  // compare num/den < o.num/o.den exactly
  return num * o.den < o.num * den;
}

std::string RootOfUnity::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace gal
