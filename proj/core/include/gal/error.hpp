#pragma once

#include <stdexcept>
#include <string>

namespace gal {

/// Error categories surfaced by the library.  `math_violation` style errors
/// (verification failures) map to CLI exit code 1, everything else to 2.
enum class errc {
  invalid_parameter,
  no_character,
  invalid_bicharacter,
  invalid_field,
  not_self_paired,
  splitting_violation,
  no_form,
  no_involution,
  rejected_parameters,
  verification_failure,
  parse_error,
  unsupported,
  internal_error,
};

const char* errc_name(errc c);

class GalError : public std::runtime_error {
public:
  GalError(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

  /// True for errors that represent a detected mathematical violation in
  /// otherwise well-formed input (CLI exit code 1).
  bool is_violation() const { return code_ == errc::verification_failure; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw GalError(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) throw GalError(code, what);
}

}  // namespace gal
