#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace youngschur {

enum class Errc {
  invalid_diagram,
  not_symmetric,
  cap_exceeded,
  not_cover,
  no_completion,
  bad_interlacing,
  non_simple_pole,
  irrational_pole,
  inadmissible_params,
  irrational_nu,
  level_mismatch,
  completion_failure,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

/// Library error. Every failure mode named by a module contract maps to one Errc.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace youngschur
