#pragma once

#include <stdexcept>
#include <string>

namespace leib {

enum class Errc {
  dimension_mismatch,
  singular_matrix,
  division_by_zero,
  zero_polynomial,
  irrational_spectrum,
  unsupported_arity,
  unsupported_codimension,
  not_solvable,
  not_jordan_form,
  restriction_violated,
  missing_parameter,
  invalid_spec,
  lie_instance,
  no_match,
  unknown_case,
  parse_error,
  bad_argument,
};

const char* errc_name(Errc c);

// All recoverable failures in the library are thrown as Error. code() lets
// callers (the CLI, tests) dispatch without string matching.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace leib
