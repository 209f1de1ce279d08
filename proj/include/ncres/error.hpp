#pragma once

#include <stdexcept>
#include <string>

namespace ncres {

enum class ErrorKind {
  dimension_mismatch,
  degree_out_of_range,
  index_out_of_range,
  homogeneity,
  bad_denominator,
  unbounded_symbol,
  divergent_integral,
  imaginary_residual,
  stray_variable,
  unsupported_jet,
  unsupported_case,
  identity_violation,
  parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncres
