#pragma once

#include <stdexcept>
#include <string>

namespace modhyp {

enum class ErrorKind {
  invalid_prime,
  invalid_residue,
  not_invertible,
  bad_set_spec,
  precondition,
  budget_exceeded,
  verification,
};

/// Library error. The kind lets front ends map failures to distinct diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace modhyp
