#pragma once

#include <stdexcept>
#include <string>

namespace isosplit {

enum class ErrorKind {
  InvalidArgument,   // caller violated a precondition
  Structural,        // an internal construction produced an impossible object
  Consistency,       // a numeric cross-check failed (rounding, integrality)
  NoConcreteModel,   // catalog-only case requested where a matrix model is needed
  NotFound,          // a search exhausted its budget without a witness
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace isosplit
