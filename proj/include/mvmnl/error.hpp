#pragma once

#include <stdexcept>
#include <string>

namespace mvmnl {

enum class ErrorCode {
  InvalidArgument = 1,
  DimensionMismatch,
  BudgetExceeded,
  Parse,
  Io,
  Validation,
  VertexClassificationFailed,
  CapExceeded,
  UnsupportedK,
  NoFeasibleCertificate,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mvmnl
