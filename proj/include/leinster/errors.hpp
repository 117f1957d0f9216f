#pragma once

#include <stdexcept>
#include <string>

namespace leinster {

// Values double as CLI exit codes and C API status codes.
enum class ErrorCode : int {
  usage = 1,
  domain = 2,
  verification = 3,
  resource = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(ErrorCode::usage, what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

// Raised when two independent computations disagree or a proven invariant fails.
struct InvariantError : Error {
  explicit InvariantError(const std::string& what) : Error(ErrorCode::verification, what) {}
};

// Order cap, tuple budget, factorization effort.
struct ResourceError : Error {
  explicit ResourceError(const std::string& what) : Error(ErrorCode::resource, what) {}
};

}  // namespace leinster
