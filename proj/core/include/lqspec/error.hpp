#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lqspec {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or subdivision limit was hit before the computation finished.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t limit)
      : Error(what), limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

// Root bracketing or iteration failed to converge.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace lqspec
