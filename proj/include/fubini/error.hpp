#ifndef FUBINI_ERROR_HPP
#define FUBINI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fubini {

// Base class of every exception this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments: invalid modes, out-of-domain parameters, guard violations,
// division by zero.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

// A series whose constant term must be a unit is singular.
class SingularSeriesError : public Error {
 public:
  explicit SingularSeriesError(const std::string& msg) : Error(msg) {}
};

// Composition/reversion applied to a series that is not a delta series,
// or whose linear coefficient is not invertible.
class NonInvertibleDeltaError : public Error {
 public:
  explicit NonInvertibleDeltaError(const std::string& msg) : Error(msg) {}
};

// Exact division failed, e.g. a polynomial in λ that is not divisible by
// the requested power of λ.
class DivisibilityError : public Error {
 public:
  explicit DivisibilityError(const std::string& msg) : Error(msg) {}
};

// Global cap on polynomial/series degrees; guards against runaway inputs.
int degree_guard();
void set_degree_guard(int n);

// Throws UsageError when n is negative or exceeds the degree guard.
void check_degree(int n, const char* what);

}  // namespace fubini

#endif
