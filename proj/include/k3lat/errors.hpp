#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

// Malformed input or violated precondition.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A bounded computation changed its answer when the bound was doubled.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, long suggested_bound)
      : std::runtime_error(what), suggested_bound_(suggested_bound) {}
  long suggested_bound() const { return suggested_bound_; }

 private:
  long suggested_bound_;
};

// The caller did not assert the hypotheses a formula depends on.
class RefusedError : public std::runtime_error {
 public:
  explicit RefusedError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative procedure hit its cap.
class IterationLimitError : public std::runtime_error {
 public:
  explicit IterationLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace k3lat
