#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bimon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A map out of M⊗_k N that does not descend to the ⊗_R quotient.
class NotBalanced : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

// Raised when a builder's own postcondition check fails. Should never
// happen on inputs that passed the preconditions.
class InternalError : public Error {
 public:
  using Error::Error;
};

class HypothesisFailed : public Error {
 public:
  explicit HypothesisFailed(std::vector<std::string> names);
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool names_hypothesis(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace bimon
