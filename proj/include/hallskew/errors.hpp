#pragma once

#include <stdexcept>
#include <string>

namespace hallskew {

// Base for every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured enumeration / index / dart bound would be exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Parameters outside the standing hypothesis: d prime and gcd(d, q-1) = 1.
class HypothesisViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotAFactorization : public Error {
 public:
  enum class Reason { NotSubgroup, NotMember, OrderMismatch, NontrivialIntersection };

  NotAFactorization(Reason reason, const std::string& what) : Error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

}  // namespace hallskew
