#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oscusec {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input (bad modulus, bad JSON, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("zero has no multiplicative inverse") {}
};

class DegenerateChart : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  DegreeTooSmall(int degree, int minimum)
      : Error("degree " + std::to_string(degree) + " is below the minimum " +
              std::to_string(minimum)) {}
};

class UnsupportedH : public Error {
 public:
  explicit UnsupportedH(int h)
      : Error("no condition is tabulated for h=" + std::to_string(h) +
              " (supported: 1, 2, 4, 5, 6, 7)") {}
};

class UnsupportedM : public Error {
 public:
  explicit UnsupportedM(int m)
      : Error("multiplicity m=" + std::to_string(m) + " outside 1..20") {}
};

class ConditionNotMet : public Error {
 public:
  using Error::Error;
};

// A certificate step (or its terminal case) failed verification.
class StepFailed : public Error {
 public:
  StepFailed(std::size_t step, std::string check, const std::string& detail)
      : Error("certificate step " + std::to_string(step) + " failed " + check +
              ": " + detail),
        step_(step),
        check_(std::move(check)) {}

  std::size_t step() const noexcept { return step_; }
  const std::string& check() const noexcept { return check_; }

 private:
  std::size_t step_;
  std::string check_;
};

// An internal consistency check failed; always a bug, never a math outcome.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace oscusec
