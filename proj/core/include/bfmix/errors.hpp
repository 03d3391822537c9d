#pragma once

#include <stdexcept>
#include <string>

namespace bfmix {

/// Argument outside the mathematical domain of an operation (z < 0, omega <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition of an analysis does not hold for the given
/// configuration (e.g. asking for a collapse number with repulsive g_bb).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid or incomplete configuration. `field()` names the offending entry
/// using a dotted path such as "boson.mass".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A root finder or bracket search gave up. The message names the solver and
/// the last bracket it examined.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(std::string solver, double lo, double hi, const std::string& what);

  const std::string& solver() const noexcept { return solver_; }
  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  std::string solver_;
  double lo_;
  double hi_;
};

}  // namespace bfmix
