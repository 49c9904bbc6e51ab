#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qns {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar function was evaluated outside its domain (e.g. v <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested formulation does not exist in this parameter regime (eps > nu for xi).
class RegimeError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A state handed to a right-hand side violates positivity of v.
class StateError : public Error {
 public:
  StateError(const std::string& what, std::size_t node)
      : Error(what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

/// A time step produced an inadmissible stage (v below the positivity floor or non-finite).
class StepError : public Error {
 public:
  StepError(const std::string& what, std::size_t node, double time, double value)
      : Error(what), node_(node), time_(time), value_(value) {}
  std::size_t node() const noexcept { return node_; }
  double time() const noexcept { return time_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t node_;
  double time_;
  double value_;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Rate fitting was handed non-positive errors.
class DegenerateDataError : public Error {
 public:
  using Error::Error;
};

/// One run of a parameter sweep failed.
class StudyError : public Error {
 public:
  StudyError(const std::string& what, double eps) : Error(what), eps_(eps) {}
  double eps() const noexcept { return eps_; }

 private:
  double eps_;
};

}  // namespace qns
