#ifndef BOIJ_ERRORS_HPP
#define BOIJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace boij {

/// Base of every domain error. `code()` is a stable machine-readable token
/// (e.g. "NotInCone"); `detail()` is free text.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)), detail_(std::move(detail)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

/// Malformed user input: bad inline spec, bad argument value.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(std::string detail) : Error("InvalidArgument", std::move(detail)) {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& detail)
      : Error("ParseError", "line " + std::to_string(line) + ": " + detail), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(std::string detail) : Error("DimensionMismatch", std::move(detail)) {}
};

class NegativeEntry : public Error {
 public:
  NegativeEntry(int i, int j, const std::string& value)
      : Error("NegativeEntry", "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + value), i_(i), j_(j) {}
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

 private:
  int i_;
  int j_;
};

class NotInCone : public Error {
 public:
  NotInCone(int step, const std::string& detail)
      : Error("NotInCone", "step " + std::to_string(step) + ": " + detail), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

class NotStaircase : public Error {
 public:
  explicit NotStaircase(std::string detail) : Error("NotStaircase", std::move(detail)) {}
};

class TailGuardFailure : public Error {
 public:
  explicit TailGuardFailure(std::string detail) : Error("TailGuardFailure", std::move(detail)) {}
};

class WindowTooSmall : public Error {
 public:
  explicit WindowTooSmall(std::string detail) : Error("WindowTooSmall", std::move(detail)) {}
};

class IntegralityViolation : public Error {
 public:
  explicit IntegralityViolation(std::string detail) : Error("IntegralityViolation", std::move(detail)) {}
};

class BoundViolation : public Error {
 public:
  BoundViolation(int i, int j, const std::string& detail)
      : Error("BoundViolation", "(" + std::to_string(i) + "," + std::to_string(j) + "): " + detail), i_(i), j_(j) {}
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

 private:
  int i_;
  int j_;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::string detail) : Error("BudgetExceeded", std::move(detail)) {}
};

class InvalidTable : public Error {
 public:
  explicit InvalidTable(std::string detail) : Error("InvalidTable", std::move(detail)) {}
};

}  // namespace boij

#endif  // BOIJ_ERRORS_HPP
