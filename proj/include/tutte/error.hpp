#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tutte {

/// Failure categories raised by the library. Every thrown tutte::Error
/// carries exactly one of these so callers (and the CLI exit-code mapping)
/// can dispatch without parsing messages.
enum class ErrorKind {
  InvalidArgument,
  ParseError,
  PoleAt,
  DivisionByZero,
  NoSignChange,
  BudgetExceeded,
  InvalidGraph,
  NotSeriesParallel,
  UndefinedAtUnitLine,
  DegenerateEffectiveWeight,
  IdenticallyDegenerate,
  NotTwoTerminalGraph,
  OutOfDomain,
  WrongCase,
  SearchExhausted,
  ImmediateExhaustion,
  AssertionFailure,
  NotInteriorPoint,
  UnsupportedRegion,
  NotStarredRegion,
  NonPlanarPair,
  PoleWindowEmpty,
  PreconditionViolated,
  DegenerateRatio,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tutte
