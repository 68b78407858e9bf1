#pragma once

#include <stdexcept>
#include <string>

namespace lapflow {

enum class ErrorKind {
  LoopEdge,
  TwoCycleOrParallelEdge,
  Disconnected,
  VertexOutOfRange,
  DomainMismatch,
  IncompatibleRHS,
  NotAnEdge,
  RepeatedEdge,
  EdgeInTree,
  EmptyCycle,
  EmptyBasis,
  TooLarge,
  NotABasis,
  EdgeOutOfRange,
  InvalidParams,
  ParseError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + std::move(msg)),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Uniform tolerance rule used across the library:
// |x - y| <= tol * max(1, |x|, |y|).
bool approx_equal(double x, double y, double tol = 1e-9);

}  // namespace lapflow
