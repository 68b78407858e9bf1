#include "lapflow/error.hpp"

#include <algorithm>
#include <cmath>

namespace lapflow {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::TwoCycleOrParallelEdge: return "TwoCycleOrParallelEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::IncompatibleRHS: return "IncompatibleRHS";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::RepeatedEdge: return "RepeatedEdge";
    case ErrorKind::EdgeInTree: return "EdgeInTree";
    case ErrorKind::EmptyCycle: return "EmptyCycle";
    case ErrorKind::EmptyBasis: return "EmptyBasis";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

bool approx_equal(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace lapflow
