#pragma once

#include <stdexcept>
#include <string>

#include "centerlab/types.hpp"

namespace centerlab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatchError : Error {
  int expected;
  int got;
  DimensionMismatchError(int expected_, int got_, const std::string& what_for)
      : Error("dimension mismatch in " + what_for + ": expected " +
              std::to_string(expected_) + ", got " + std::to_string(got_)),
        expected(expected_),
        got(got_) {}
};

/// Raised when a compiled expression cannot be evaluated at a point
/// (division by zero, sqrt of a negative number, non-finite input).
struct EvalError : Error {
  explicit EvalError(const std::string& msg) : Error(msg) {}
};

/// Syntax or semantic error in the expression DSL, with a byte offset.
struct ParseError : Error {
  std::size_t offset;
  ParseError(std::size_t offset_, const std::string& msg)
      : Error("parse error at offset " + std::to_string(offset_) + ": " + msg),
        offset(offset_) {}
};

/// Positioned error in a scenario config file.
struct ConfigError : Error {
  int line;
  int column;
  ConfigError(int line_, int column_, const std::string& msg)
      : Error("config error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

/// Integration failure: a trajectory left the configured box or the step
/// budget was exhausted. Carries the last state and time reached.
struct FlowError : Error {
  VecX state;
  Real time;
  FlowError(const std::string& msg, VecX state_, Real time_)
      : Error(msg + " (t=" + std::to_string(time_) + ")"),
        state(std::move(state_)),
        time(time_) {}
};

/// Newton solve inside the implicit midpoint step failed to converge.
struct ImplicitSolveError : Error {
  explicit ImplicitSolveError(const std::string& msg) : Error(msg) {}
};

/// The probe point is too close to a singularity of X for h or r(x) to be
/// well conditioned; carries the offending field norm.
struct NearSingularityError : Error {
  Real field_norm;
  explicit NearSingularityError(Real field_norm_)
      : Error("probe too close to Sing(X): |X(x)| = " +
              std::to_string(field_norm_)),
        field_norm(field_norm_) {}
};

/// The image of a point under the candidate flow does not land on the
/// reference orbit within membership tolerance.
struct NotOnOrbitError : Error {
  Real residual;
  explicit NotOnOrbitError(Real residual_)
      : Error("point not on orbit: nearest-approach residual = " +
              std::to_string(residual_)),
        residual(residual_) {}
};

/// Shooting iteration converged toward a zero of the field rather than a
/// periodic orbit.
struct CollapseToEquilibriumError : Error {
  VecX point;
  explicit CollapseToEquilibriumError(VecX point_)
      : Error("periodic-orbit search collapsed to an equilibrium"),
        point(std::move(point_)) {}
};

/// Shooting or crossing search did not converge.
struct NoConvergenceError : Error {
  explicit NoConvergenceError(const std::string& msg) : Error(msg) {}
};

}  // namespace centerlab
