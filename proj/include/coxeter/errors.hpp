#ifndef COXETER_ERRORS_HPP
#define COXETER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxeter {

/// Invalid value or argument (bad construction input, subset violation, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An operation's stated precondition does not hold (e.g. decompose on a
/// graph that is not higher rank).
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An exhaustive search was requested beyond the configured size bound.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical routine failed (eigensolver non-convergence, residual blow-up).
struct ComputationError : std::runtime_error {
  explicit ComputationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A certificate or internal consistency check failed.  This never means the
/// input was bad; it means the implementation contradicted itself.
struct InvariantBreachError : std::logic_error {
  explicit InvariantBreachError(const std::string& msg) : std::logic_error(msg) {}
};

/// Graph text format error, with 1-based source position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

}  // namespace coxeter

#endif
