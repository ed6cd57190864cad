#pragma once

#include <stdexcept>
#include <string>

namespace powersq {

/// Input violates an operation's precondition (dimension mismatch, n == 0,
/// non-self-adjoint matrix, invalid configuration).
class RejectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but numerically degenerate: a zero matrix or vector
/// where a normalization is required, or an iterate that collapsed to zero.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A kernel produced a non-finite entry.
class NumericOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative method hit its hard cap without converging (used where a
/// silent non-converged result is not acceptable, e.g. the reference solver).
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested summary data does not exist (e.g. histogram of zero runs).
class EmptyData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace powersq
