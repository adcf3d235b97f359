#pragma once

#include <stdexcept>
#include <string>

namespace optigraph {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state label is already in use within the graph.
class DuplicateLabelError : public Error {
 public:
  explicit DuplicateLabelError(const std::string& label)
      : Error("duplicate state label: \"" + label + "\""), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// A StateId or label does not refer to a live state.
class UnknownStateError : public Error {
 public:
  using Error::Error;
};

/// An EdgeId does not refer to a live edge.
class UnknownEdgeError : public Error {
 public:
  using Error::Error;
};

/// Edge weight with a NaN or infinite component.
class NonFiniteWeightError : public Error {
 public:
  using Error::Error;
};

/// A rewrite rule was applied to a site that does not satisfy its
/// degree, loop-count, or port preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A loop whose weight has magnitude >= 1: the walk sum through that
/// state is a non-convergent geometric series.
class DivergentLoopError : public Error {
 public:
  DivergentLoopError(const std::string& state_label, double magnitude)
      : Error("divergent loop at state \"" + state_label +
              "\": |weight| = " + std::to_string(magnitude) + " >= 1"),
        state_label_(state_label) {}
  const std::string& state_label() const noexcept { return state_label_; }

 private:
  std::string state_label_;
};

/// I - W is singular or too ill-conditioned to solve reliably.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent scene description.
class SceneError : public Error {
 public:
  using Error::Error;
};

/// Malformed creation-operator expression.
class ExpressionError : public Error {
 public:
  using Error::Error;
};

}  // namespace optigraph
