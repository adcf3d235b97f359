#pragma once

#include "optigraph/graph.hpp"

namespace optigraph {

/// Truncated walk sum together with a rigorous bound on what was cut.
struct TailBound {
  Amplitude truncated_sum;
  int max_len = 0;
  /// Upper bound on the magnitude of the omitted tail; +inf (and
  /// divergent = true) when the max-row-sum norm of |W| is >= 1.
  double bound = 0.0;
  bool divergent = false;
};

/// Sum of the weights of all nonempty walks from s to t, evaluated in
/// closed form as the (s, t) entry of (I - W)^-1 via a dense
/// partial-pivoted solve. Throws SingularSystemError when the
/// condition-number estimate of I - W exceeds 1e12.
Amplitude response_factor_dense(const OpticalGraph& g, StateId s, StateId t);

/// Walk sums of length 1..max_len accumulated by repeated
/// matrix-vector products, with a geometric tail estimate.
TailBound walk_sum_truncated(const OpticalGraph& g, StateId s, StateId t, int max_len);

}  // namespace optigraph
