#pragma once

#include "optigraph/graph.hpp"
#include "optigraph/rules.hpp"

namespace optigraph {

/// Gamma such that E_out = Gamma * E_in between two states: the sum of
/// the weights of all walks input -> output, equal to the
/// (input, output) entry of (I - W)^-1.
struct ResponseFactor {
  Amplitude value;
  StateId input;
  StateId output;
};

/// Eliminates every non-port state of g (which must have exactly the
/// two ports input and output), cheapest in-degree * out-degree first,
/// then merges stragglers so at most the edges input -> output,
/// output -> input and one loop per port remain. Mutates g in place.
void reduce_to_pair(OpticalGraph& g, StateId input, StateId output,
                    ReductionTrace* trace = nullptr, ReductionStats* stats = nullptr);

/// Response factor between any two distinct states, computed by graph
/// reduction on an internal copy. The output need not be a sink: a
/// residual loop at either end contributes its geometric-series factor.
ResponseFactor response_factor(const OpticalGraph& g, StateId input, StateId output,
                               ReductionStats* stats = nullptr);

}  // namespace optigraph
