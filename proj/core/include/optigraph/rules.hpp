#pragma once

#include <cstddef>
#include <vector>

#include "optigraph/graph.hpp"

namespace optigraph {

/// Loops are divergent when |weight| >= 1 - kLoopEps. The physical
/// condition is |weight| < 1; the epsilon guards float roundoff at
/// exact unity. Lossless closed loops are rejected, not special-cased.
inline constexpr double kLoopEps = 1e-12;

inline bool loop_converges(Amplitude loop_weight) {
  return std::abs(loop_weight) < 1.0 - kLoopEps;
}

enum class Rule {
  ContractSeries,
  MergeParallel,
  MergeLoops,
  ContractLoop,
  DetachVertex,
  EliminateState,
};

const char* rule_name(Rule r);

/// One recorded rewrite. Replaying a trace on a copy of the original
/// graph reproduces the final graph exactly (ids included, since ids
/// are assigned deterministically and never reused).
struct TraceEntry {
  Rule rule;
  StateId a;               // the rewritten state (middle / u / v / c / d)
  StateId b;               // second operand for MergeParallel, else invalid
  Amplitude result{};      // weight written by the rule, when single-valued
  std::vector<StateId> created_states;
  std::vector<EdgeId> created_edges;
};

using ReductionTrace = std::vector<TraceEntry>;

/// Counts constituent rewrite steps: one per loop merge, one per
/// (incoming, outgoing) pair contraction, one per parallel merge.
struct ReductionStats {
  std::size_t rule_applications = 0;
};

/// Removes a pass-through state (one incoming edge, one outgoing, no
/// loop, not a port) and joins its neighbours with the product weight.
EdgeId contract_series(OpticalGraph& g, StateId middle, ReductionTrace* trace = nullptr);

/// Replaces all edges u -> v (two or more required) by one edge
/// carrying their sum. Edges v -> u are untouched.
EdgeId merge_parallel(OpticalGraph& g, StateId u, StateId v, ReductionTrace* trace = nullptr);

/// Replaces all loops at v (two or more required) by one loop carrying
/// their sum.
EdgeId merge_loops(OpticalGraph& g, StateId v, ReductionTrace* trace = nullptr);

/// Removes a state with exactly one loop, one other incoming edge
/// (from b) and one other outgoing edge (to d); joins b and d with
/// weight in * out / (1 - loop). Requires |loop| < 1.
EdgeId contract_loop(OpticalGraph& g, StateId c, ReductionTrace* trace = nullptr);

/// Splits a state with i incoming and o outgoing edges (at most one
/// loop) into i*o single-in single-out copies, each keeping a copy of
/// the loop. The walk-weight multiset between any two surviving states
/// is preserved.
std::vector<StateId> detach_vertex(OpticalGraph& g, StateId d, ReductionTrace* trace = nullptr);

/// Composite of detach + loop contraction + parallel merging, applied
/// as a single algebraic step: every (u -> v, v -> x) pair becomes an
/// edge u -> x of weight a*b / (1 - loop sum), then parallels merge.
void eliminate_state(OpticalGraph& g, StateId v, ReductionTrace* trace = nullptr,
                     ReductionStats* stats = nullptr);

/// Re-applies a recorded trace. The graph must be in the same state
/// the trace was recorded from.
void replay(OpticalGraph& g, const ReductionTrace& trace);

}  // namespace optigraph
