#include "optigraph/response.hpp"

#include <limits>

#include "optigraph/errors.hpp"

namespace optigraph {

namespace {

StateId cheapest_state(const OpticalGraph& g) {
  StateId best;
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (StateId s : g.states()) {
    if (g.is_port(s)) continue;
    const std::size_t cost =
        g.in_edges_excluding_loops(s).size() * g.out_edges_excluding_loops(s).size();
    if (cost < best_cost) {  // ties resolve to the smallest id
      best_cost = cost;
      best = s;
    }
  }
  return best;
}

Amplitude merged_weight(OpticalGraph& g, StateId u, StateId v, ReductionTrace* trace,
                        ReductionStats* stats) {
  const auto edges = u == v ? g.loop_edges(u) : g.edges_between(u, v);
  if (edges.empty()) return {0.0, 0.0};
  if (edges.size() == 1) return g.edge(edges[0]).weight;
  if (stats) ++stats->rule_applications;
  EdgeId merged = u == v ? merge_loops(g, u, trace) : merge_parallel(g, u, v, trace);
  return g.edge(merged).weight;
}

}  // namespace

void reduce_to_pair(OpticalGraph& g, StateId input, StateId output, ReductionTrace* trace,
                    ReductionStats* stats) {
  while (g.state_count() > 2) {
    StateId victim = cheapest_state(g);
    if (!victim.valid())
      throw PreconditionError("reduce_to_pair: more than two ports designated");
    eliminate_state(g, victim, trace, stats);
  }
  merged_weight(g, input, output, trace, stats);
  merged_weight(g, output, input, trace, stats);
  merged_weight(g, input, input, trace, stats);
  merged_weight(g, output, output, trace, stats);
}

ResponseFactor response_factor(const OpticalGraph& g, StateId input, StateId output,
                               ReductionStats* stats) {
  if (!g.has_state(input) || !g.has_state(output))
    throw UnknownStateError("unknown or removed state id");
  if (input == output)
    throw PreconditionError("response_factor: input and output must be distinct states");

  OpticalGraph h = g;
  h.clear_ports();  // the pair under reduction defines the ports here
  h.add_input(input);
  h.add_output(output);
  reduce_to_pair(h, input, output, nullptr, stats);

  const auto weight_of = [&h](StateId u, StateId v) -> Amplitude {
    const auto edges = u == v ? h.loop_edges(u) : h.edges_between(u, v);
    return edges.empty() ? Amplitude{0.0, 0.0} : h.edge(edges[0]).weight;
  };
  const Amplitude forward = weight_of(input, output);
  const Amplitude backward = weight_of(output, input);
  const Amplitude in_loop = weight_of(input, input);
  const Amplitude out_loop = weight_of(output, output);

  if (!loop_converges(in_loop)) throw DivergentLoopError(h.label(input), std::abs(in_loop));
  if (!loop_converges(out_loop)) throw DivergentLoopError(h.label(output), std::abs(out_loop));

  // With both residual loops divided out, the remaining input -> output
  // -> input cycle is one more geometric series.
  const Amplitude port_gain = (1.0 - in_loop) * (1.0 - out_loop);
  const Amplitude cycle = forward * backward / port_gain;
  if (!loop_converges(cycle)) throw DivergentLoopError(h.label(output), std::abs(cycle));
  if (stats) ++stats->rule_applications;  // the closing contraction

  return {forward / (port_gain * (1.0 - cycle)), input, output};
}

}  // namespace optigraph
