#include "optigraph/rules.hpp"

#include <algorithm>
#include <utility>

#include "optigraph/errors.hpp"

namespace optigraph {

namespace {

void require_live(const OpticalGraph& g, StateId s) {
  if (!g.has_state(s)) throw UnknownStateError("unknown or removed state id");
}

void require_not_port(const OpticalGraph& g, StateId s) {
  if (g.is_port(s))
    throw PreconditionError("state \"" + g.label(s) + "\" is a designated port");
}

Amplitude loop_sum(const OpticalGraph& g, StateId s) {
  Amplitude sum{0.0, 0.0};
  for (EdgeId e : g.loop_edges(s)) sum += g.edge(e).weight;
  return sum;
}

void check_loop_converges(const OpticalGraph& g, StateId s, Amplitude loop) {
  if (!loop_converges(loop)) throw DivergentLoopError(g.label(s), std::abs(loop));
}

}  // namespace

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::ContractSeries: return "contract_series";
    case Rule::MergeParallel: return "merge_parallel";
    case Rule::MergeLoops: return "merge_loops";
    case Rule::ContractLoop: return "contract_loop";
    case Rule::DetachVertex: return "detach_vertex";
    case Rule::EliminateState: return "eliminate_state";
  }
  return "?";
}

EdgeId contract_series(OpticalGraph& g, StateId middle, ReductionTrace* trace) {
  require_live(g, middle);
  require_not_port(g, middle);
  if (!g.loop_edges(middle).empty())
    throw PreconditionError("contract_series: state \"" + g.label(middle) + "\" has a self-loop");
  const auto in = g.in_edges_excluding_loops(middle);
  const auto out = g.out_edges_excluding_loops(middle);
  if (in.size() != 1 || out.size() != 1)
    throw PreconditionError("contract_series: state \"" + g.label(middle) +
                            "\" must have exactly one incoming and one outgoing edge");
  const StateId p1 = g.edge(in[0]).from;
  const StateId p3 = g.edge(out[0]).to;
  const Amplitude w = g.edge(in[0]).weight * g.edge(out[0]).weight;
  g.remove_state(middle);
  EdgeId created = g.add_edge(p1, p3, w);
  if (trace) trace->push_back({Rule::ContractSeries, middle, {}, w, {}, {created}});
  return created;
}

EdgeId merge_parallel(OpticalGraph& g, StateId u, StateId v, ReductionTrace* trace) {
  require_live(g, u);
  require_live(g, v);
  if (u == v) throw PreconditionError("merge_parallel: use merge_loops for self-loops");
  const auto parallel = g.edges_between(u, v);
  if (parallel.size() < 2)
    throw PreconditionError("merge_parallel: need at least two edges \"" + g.label(u) +
                            "\" -> \"" + g.label(v) + "\"");
  Amplitude sum{0.0, 0.0};
  for (EdgeId e : parallel) sum += g.edge(e).weight;
  for (EdgeId e : parallel) g.remove_edge(e);
  EdgeId created = g.add_edge(u, v, sum);
  if (trace) trace->push_back({Rule::MergeParallel, u, v, sum, {}, {created}});
  return created;
}

EdgeId merge_loops(OpticalGraph& g, StateId v, ReductionTrace* trace) {
  require_live(g, v);
  const auto loops = g.loop_edges(v);
  if (loops.size() < 2)
    throw PreconditionError("merge_loops: need at least two loops at \"" + g.label(v) + "\"");
  Amplitude sum{0.0, 0.0};
  for (EdgeId e : loops) sum += g.edge(e).weight;
  for (EdgeId e : loops) g.remove_edge(e);
  EdgeId created = g.add_edge(v, v, sum);
  if (trace) trace->push_back({Rule::MergeLoops, v, {}, sum, {}, {created}});
  return created;
}

EdgeId contract_loop(OpticalGraph& g, StateId c, ReductionTrace* trace) {
  require_live(g, c);
  require_not_port(g, c);
  const auto loops = g.loop_edges(c);
  if (loops.size() != 1)
    throw PreconditionError("contract_loop: state \"" + g.label(c) + "\" must have exactly one loop");
  const auto in = g.in_edges_excluding_loops(c);
  const auto out = g.out_edges_excluding_loops(c);
  if (in.size() != 1 || out.size() != 1)
    throw PreconditionError("contract_loop: state \"" + g.label(c) +
                            "\" must have exactly one other incoming and one other outgoing edge");
  const Amplitude loop = g.edge(loops[0]).weight;
  check_loop_converges(g, c, loop);
  const StateId b = g.edge(in[0]).from;
  const StateId d = g.edge(out[0]).to;
  const Amplitude w = g.edge(in[0]).weight * g.edge(out[0]).weight / (1.0 - loop);
  g.remove_state(c);
  EdgeId created = g.add_edge(b, d, w);
  if (trace) trace->push_back({Rule::ContractLoop, c, {}, w, {}, {created}});
  return created;
}

std::vector<StateId> detach_vertex(OpticalGraph& g, StateId d, ReductionTrace* trace) {
  require_live(g, d);
  require_not_port(g, d);
  const auto loops = g.loop_edges(d);
  if (loops.size() > 1)
    throw PreconditionError("detach_vertex: merge the " + std::to_string(loops.size()) +
                            " loops at \"" + g.label(d) + "\" first");
  const auto in = g.in_edges_excluding_loops(d);
  const auto out = g.out_edges_excluding_loops(d);
  if (in.empty() || out.empty())
    throw PreconditionError("detach_vertex: state \"" + g.label(d) +
                            "\" needs at least one incoming and one outgoing edge");

  struct Stub {
    StateId other;
    Amplitude weight;
  };
  std::vector<Stub> sources, sinks;
  for (EdgeId e : in) sources.push_back({g.edge(e).from, g.edge(e).weight});
  for (EdgeId e : out) sinks.push_back({g.edge(e).to, g.edge(e).weight});
  const bool has_loop = !loops.empty();
  const Amplitude loop = has_loop ? g.edge(loops[0]).weight : Amplitude{};
  const std::string base = g.label(d);

  g.remove_state(d);

  std::vector<StateId> copies;
  std::vector<EdgeId> new_edges;
  copies.reserve(sources.size() * sinks.size());
  for (std::size_t m = 0; m < sources.size(); ++m) {
    for (std::size_t n = 0; n < sinks.size(); ++n) {
      std::string label = base + "[" + std::to_string(m + 1) + "," + std::to_string(n + 1) + "]";
      while (g.find_state(label)) label += "'";
      StateId copy = g.add_state(std::move(label));
      new_edges.push_back(g.add_edge(sources[m].other, copy, sources[m].weight));
      new_edges.push_back(g.add_edge(copy, sinks[n].other, sinks[n].weight));
      if (has_loop) new_edges.push_back(g.add_edge(copy, copy, loop));
      copies.push_back(copy);
    }
  }
  if (trace) trace->push_back({Rule::DetachVertex, d, {}, {}, copies, new_edges});
  return copies;
}

void eliminate_state(OpticalGraph& g, StateId v, ReductionTrace* trace, ReductionStats* stats) {
  require_live(g, v);
  require_not_port(g, v);

  const auto loops = g.loop_edges(v);
  const Amplitude loop = loop_sum(g, v);
  if (!loops.empty()) check_loop_converges(g, v, loop);
  if (stats && loops.size() > 1) ++stats->rule_applications;  // the loop merge

  struct Stub {
    StateId other;
    Amplitude weight;
  };
  std::vector<Stub> sources, sinks;
  for (EdgeId e : g.in_edges_excluding_loops(v)) sources.push_back({g.edge(e).from, g.edge(e).weight});
  for (EdgeId e : g.out_edges_excluding_loops(v)) sinks.push_back({g.edge(e).to, g.edge(e).weight});

  g.remove_state(v);

  const Amplitude gain = 1.0 / (1.0 - loop);
  std::vector<std::pair<StateId, StateId>> touched;
  for (const Stub& src : sources) {
    for (const Stub& snk : sinks) {
      g.add_edge(src.other, snk.other, src.weight * snk.weight * gain);
      if (stats) ++stats->rule_applications;  // one pair contraction
      auto pair = std::make_pair(src.other, snk.other);
      if (std::find(touched.begin(), touched.end(), pair) == touched.end())
        touched.push_back(pair);
    }
  }
  for (auto [u, x] : touched) {
    if (u == x) {
      if (g.loop_edges(u).size() >= 2) {
        merge_loops(g, u);
        if (stats) ++stats->rule_applications;
      }
    } else if (g.edges_between(u, x).size() >= 2) {
      merge_parallel(g, u, x);
      if (stats) ++stats->rule_applications;
    }
  }
  if (trace) trace->push_back({Rule::EliminateState, v, {}, loop, {}, {}});
}

void replay(OpticalGraph& g, const ReductionTrace& trace) {
  for (const TraceEntry& entry : trace) {
    switch (entry.rule) {
      case Rule::ContractSeries: contract_series(g, entry.a); break;
      case Rule::MergeParallel: merge_parallel(g, entry.a, entry.b); break;
      case Rule::MergeLoops: merge_loops(g, entry.a); break;
      case Rule::ContractLoop: contract_loop(g, entry.a); break;
      case Rule::DetachVertex: detach_vertex(g, entry.a); break;
      case Rule::EliminateState: eliminate_state(g, entry.a); break;
    }
  }
}

}  // namespace optigraph
