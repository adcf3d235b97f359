#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "optigraph/types.hpp"

namespace optigraph {

/// Opaque handle to a graph state (a position plus propagation
/// direction in the optical setup). Ids are never reused within one
/// graph instance, even after removal.
struct StateId {
  std::uint32_t index = std::numeric_limits<std::uint32_t>::max();

  constexpr bool valid() const { return index != std::numeric_limits<std::uint32_t>::max(); }
  friend constexpr auto operator<=>(StateId, StateId) = default;
};

/// Opaque handle to a directed edge; same no-reuse guarantee.
struct EdgeId {
  std::uint32_t index = std::numeric_limits<std::uint32_t>::max();

  constexpr bool valid() const { return index != std::numeric_limits<std::uint32_t>::max(); }
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

/// Directed multigraph of optical states with complex edge weights.
///
/// Parallel edges and self-loops are kept as inserted; nothing is
/// merged implicitly. A subset of states may be designated input and
/// output ports (disjoint ordered lists). Single writer; concurrent
/// readers are safe once mutation has ceased.
class OpticalGraph {
 public:
  struct Edge {
    StateId from;
    StateId to;
    Amplitude weight;
  };

  // -- construction -------------------------------------------------

  /// Adds an isolated state. Labels are unique per graph.
  StateId add_state(std::string label);

  /// Appends an edge; parallel duplicates are retained.
  EdgeId add_edge(StateId from, StateId to, Amplitude weight);

  /// Removes an edge. The id is retired, never reused.
  void remove_edge(EdgeId e);

  /// Removes a state together with every incident edge.
  void remove_state(StateId s);

  void set_edge_weight(EdgeId e, Amplitude weight);

  // -- ports ---------------------------------------------------------

  void add_input(StateId s);
  void add_output(StateId s);
  void clear_ports();
  const std::vector<StateId>& inputs() const { return inputs_; }
  const std::vector<StateId>& outputs() const { return outputs_; }
  bool is_port(StateId s) const;

  // -- queries -------------------------------------------------------

  bool has_state(StateId s) const;
  bool has_edge(EdgeId e) const;
  const std::string& label(StateId s) const;
  std::optional<StateId> find_state(std::string_view label) const;

  const Edge& edge(EdgeId e) const;

  std::size_t state_count() const { return live_states_; }
  std::size_t edge_count() const { return live_edges_; }

  /// Live states in ascending id order.
  std::vector<StateId> states() const;
  /// Live edges in ascending id order.
  std::vector<EdgeId> edges() const;

  /// All edges leaving s, loops included, in insertion order.
  const std::vector<EdgeId>& out_edges(StateId s) const;
  /// All edges entering s, loops included, in insertion order.
  const std::vector<EdgeId>& in_edges(StateId s) const;

  /// Self-loops at s, in insertion order.
  std::vector<EdgeId> loop_edges(StateId s) const;
  /// Edges entering s from other states.
  std::vector<EdgeId> in_edges_excluding_loops(StateId s) const;
  /// Edges leaving s toward other states.
  std::vector<EdgeId> out_edges_excluding_loops(StateId s) const;

  /// Edges u -> v (u != v expected), in insertion order.
  std::vector<EdgeId> edges_between(StateId u, StateId v) const;

  /// Product of edge weights along a head-to-tail connected edge
  /// sequence; the empty walk has weight 1.
  Amplitude walk_weight(std::span<const EdgeId> walk) const;

  /// Structural and numeric equality: same live ids, labels, edges
  /// (weights bit-equal), and port lists.
  friend bool operator==(const OpticalGraph& a, const OpticalGraph& b);

 private:
  StateId require_state(StateId s) const;

  std::vector<std::optional<std::string>> labels_;  // by state index; nullopt = removed
  std::vector<std::optional<Edge>> edges_;          // by edge index; nullopt = removed
  std::vector<std::vector<EdgeId>> out_;            // by state index, live edges only
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<std::string, StateId> by_label_;
  std::vector<StateId> inputs_;
  std::vector<StateId> outputs_;
  std::size_t live_states_ = 0;
  std::size_t live_edges_ = 0;
};

}  // namespace optigraph
