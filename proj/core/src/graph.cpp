#include "optigraph/graph.hpp"

#include <algorithm>

#include "optigraph/errors.hpp"

namespace optigraph {

namespace {

void erase_id(std::vector<EdgeId>& v, EdgeId e) {
  v.erase(std::remove(v.begin(), v.end(), e), v.end());
}

}  // namespace

StateId OpticalGraph::add_state(std::string label) {
  if (by_label_.contains(label)) throw DuplicateLabelError(label);
  StateId id{static_cast<std::uint32_t>(labels_.size())};
  by_label_.emplace(label, id);
  labels_.push_back(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  ++live_states_;
  return id;
}

EdgeId OpticalGraph::add_edge(StateId from, StateId to, Amplitude weight) {
  require_state(from);
  require_state(to);
  if (!is_finite(weight)) throw NonFiniteWeightError("edge weight must be finite");
  EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  edges_.push_back(Edge{from, to, weight});
  out_[from.index].push_back(id);
  in_[to.index].push_back(id);
  ++live_edges_;
  return id;
}

void OpticalGraph::remove_edge(EdgeId e) {
  const Edge& rec = edge(e);
  erase_id(out_[rec.from.index], e);
  erase_id(in_[rec.to.index], e);
  edges_[e.index].reset();
  --live_edges_;
}

void OpticalGraph::remove_state(StateId s) {
  require_state(s);
  if (is_port(s)) throw PreconditionError("cannot remove designated port state \"" + label(s) + "\"");
  // Copy: remove_edge mutates the adjacency lists we iterate.
  std::vector<EdgeId> incident = out_[s.index];
  for (EdgeId e : in_[s.index])
    if (std::find(incident.begin(), incident.end(), e) == incident.end()) incident.push_back(e);
  for (EdgeId e : incident) remove_edge(e);
  by_label_.erase(*labels_[s.index]);
  labels_[s.index].reset();
  --live_states_;
}

void OpticalGraph::set_edge_weight(EdgeId e, Amplitude weight) {
  if (!is_finite(weight)) throw NonFiniteWeightError("edge weight must be finite");
  if (!has_edge(e)) throw UnknownEdgeError("unknown edge id");
  edges_[e.index]->weight = weight;
}

void OpticalGraph::add_input(StateId s) {
  require_state(s);
  if (std::find(outputs_.begin(), outputs_.end(), s) != outputs_.end())
    throw PreconditionError("state \"" + label(s) + "\" is already an output");
  if (std::find(inputs_.begin(), inputs_.end(), s) == inputs_.end()) inputs_.push_back(s);
}

void OpticalGraph::add_output(StateId s) {
  require_state(s);
  if (std::find(inputs_.begin(), inputs_.end(), s) != inputs_.end())
    throw PreconditionError("state \"" + label(s) + "\" is already an input");
  if (std::find(outputs_.begin(), outputs_.end(), s) == outputs_.end()) outputs_.push_back(s);
}

void OpticalGraph::clear_ports() {
  inputs_.clear();
  outputs_.clear();
}

bool OpticalGraph::is_port(StateId s) const {
  return std::find(inputs_.begin(), inputs_.end(), s) != inputs_.end() ||
         std::find(outputs_.begin(), outputs_.end(), s) != outputs_.end();
}

bool OpticalGraph::has_state(StateId s) const {
  return s.valid() && s.index < labels_.size() && labels_[s.index].has_value();
}

bool OpticalGraph::has_edge(EdgeId e) const {
  return e.valid() && e.index < edges_.size() && edges_[e.index].has_value();
}

const std::string& OpticalGraph::label(StateId s) const {
  require_state(s);
  return *labels_[s.index];
}

std::optional<StateId> OpticalGraph::find_state(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

const OpticalGraph::Edge& OpticalGraph::edge(EdgeId e) const {
  if (!has_edge(e)) throw UnknownEdgeError("unknown edge id");
  return *edges_[e.index];
}

std::vector<StateId> OpticalGraph::states() const {
  std::vector<StateId> out;
  out.reserve(live_states_);
  for (std::uint32_t i = 0; i < labels_.size(); ++i)
    if (labels_[i].has_value()) out.push_back(StateId{i});
  return out;
}

std::vector<EdgeId> OpticalGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (std::uint32_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].has_value()) out.push_back(EdgeId{i});
  return out;
}

const std::vector<EdgeId>& OpticalGraph::out_edges(StateId s) const {
  require_state(s);
  return out_[s.index];
}

const std::vector<EdgeId>& OpticalGraph::in_edges(StateId s) const {
  require_state(s);
  return in_[s.index];
}

std::vector<EdgeId> OpticalGraph::loop_edges(StateId s) const {
  std::vector<EdgeId> result;
  for (EdgeId e : out_edges(s))
    if (edge(e).to == s) result.push_back(e);
  return result;
}

std::vector<EdgeId> OpticalGraph::in_edges_excluding_loops(StateId s) const {
  std::vector<EdgeId> result;
  for (EdgeId e : in_edges(s))
    if (edge(e).from != s) result.push_back(e);
  return result;
}

std::vector<EdgeId> OpticalGraph::out_edges_excluding_loops(StateId s) const {
  std::vector<EdgeId> result;
  for (EdgeId e : out_edges(s))
    if (edge(e).to != s) result.push_back(e);
  return result;
}

std::vector<EdgeId> OpticalGraph::edges_between(StateId u, StateId v) const {
  std::vector<EdgeId> result;
  for (EdgeId e : out_edges(u))
    if (edge(e).to == v) result.push_back(e);
  return result;
}

Amplitude OpticalGraph::walk_weight(std::span<const EdgeId> walk) const {
  Amplitude product{1.0, 0.0};
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Edge& rec = edge(walk[i]);
    if (i > 0 && edge(walk[i - 1]).to != rec.from)
      throw PreconditionError("walk edges are not connected head to tail");
    product *= rec.weight;
  }
  return product;
}

bool operator==(const OpticalGraph& a, const OpticalGraph& b) {
  if (a.labels_.size() != b.labels_.size() || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.labels_.size(); ++i)
    if (a.labels_[i] != b.labels_[i]) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& ea = a.edges_[i];
    const auto& eb = b.edges_[i];
    if (ea.has_value() != eb.has_value()) return false;
    if (ea && (ea->from != eb->from || ea->to != eb->to || ea->weight != eb->weight)) return false;
  }
  return a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_;
}

StateId OpticalGraph::require_state(StateId s) const {
  if (!has_state(s)) throw UnknownStateError("unknown or removed state id");
  return s;
}

}  // namespace optigraph
