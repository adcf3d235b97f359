#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "optigraph/graph.hpp"
#include "optigraph/types.hpp"

namespace optigraph {

/// A length that may reference named scene parameters:
/// constant + sum(multiplier * params[name]). Edges use these so one
/// scene file can be re-evaluated while a length parameter is scanned.
struct PathLength {
  double constant = 0.0;
  std::vector<std::pair<std::string, double>> terms;

  double resolve(const std::map<std::string, double>& params) const;

  /// Parses "2*d0 + d1 + 0.5" style linear expressions.
  static PathLength parse(const std::string& text);
  std::string to_string() const;
};

/// Declarative form of an optical graph: every edge weight is
/// coefficient * exp(i k pathlength) once a wavenumber is chosen.
struct SceneSpec {
  struct Edge {
    std::string from;
    std::string to;
    Amplitude coeff;
    PathLength pathlength;
  };

  std::vector<std::string> states;
  std::vector<Edge> edges;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::map<std::string, double> params;
};

/// Builds the evaluated graph at the context's wavenumber. Throws
/// SceneError on undeclared labels, unknown parameters, or non-finite
/// coefficients.
OpticalGraph assemble_scene(const SceneSpec& spec, const EvalContext& ctx);

}  // namespace optigraph
