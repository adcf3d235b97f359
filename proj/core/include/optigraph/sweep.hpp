#pragma once

#include <string>
#include <vector>

#include "optigraph/scene.hpp"
#include "optigraph/types.hpp"

namespace optigraph {

/// Response of a scene between two labelled states at one wavenumber.
/// The target may be any state, sink or not.
Amplitude evaluate_response(const SceneSpec& spec, const std::string& input,
                            const std::string& target, const EvalContext& ctx);

struct SweepConfig {
  double k_min = 0.0;
  double k_max = 0.0;
  int steps = 0;  // >= 2, endpoints included
  std::string input;
  std::string output;
};

struct SweepRow {
  double k = 0.0;
  Amplitude gamma;
  bool divergent = false;  // gamma is NaN when set
};

/// Evaluates the scene on a uniform wavenumber grid. Rows are
/// independent of each other and returned in ascending k; a divergent
/// row is flagged rather than aborting the sweep.
std::vector<SweepRow> sweep_response(const SceneSpec& spec, const SweepConfig& config);

struct ScanResult {
  double argmax = 0.0;
  Amplitude gamma;      // response at the argmax
  double mag2 = 0.0;    // |gamma|^2
  bool flat = false;    // objective constant across the range
};

/// Maximizes |Gamma(input -> target)|^2 over one named length
/// parameter: a uniform grid pass brackets the best point, then
/// golden-section refinement pins it down. Divergent points are
/// skipped.
ScanResult scan_length(const SceneSpec& spec, const std::string& param, double lo, double hi,
                       const std::string& input, const std::string& target,
                       const EvalContext& ctx, int grid_points = 65);

}  // namespace optigraph
