#include "optigraph/sweep.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "optigraph/errors.hpp"
#include "optigraph/response.hpp"

namespace optigraph {

namespace {

StateId state_or_throw(const OpticalGraph& g, const std::string& label) {
  auto id = g.find_state(label);
  if (!id) throw SceneError("scene has no state labelled \"" + label + "\"");
  return *id;
}

}  // namespace

Amplitude evaluate_response(const SceneSpec& spec, const std::string& input,
                            const std::string& target, const EvalContext& ctx) {
  OpticalGraph g = assemble_scene(spec, ctx);
  return response_factor(g, state_or_throw(g, input), state_or_throw(g, target)).value;
}

std::vector<SweepRow> sweep_response(const SceneSpec& spec, const SweepConfig& config) {
  if (config.steps < 2) throw PreconditionError("sweep needs at least 2 steps");
  if (!(config.k_min < config.k_max)) throw PreconditionError("sweep needs k_min < k_max");

  std::vector<SweepRow> rows(static_cast<std::size_t>(config.steps));
  const double span = config.k_max - config.k_min;
  for (int i = 0; i < config.steps; ++i) {
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    row.k = config.k_min + span * i / (config.steps - 1);
    try {
      row.gamma = evaluate_response(spec, config.input, config.output, EvalContext(row.k));
    } catch (const DivergentLoopError&) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.gamma = {nan, nan};
      row.divergent = true;
    }
  }
  return rows;
}

ScanResult scan_length(const SceneSpec& spec, const std::string& param, double lo, double hi,
                       const std::string& input, const std::string& target,
                       const EvalContext& ctx, int grid_points) {
  if (!(lo < hi)) throw PreconditionError("scan needs a nonempty range");
  if (grid_points < 3) grid_points = 3;
  if (!spec.params.contains(param))
    throw SceneError("scene does not expose a parameter named \"" + param + "\"");

  SceneSpec work = spec;
  const auto objective = [&](double x) -> std::optional<double> {
    work.params[param] = x;
    try {
      return std::norm(evaluate_response(work, input, target, ctx));
    } catch (const DivergentLoopError&) {
      return std::nullopt;
    }
  };

  // grid pass
  double best_x = lo, best_f = -1.0, worst_f = std::numeric_limits<double>::infinity();
  const double span = hi - lo;
  for (int i = 0; i < grid_points; ++i) {
    const double x = lo + span * i / (grid_points - 1);
    if (auto f = objective(x)) {
      worst_f = std::min(worst_f, *f);
      if (*f > best_f) {
        best_f = *f;
        best_x = x;
      }
    }
  }
  if (best_f < 0.0) throw DivergentLoopError("every grid point of the scan", 1.0);

  ScanResult result;
  if (best_f - worst_f <= 1e-14 * std::max(1.0, best_f)) {
    result.flat = true;
    result.argmax = 0.5 * (lo + hi);
  } else {
    // golden-section refinement inside the bracketing grid cells
    const double cell = span / (grid_points - 1);
    double a = std::max(lo, best_x - cell);
    double b = std::min(hi, best_x + cell);
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = objective(x1).value_or(-1.0);
    double f2 = objective(x2).value_or(-1.0);
    for (int iter = 0; iter < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(b) + std::abs(a));
         ++iter) {
      if (f1 > f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = objective(x1).value_or(-1.0);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = objective(x2).value_or(-1.0);
      }
    }
    result.argmax = 0.5 * (a + b);
  }

  work.params[param] = result.argmax;
  result.gamma = evaluate_response(work, input, target, ctx);
  result.mag2 = std::norm(result.gamma);
  return result;
}

}  // namespace optigraph
