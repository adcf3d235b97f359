#pragma once

#include <cmath>
#include <complex>

#include "optigraph/errors.hpp"

namespace optigraph {

/// Complex transition amplitude (an edge weight Phi) or response factor
/// (Gamma); dimensionless.
using Amplitude = std::complex<double>;

inline bool is_finite(Amplitude a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

/// Wavenumber of the monochromatic field, radians per unit length.
struct EvalContext {
  double k;

  explicit EvalContext(double wavenumber) : k(wavenumber) {
    if (!(wavenumber > 0.0) || !std::isfinite(wavenumber))
      throw Error("wavenumber must be finite and strictly positive");
  }
};

/// Symbolic edge weight coefficient * exp(i k * pathlength). Products
/// multiply coefficients and add pathlengths; builders evaluate these
/// to plain amplitudes once the wavenumber is fixed.
struct WeightMonomial {
  Amplitude coefficient{1.0, 0.0};
  double pathlength = 0.0;

  Amplitude evaluate(const EvalContext& ctx) const {
    return coefficient * std::polar(1.0, ctx.k * pathlength);
  }

  friend WeightMonomial operator*(const WeightMonomial& a, const WeightMonomial& b) {
    return {a.coefficient * b.coefficient, a.pathlength + b.pathlength};
  }
};

}  // namespace optigraph
