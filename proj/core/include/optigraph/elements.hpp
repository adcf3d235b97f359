#pragma once

#include <vector>

#include "optigraph/graph.hpp"
#include "optigraph/types.hpp"

namespace optigraph {

/// Optical element catalog. Amplitude convention: reflection
/// contributes a factor r, transmission a factor i*t, propagation over
/// d contributes exp(i k d), a phase plate exp(i theta).
struct Element {
  enum class Kind { Mirror, BeamSplitter, Membrane, Propagation, PhaseShift };

  Kind kind = Kind::Mirror;
  double r = 0.0;      // amplitude reflectance, in [0, 1]
  double t = 0.0;      // amplitude transmittance, in [0, 1]
  double d = 0.0;      // propagation length, > 0
  double theta = 0.0;  // phase, radians

  static Element mirror(double r, double t);
  static Element beam_splitter(double r, double t);
  static Element membrane(double r, double t);
  static Element propagation(double d);
  static Element phase_shift(double theta);

  /// True when r^2 + t^2 == 1 within 1e-12 (r/t kinds only).
  bool lossless(double tol = 1e-12) const;
};

/// Michelson interferometer: beam splitter (r, t), perfect end mirrors
/// at arm lengths d1 and d2. States A (input), B, C, D (output).
OpticalGraph build_michelson(double r, double t, double d1, double d2, const EvalContext& ctx);

/// Two-mirror cavity of length d, both mirrors (r, t). States A
/// (input), B (intracavity), C (transmission output). With
/// reflection_port, a counter-propagating state D at the input side is
/// added as a second output so the reflected field is available too.
OpticalGraph build_fabry_perot(double r, double t, double d, const EvalContext& ctx,
                               bool reflection_port = false);

/// Cavity with N dispersive membranes inside. Both cavity mirrors are
/// `mirror`; gaps[i] is the distance between consecutive elements
/// (mirror, membranes..., mirror), so gaps.size() == membranes.size() + 1.
/// States A1 (input) .. A(N+3) (output).
OpticalGraph build_membrane_cavity(const Element& mirror, const std::vector<Element>& membranes,
                                   const std::vector<double>& gaps, const EvalContext& ctx);

struct CavityMichelsonParams {
  double r1, t1;  // power recycling mirror
  double r2, t2;  // beam splitter
  double r3, t3;  // arm cavity mirrors (both, identical)
  double d0;      // recycling mirror to beam splitter
  double d1, d2;  // arm 1: splitter -> cavity, cavity length
  double d3, d4;  // arm 2: splitter -> cavity, cavity length
};

/// Michelson with a Fabry-Perot cavity in each arm and a power
/// recycling mirror at the input. States A (input) .. I (output).
OpticalGraph build_cavity_enhanced_michelson(const CavityMichelsonParams& p,
                                             const EvalContext& ctx);

/// Mach-Zehnder interferometer: two beam splitters (r, t) and a phase
/// theta in one arm. States A, B (inputs), C, D, E, F (E, F outputs).
OpticalGraph build_mach_zehnder(double r, double t, double theta);

/// Single beam splitter: inputs A, B; outputs C, D.
OpticalGraph build_beam_splitter(double r, double t);

}  // namespace optigraph
