#include "optigraph/elements.hpp"

#include <cmath>
#include <string>

#include "optigraph/errors.hpp"

namespace optigraph {

namespace {

constexpr Amplitude kI{0.0, 1.0};

void check_coefficient(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0))
    throw PreconditionError(std::string(name) + " must lie in [0, 1]");
}

void check_rt(double r, double t) {
  check_coefficient(r, "reflectance");
  check_coefficient(t, "transmittance");
}

WeightMonomial phase(double pathlength) { return {Amplitude{1.0, 0.0}, pathlength}; }

}  // namespace

Element Element::mirror(double r, double t) {
  check_rt(r, t);
  return {Kind::Mirror, r, t, 0.0, 0.0};
}

Element Element::beam_splitter(double r, double t) {
  check_rt(r, t);
  return {Kind::BeamSplitter, r, t, 0.0, 0.0};
}

Element Element::membrane(double r, double t) {
  check_rt(r, t);
  return {Kind::Membrane, r, t, 0.0, 0.0};
}

Element Element::propagation(double d) {
  if (!(d > 0.0)) throw PreconditionError("propagation length must be positive");
  return {Kind::Propagation, 0.0, 0.0, d, 0.0};
}

Element Element::phase_shift(double theta) { return {Kind::PhaseShift, 0.0, 0.0, 0.0, theta}; }

bool Element::lossless(double tol) const {
  if (kind == Kind::Propagation || kind == Kind::PhaseShift) return true;
  return std::abs(r * r + t * t - 1.0) <= tol;
}

OpticalGraph build_michelson(double r, double t, double d1, double d2, const EvalContext& ctx) {
  check_rt(r, t);
  OpticalGraph g;
  StateId a = g.add_state("A");
  StateId b = g.add_state("B");
  StateId c = g.add_state("C");
  StateId d = g.add_state("D");
  // Each arm folds the perfect end-mirror round trip into one edge.
  g.add_edge(a, c, WeightMonomial{kI * t, 2.0 * d1}.evaluate(ctx));
  g.add_edge(a, b, WeightMonomial{Amplitude{r, 0.0}, 2.0 * d2}.evaluate(ctx));
  g.add_edge(c, d, {r, 0.0});
  g.add_edge(b, d, kI * t);
  g.add_input(a);
  g.add_output(d);
  return g;
}

OpticalGraph build_fabry_perot(double r, double t, double d, const EvalContext& ctx,
                               bool reflection_port) {
  check_rt(r, t);
  if (r >= 1.0) throw PreconditionError("cavity mirror reflectance must be < 1");
  OpticalGraph g;
  StateId a = g.add_state("A");
  StateId b = g.add_state("B");
  StateId c = g.add_state("C");
  g.add_edge(a, b, kI * t);
  g.add_edge(b, b, WeightMonomial{Amplitude{r * r, 0.0}, 2.0 * d}.evaluate(ctx));
  g.add_edge(b, c, WeightMonomial{kI * t, d}.evaluate(ctx));
  g.add_input(a);
  g.add_output(c);
  if (reflection_port) {
    StateId refl = g.add_state("D");
    g.add_edge(a, refl, {r, 0.0});
    // round trip ending in a transmission back out the input mirror
    g.add_edge(b, refl, WeightMonomial{kI * t * r, 2.0 * d}.evaluate(ctx));
    g.add_output(refl);
  }
  return g;
}

OpticalGraph build_membrane_cavity(const Element& mirror, const std::vector<Element>& membranes,
                                   const std::vector<double>& gaps, const EvalContext& ctx) {
  if (gaps.size() != membranes.size() + 1)
    throw PreconditionError("need exactly one gap more than membranes");
  if (mirror.r >= 1.0) throw PreconditionError("cavity mirror reflectance must be < 1");
  check_rt(mirror.r, mirror.t);
  for (const Element& m : membranes) check_rt(m.r, m.t);

  // Elements along the axis: input mirror, membranes, output mirror.
  const std::size_t n = membranes.size();
  std::vector<Element> axis;
  axis.reserve(n + 2);
  axis.push_back(mirror);
  axis.insert(axis.end(), membranes.begin(), membranes.end());
  axis.push_back(mirror);

  OpticalGraph g;
  std::vector<StateId> states;  // A1 before the input mirror, Ak after element k-1
  for (std::size_t k = 1; k <= n + 3; ++k) states.push_back(g.add_state("A" + std::to_string(k)));

  // forward edges: transmit element k after crossing the gap before it
  g.add_edge(states[0], states[1], kI * axis[0].t);
  for (std::size_t k = 2; k <= n + 2; ++k)
    g.add_edge(states[k - 1], states[k],
               WeightMonomial{kI * axis[k - 1].t, gaps[k - 2]}.evaluate(ctx));

  // backward edges and loops: from A_k, bounce off element k, transmit
  // every element down to j, reflect off element j-1, end at A_j
  for (std::size_t k = 2; k <= n + 2; ++k) {
    for (std::size_t j = 2; j <= k; ++j) {
      WeightMonomial w{Amplitude{axis[k - 1].r, 0.0}, gaps[k - 2]};
      for (std::size_t m = j; m <= k - 1; ++m)
        w = w * WeightMonomial{kI * axis[m - 1].t, 0.0};
      for (std::size_t m = j - 1; m <= k - 1; ++m) w = w * phase(gaps[m - 1]);
      w = w * WeightMonomial{Amplitude{axis[j - 2].r, 0.0}, 0.0};
      g.add_edge(states[k - 1], states[j - 1], w.evaluate(ctx));
    }
  }

  g.add_input(states.front());
  g.add_output(states.back());
  return g;
}

OpticalGraph build_cavity_enhanced_michelson(const CavityMichelsonParams& p,
                                             const EvalContext& ctx) {
  check_rt(p.r1, p.t1);
  check_rt(p.r2, p.t2);
  check_rt(p.r3, p.t3);
  OpticalGraph g;
  StateId sa = g.add_state("A");
  StateId sb = g.add_state("B");
  StateId sc = g.add_state("C");
  StateId sd = g.add_state("D");
  StateId se = g.add_state("E");
  StateId sf = g.add_state("F");
  StateId sg = g.add_state("G");
  StateId sh = g.add_state("H");
  StateId si = g.add_state("I");

  const auto mono = [&](Amplitude coeff, double len) {
    return WeightMonomial{coeff, len}.evaluate(ctx);
  };

  g.add_edge(sa, sb, mono(kI * p.t1, p.d0));
  g.add_edge(sb, sc, {p.r2, 0.0});
  g.add_edge(sb, sf, kI * p.t2);
  g.add_edge(sc, sd, mono({p.r3, 0.0}, p.d1));
  g.add_edge(sc, se, mono(kI * p.t3 * p.r3, p.d1 + p.d2));
  g.add_edge(se, se, mono({p.r3 * p.r3, 0.0}, 2.0 * p.d2));
  g.add_edge(se, sd, mono(kI * p.t3, p.d2));
  g.add_edge(sd, si, mono(kI * p.t2, p.d1));
  g.add_edge(sd, sb, mono({p.r1 * p.r2, 0.0}, p.d1 + 2.0 * p.d0));
  g.add_edge(sf, sg, mono({p.r3, 0.0}, p.d3));
  g.add_edge(sf, sh, mono(kI * p.t3 * p.r3, p.d3 + p.d4));
  g.add_edge(sh, sh, mono({p.r3 * p.r3, 0.0}, 2.0 * p.d4));
  g.add_edge(sh, sg, mono(kI * p.t3, p.d4));
  g.add_edge(sg, si, mono({p.r2, 0.0}, p.d3));
  g.add_edge(sg, sb, mono(kI * p.t2 * p.r1, p.d3 + 2.0 * p.d0));
  g.add_input(sa);
  g.add_output(si);
  return g;
}

OpticalGraph build_mach_zehnder(double r, double t, double theta) {
  check_rt(r, t);
  OpticalGraph g;
  StateId a = g.add_state("A");
  StateId b = g.add_state("B");
  StateId c = g.add_state("C");
  StateId d = g.add_state("D");
  StateId e = g.add_state("E");
  StateId f = g.add_state("F");
  const Amplitude arm = std::polar(1.0, theta);
  g.add_edge(a, c, kI * t);
  g.add_edge(a, d, {r, 0.0});
  g.add_edge(b, c, {r, 0.0});
  g.add_edge(b, d, kI * t);
  g.add_edge(c, e, {r, 0.0});
  g.add_edge(c, f, kI * t);
  g.add_edge(d, e, kI * t * arm);
  g.add_edge(d, f, Amplitude{r, 0.0} * arm);
  g.add_input(a);
  g.add_input(b);
  g.add_output(e);
  g.add_output(f);
  return g;
}

OpticalGraph build_beam_splitter(double r, double t) {
  check_rt(r, t);
  OpticalGraph g;
  StateId a = g.add_state("A");
  StateId b = g.add_state("B");
  StateId c = g.add_state("C");
  StateId d = g.add_state("D");
  g.add_edge(a, c, kI * t);
  g.add_edge(a, d, {r, 0.0});
  g.add_edge(b, c, {r, 0.0});
  g.add_edge(b, d, kI * t);
  g.add_input(a);
  g.add_input(b);
  g.add_output(c);
  g.add_output(d);
  return g;
}

}  // namespace optigraph
