#include "optigraph/elements.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "optigraph/errors.hpp"
#include "optigraph/oracle.hpp"
#include "optigraph/response.hpp"
#include "optigraph/scene.hpp"
#include "support/closed_forms.hpp"

using namespace optigraph;

namespace {

constexpr Amplitude kI{0.0, 1.0};
constexpr double kInvSqrt2 = 0.70710678118654752440;

Amplitude gamma_between(const OpticalGraph& g, const char* in, const char* out) {
  return response_factor(g, *g.find_state(in), *g.find_state(out)).value;
}

Amplitude edge_weight(const OpticalGraph& g, const char* from, const char* to) {
  const StateId u = *g.find_state(from);
  const StateId v = *g.find_state(to);
  const auto edges = u == v ? g.loop_edges(u) : g.edges_between(u, v);
  EXPECT_EQ(edges.size(), 1u) << from << " -> " << to;
  return g.edge(edges[0]).weight;
}

TEST(ElementTest, LosslessFlag) {
  EXPECT_TRUE(Element::mirror(0.6, 0.8).lossless());
  EXPECT_FALSE(Element::mirror(0.6, 0.7).lossless());
  EXPECT_TRUE(Element::propagation(1.0).lossless());
  EXPECT_THROW(Element::beam_splitter(1.2, 0.0), PreconditionError);
  EXPECT_THROW(Element::membrane(-0.1, 0.5), PreconditionError);
}

TEST(Michelson, BalancedEqualArmsIsLosslessPhase) {
  const double d = 0.8, k = 1.9;
  OpticalGraph g = build_michelson(kInvSqrt2, kInvSqrt2, d, d, EvalContext(k));
  const Amplitude gamma = gamma_between(g, "A", "D");
  EXPECT_LT(std::abs(gamma - kI * std::polar(1.0, 2.0 * k * d)), 1e-14);
  EXPECT_NEAR(std::norm(gamma), 1.0, 1e-14);
}

TEST(Michelson, NoTransmissionMeansDarkOutput) {
  OpticalGraph g = build_michelson(1.0, 0.0, 1.0, 1.3, EvalContext(2.0));
  EXPECT_EQ(std::abs(gamma_between(g, "A", "D")), 0.0);
}

TEST(Michelson, GenericParametersMatchClosedForm) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coeff(0.05, 0.95), len(0.1, 3.0), wave(0.5, 12.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double r = coeff(rng), t = coeff(rng), d1 = len(rng), d2 = len(rng), k = wave(rng);
    OpticalGraph g = build_michelson(r, t, d1, d2, EvalContext(k));
    const Amplitude expected = closed_forms::michelson(r, t, d1, d2, k);
    EXPECT_LT(std::abs(gamma_between(g, "A", "D") - expected), 1e-12 * std::abs(expected));
  }
}

TEST(FabryPerot, ResonantLosslessCavityTransmitsFully) {
  const double r = 0.9, t = std::sqrt(1.0 - 0.81), d = 1.0;
  OpticalGraph g = build_fabry_perot(r, t, d, EvalContext(M_PI / d));
  const Amplitude gamma = gamma_between(g, "A", "C");
  EXPECT_LT(std::abs(gamma - Amplitude{1.0, 0.0}), 1e-12);
}

TEST(FabryPerot, NoMirrorsIsASinglePass) {
  const double d = 1.0, k = 1.1;
  OpticalGraph g = build_fabry_perot(0.0, 1.0, d, EvalContext(k));
  EXPECT_LT(std::abs(gamma_between(g, "A", "C") + std::polar(1.0, k * d)), 1e-14);
}

TEST(FabryPerot, PerfectMirrorRejected) {
  EXPECT_THROW(build_fabry_perot(1.0, 0.0, 1.0, EvalContext(1.0)), PreconditionError);
}

TEST(FabryPerot, LosslessEnergySplitsBetweenPorts) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> refl(0.05, 0.95), wave(0.5, 12.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double r = refl(rng), t = std::sqrt(1.0 - r * r), k = wave(rng);
    OpticalGraph g = build_fabry_perot(r, t, 1.0, EvalContext(k), /*reflection_port=*/true);
    const StateId a = *g.find_state("A");
    const double trans = std::norm(response_factor_dense(g, a, *g.find_state("C")));
    const double refl2 = std::norm(response_factor_dense(g, a, *g.find_state("D")));
    EXPECT_NEAR(trans + refl2, 1.0, 1e-10);
    // and the closed reflection form agrees
    EXPECT_LT(std::abs(response_factor_dense(g, a, *g.find_state("D")) -
                       closed_forms::fabry_perot_reflection(r, t, 1.0, k)),
              1e-12);
  }
}

// The generated membrane-cavity weights must match the two-membrane
// transition-amplitude table entry for entry.
TEST(MembraneCavity, TwoMembraneWeightTable) {
  const double r = 0.9, t = std::sqrt(1.0 - 0.81);
  const double r1 = 0.5, t1 = std::sqrt(0.75), r2 = 0.4, t2 = std::sqrt(1.0 - 0.16);
  const double d1 = 1.0, d2 = 1.1, d3 = 0.9, k = 2.7;
  OpticalGraph g =
      build_membrane_cavity(Element::mirror(r, t),
                            {Element::membrane(r1, t1), Element::membrane(r2, t2)},
                            {d1, d2, d3}, EvalContext(k));
  ASSERT_EQ(g.state_count(), 5u);
  EXPECT_EQ(g.edge_count(), 10u);
  const auto ph = [&](double len) { return std::polar(1.0, k * len); };

  EXPECT_LT(std::abs(edge_weight(g, "A1", "A2") - kI * t), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "A2", "A3") - kI * t1 * ph(d1)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "A2", "A2") - r1 * r * ph(2 * d1)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "A3", "A3") - r2 * r1 * ph(2 * d2)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "A3", "A4") - kI * t2 * ph(d2)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "A3", "A2") - r2 * (kI * t1) * r * ph(2 * d2 + d1)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "A4", "A2") -
                     r * (kI * t2) * (kI * t1) * r * ph(2 * d3 + d2 + d1)),
            1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "A4", "A3") - r * (kI * t2) * r1 * ph(2 * d3 + d2)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "A4", "A4") - r * r2 * ph(2 * d3)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "A4", "A5") - kI * t * ph(d3)), 1e-15);
}

TEST(MembraneCavity, NoMembranesIsACavity) {
  const double r = 0.85, t = 0.4, d = 1.3, k = 2.0;
  OpticalGraph g = build_membrane_cavity(Element::mirror(r, t), {}, {d}, EvalContext(k));
  EXPECT_EQ(g.state_count(), 3u);
  const Amplitude expected = closed_forms::fabry_perot_transmission(r, t, d, k);
  EXPECT_LT(std::abs(gamma_between(g, "A1", "A3") - expected), 1e-14);
}

TEST(MembraneCavity, OneMembraneClosedForm) {
  const double r = 0.9, t = std::sqrt(1.0 - 0.81);
  const double r1 = 0.45, t1 = std::sqrt(1.0 - 0.45 * 0.45);
  const double d1 = 0.9, d2 = 1.15, k = 3.3;
  OpticalGraph g = build_membrane_cavity(Element::mirror(r, t), {Element::membrane(r1, t1)},
                                         {d1, d2}, EvalContext(k));
  const Amplitude expected = closed_forms::one_membrane(r, t, r1, t1, d1, d2, k);
  EXPECT_LT(std::abs(gamma_between(g, "A1", "A4") - expected), 1e-12 * std::abs(expected));
}

TEST(MembraneCavity, GapCountValidated) {
  EXPECT_THROW(build_membrane_cavity(Element::mirror(0.9, 0.4),
                                     {Element::membrane(0.5, 0.8)}, {1.0}, EvalContext(1.0)),
               PreconditionError);
}

TEST(CavityMichelson, WeightTable) {
  const CavityMichelsonParams p{0.9, std::sqrt(1.0 - 0.81), kInvSqrt2, kInvSqrt2,
                                0.8, 0.55, 0.7, 1.2, 2.1, 1.4, 1.9};
  const double k = 2.4;
  OpticalGraph g = build_cavity_enhanced_michelson(p, EvalContext(k));
  ASSERT_EQ(g.state_count(), 9u);
  EXPECT_EQ(g.edge_count(), 15u);
  const auto ph = [&](double len) { return std::polar(1.0, k * len); };

  EXPECT_LT(std::abs(edge_weight(g, "A", "B") - kI * p.t1 * ph(p.d0)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "B", "C") - Amplitude{p.r2, 0.0}), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "B", "F") - kI * p.t2), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "C", "D") - p.r3 * ph(p.d1)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "C", "E") - kI * p.t3 * p.r3 * ph(p.d1 + p.d2)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "E", "E") - p.r3 * p.r3 * ph(2 * p.d2)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "E", "D") - kI * p.t3 * ph(p.d2)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "D", "I") - kI * p.t2 * ph(p.d1)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "D", "B") - p.r1 * p.r2 * ph(p.d1 + 2 * p.d0)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "F", "G") - p.r3 * ph(p.d3)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "F", "H") - kI * p.t3 * p.r3 * ph(p.d3 + p.d4)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "H", "H") - p.r3 * p.r3 * ph(2 * p.d4)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "H", "G") - kI * p.t3 * ph(p.d4)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "G", "I") - p.r2 * ph(p.d3)), 1e-15);
  EXPECT_LT(std::abs(edge_weight(g, "G", "B") - kI * p.t2 * p.r1 * ph(p.d3 + 2 * p.d0)), 1e-15);
}

TEST(CavityMichelson, MatchesClosedForm) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> refl(0.1, 0.6), len(0.2, 2.5), wave(0.5, 9.0);
  for (int trial = 0; trial < 25; ++trial) {
    CavityMichelsonParams p{};
    p.r1 = refl(rng);
    p.t1 = std::sqrt(1.0 - p.r1 * p.r1);
    p.r2 = refl(rng);
    p.t2 = std::sqrt(1.0 - p.r2 * p.r2);
    p.r3 = refl(rng);
    p.t3 = std::sqrt(1.0 - p.r3 * p.r3);
    p.d0 = len(rng);
    p.d1 = len(rng);
    p.d2 = len(rng);
    p.d3 = len(rng);
    p.d4 = len(rng);
    const double k = wave(rng);
    OpticalGraph g = build_cavity_enhanced_michelson(p, EvalContext(k));
    const Amplitude expected = closed_forms::cavity_michelson_output(p, k);
    EXPECT_LT(std::abs(gamma_between(g, "A", "I") - expected),
              1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST(CavityMichelson, BlockedInputGivesNoOutput) {
  const CavityMichelsonParams p{0.9, 0.0, kInvSqrt2, kInvSqrt2,
                                0.8, 0.55, 0.7, 1.2, 2.1, 1.4, 1.9};
  OpticalGraph g = build_cavity_enhanced_michelson(p, EvalContext(2.0));
  EXPECT_EQ(std::abs(gamma_between(g, "A", "I")), 0.0);
}

TEST(MachZehnder, AllFourResponses) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> coeff(0.05, 0.95), angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 25; ++trial) {
    const double r = coeff(rng), t = coeff(rng), theta = angle(rng);
    OpticalGraph g = build_mach_zehnder(r, t, theta);
    EXPECT_LT(std::abs(gamma_between(g, "A", "E") - closed_forms::mz_ae(r, t, theta)), 1e-14);
    EXPECT_LT(std::abs(gamma_between(g, "B", "E") - closed_forms::mz_be(r, t, theta)), 1e-14);
    EXPECT_LT(std::abs(gamma_between(g, "A", "F") - closed_forms::mz_af(r, t, theta)), 1e-14);
    EXPECT_LT(std::abs(gamma_between(g, "B", "F") - closed_forms::mz_bf(r, t, theta)), 1e-14);
  }
}

TEST(MachZehnder, BalancedConstructiveAndDarkPorts) {
  OpticalGraph g0 = build_mach_zehnder(kInvSqrt2, kInvSqrt2, 0.0);
  EXPECT_EQ(gamma_between(g0, "B", "E"), (Amplitude{0.0, 0.0}));
  EXPECT_LT(std::abs(gamma_between(g0, "A", "E") - kI), 1e-15);

  OpticalGraph gpi = build_mach_zehnder(kInvSqrt2, kInvSqrt2, M_PI);
  EXPECT_LT(std::abs(gamma_between(gpi, "A", "E")), 1e-15);
}

TEST(Builders, AgreeWithDenseOracle) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> coeff(0.1, 0.7), len(0.2, 2.0), wave(0.5, 8.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double k = wave(rng);
    const EvalContext ctx(k);

    OpticalGraph mich = build_michelson(coeff(rng), coeff(rng), len(rng), len(rng), ctx);
    EXPECT_LT(std::abs(gamma_between(mich, "A", "D") -
                       response_factor_dense(mich, *mich.find_state("A"), *mich.find_state("D"))),
              1e-12);

    OpticalGraph fp = build_fabry_perot(coeff(rng), coeff(rng), len(rng), ctx, true);
    EXPECT_LT(std::abs(gamma_between(fp, "A", "C") -
                       response_factor_dense(fp, *fp.find_state("A"), *fp.find_state("C"))),
              1e-12);

    const std::vector<Element> membranes{Element::membrane(coeff(rng), coeff(rng)),
                                         Element::membrane(coeff(rng), coeff(rng)),
                                         Element::membrane(coeff(rng), coeff(rng))};
    OpticalGraph mem = build_membrane_cavity(Element::mirror(coeff(rng), coeff(rng)), membranes,
                                             {len(rng), len(rng), len(rng), len(rng)}, ctx);
    EXPECT_LT(std::abs(gamma_between(mem, "A1", "A6") -
                       response_factor_dense(mem, *mem.find_state("A1"), *mem.find_state("A6"))),
              1e-11);

    OpticalGraph mz = build_mach_zehnder(coeff(rng), coeff(rng), wave(rng));
    EXPECT_LT(std::abs(gamma_between(mz, "A", "F") -
                       response_factor_dense(mz, *mz.find_state("A"), *mz.find_state("F"))),
              1e-13);
  }
}

TEST(AssembleScene, MirrorsTheCavityBuilder) {
  const double r = 0.9, t = std::sqrt(1.0 - 0.81), d = 1.0, k = 2.6;
  SceneSpec spec;
  spec.states = {"A", "B", "C"};
  spec.edges.push_back({"A", "B", kI * t, PathLength{0.0, {}}});
  spec.edges.push_back({"B", "B", {r * r, 0.0}, PathLength{0.0, {{"d", 2.0}}}});
  spec.edges.push_back({"B", "C", kI * t, PathLength{0.0, {{"d", 1.0}}}});
  spec.inputs = {"A"};
  spec.outputs = {"C"};
  spec.params["d"] = d;

  OpticalGraph assembled = assemble_scene(spec, EvalContext(k));
  OpticalGraph built = build_fabry_perot(r, t, d, EvalContext(k));
  EXPECT_TRUE(assembled == built);
}

TEST(AssembleScene, EmptyEdgeListGivesEdgelessGraph) {
  SceneSpec spec;
  spec.states = {"A", "B"};
  OpticalGraph g = assemble_scene(spec, EvalContext(1.0));
  EXPECT_EQ(g.state_count(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(AssembleScene, UndeclaredStateRejected) {
  SceneSpec spec;
  spec.states = {"A"};
  spec.edges.push_back({"A", "Zz", {1.0, 0.0}, PathLength{}});
  EXPECT_THROW(assemble_scene(spec, EvalContext(1.0)), SceneError);
}

}  // namespace
