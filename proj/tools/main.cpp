// optigraph: response factors, spectra and quantum mode transforms of
// linear optical setups described as weighted directed graph scenes.
//
// Exit codes: 0 ok, 2 scene/parse error, 3 divergent loop, 4 usage.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "optigraph/errors.hpp"
#include "optigraph/quantum.hpp"
#include "optigraph/response.hpp"
#include "optigraph/scene_json.hpp"
#include "optigraph/sweep.hpp"

namespace {

using optigraph::Amplitude;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDivergent = 3;
constexpr int kExitUsage = 4;

// Locale-independent shortest round-trip formatting.
std::string fmt(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

struct CommonArgs {
  std::string scene;
  std::string input;
  std::string output;
  double k = 1.0;
  std::string format = "csv";
};

void print_response_record(const CommonArgs& args, Amplitude gamma) {
  if (args.format == "json") {
    json j{{"k", args.k},
           {"re", gamma.real()},
           {"im", gamma.imag()},
           {"mag2", std::norm(gamma)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "k,re,im,mag2\n"
              << fmt(args.k) << "," << fmt(gamma.real()) << "," << fmt(gamma.imag()) << ","
              << fmt(std::norm(gamma)) << "\n";
  }
}

// `respond` and `intermediate` share this path: the target may be any
// state, sink or not; the subcommands differ only in intent.
int run_respond(const CommonArgs& args) {
  optigraph::SceneSpec spec = optigraph::load_scene(args.scene);
  Amplitude gamma =
      optigraph::evaluate_response(spec, args.input, args.output, optigraph::EvalContext(args.k));
  print_response_record(args, gamma);
  return kExitOk;
}

int run_sweep(const CommonArgs& args, double k_min, double k_max, int steps) {
  optigraph::SceneSpec spec = optigraph::load_scene(args.scene);
  optigraph::SweepConfig config;
  config.k_min = k_min;
  config.k_max = k_max;
  config.steps = steps;
  config.input = args.input;
  config.output = args.output;
  const auto rows = optigraph::sweep_response(spec, config);

  for (const auto& row : rows)
    if (row.divergent)
      std::cerr << "warning: divergent response at k=" << fmt(row.k) << "\n";

  if (args.format == "json") {
    json out = json::array();
    for (const auto& row : rows) {
      json j{{"k", row.k},
             {"re", row.gamma.real()},
             {"im", row.gamma.imag()},
             {"mag2", std::norm(row.gamma)}};
      if (row.divergent) j["divergent"] = true;
      out.push_back(std::move(j));
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "k,re,im,mag2\n";
    for (const auto& row : rows)
      std::cout << fmt(row.k) << "," << fmt(row.gamma.real()) << "," << fmt(row.gamma.imag())
                << "," << fmt(std::norm(row.gamma)) << "\n";
  }
  return kExitOk;
}

int run_scan(const CommonArgs& args, const std::string& param, double lo, double hi, int grid) {
  optigraph::SceneSpec spec = optigraph::load_scene(args.scene);
  const auto result = optigraph::scan_length(spec, param, lo, hi, args.input, args.output,
                                             optigraph::EvalContext(args.k), grid);
  if (args.format == "json") {
    json j{{"param", param},      {"argmax", result.argmax}, {"re", result.gamma.real()},
           {"im", result.gamma.imag()}, {"mag2", result.mag2},     {"flat", result.flat}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "param,argmax,re,im,mag2,flat\n"
              << param << "," << fmt(result.argmax) << "," << fmt(result.gamma.real()) << ","
              << fmt(result.gamma.imag()) << "," << fmt(result.mag2) << ","
              << (result.flat ? 1 : 0) << "\n";
  }
  return kExitOk;
}

int run_quantum(const CommonArgs& args, const std::string& state_expr,
                std::vector<std::string> inputs, std::vector<std::string> outputs) {
  optigraph::SceneSpec spec = optigraph::load_scene(args.scene);
  const optigraph::OpticalGraph g = optigraph::assemble_scene(spec, optigraph::EvalContext(args.k));
  if (inputs.empty()) inputs = spec.inputs;
  if (outputs.empty()) outputs = spec.outputs;

  const auto resolve = [&g](const std::vector<std::string>& labels) {
    std::vector<optigraph::StateId> ids;
    for (const auto& label : labels) {
      auto id = g.find_state(label);
      if (!id) throw optigraph::SceneError("scene has no state labelled \"" + label + "\"");
      ids.push_back(*id);
    }
    return ids;
  };

  const auto transform = optigraph::mode_transform(g, resolve(inputs), resolve(outputs));
  const auto state = optigraph::parse_fock_expression(state_expr, transform.input_labels);
  const auto amplitudes = optigraph::fock_amplitudes(apply_transform(state, transform));

  if (args.format == "json") {
    json j;
    j["modes"] = amplitudes.modes;
    j["amplitudes"] = json::array();
    for (const auto& [occ, amp] : amplitudes.amplitudes) {
      json entry{{"n", occ}, {"re", amp.real()}, {"im", amp.imag()}, {"mag", std::abs(amp)}};
      j["amplitudes"].push_back(std::move(entry));
    }
    j["norm"] = amplitudes.norm;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& mode : amplitudes.modes) std::cout << "n_" << mode << ",";
    std::cout << "re,im,mag\n";
    for (const auto& [occ, amp] : amplitudes.amplitudes) {
      for (auto n : occ) std::cout << n << ",";
      std::cout << fmt(amp.real()) << "," << fmt(amp.imag()) << "," << fmt(std::abs(amp)) << "\n";
    }
    std::cout << "# norm," << fmt(amplitudes.norm) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"response factors and quantum mode transforms of linear optical graph scenes"};
  app.require_subcommand(1);

  CommonArgs args;
  double k_min = 0.0, k_max = 0.0;
  int steps = 0, grid = 65;
  std::string param, state_expr;
  double lo = 0.0, hi = 0.0;
  std::vector<std::string> q_inputs, q_outputs;

  const auto add_common = [&](CLI::App* cmd, bool needs_k) {
    cmd->add_option("--scene", args.scene, "scene file (JSON)")->required();
    cmd->add_option("--format", args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    if (needs_k) cmd->add_option("--k", args.k, "wavenumber")->required();
  };

  CLI::App* respond = app.add_subcommand("respond", "response factor between two states");
  add_common(respond, true);
  respond->add_option("--input", args.input, "input state label")->required();
  respond->add_option("--output", args.output, "output state label")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "response factor across a wavenumber range");
  add_common(sweep, false);
  sweep->add_option("--input", args.input)->required();
  sweep->add_option("--output", args.output)->required();
  sweep->add_option("--k-min", k_min, "first wavenumber")->required();
  sweep->add_option("--k-max", k_max, "last wavenumber")->required();
  sweep->add_option("--steps", steps, "row count, endpoints included")->required();

  CLI::App* intermediate =
      app.add_subcommand("intermediate", "resultant field at a state that need not be a sink");
  add_common(intermediate, true);
  intermediate->add_option("--input", args.input)->required();
  intermediate->add_option("--output", args.output, "target state (any state)")->required();

  CLI::App* scan = app.add_subcommand("scan", "maximize |response|^2 over a length parameter");
  add_common(scan, true);
  scan->add_option("--input", args.input)->required();
  scan->add_option("--output", args.output, "objective target state")->required();
  scan->add_option("--param", param, "scene length parameter to vary")->required();
  scan->add_option("--min", lo, "low end of the scan range")->required();
  scan->add_option("--max", hi, "high end of the scan range")->required();
  scan->add_option("--grid", grid, "grid points before refinement");

  CLI::App* quantum = app.add_subcommand("quantum", "Fock amplitudes after the mode transform");
  add_common(quantum, false);
  quantum->add_option("--k", args.k, "wavenumber (default 1)");
  quantum->add_option("--state", state_expr, "creation-operator polynomial, e.g. \"a*b\"")
      ->required();
  quantum->add_option("--input", q_inputs, "input ports (default: scene inputs)");
  quantum->add_option("--output", q_outputs, "output ports (default: scene outputs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (respond->parsed()) return run_respond(args);
    if (sweep->parsed()) return run_sweep(args, k_min, k_max, steps);
    if (intermediate->parsed()) return run_respond(args);
    if (scan->parsed()) return run_scan(args, param, lo, hi, grid);
    if (quantum->parsed()) return run_quantum(args, state_expr, q_inputs, q_outputs);
  } catch (const optigraph::DivergentLoopError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergent;
  } catch (const optigraph::SceneError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const optigraph::ExpressionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const optigraph::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const optigraph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
