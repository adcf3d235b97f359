#include "optigraph/scene_json.hpp"

#include <fstream>
#include <json.hpp>

#include "optigraph/errors.hpp"

namespace optigraph {

namespace {

using nlohmann::json;

PathLength pathlength_from_json(const json& j) {
  if (j.is_number()) return PathLength{j.get<double>(), {}};
  if (j.is_string()) return PathLength::parse(j.get<std::string>());
  throw SceneError("pathlength must be a number or a parameter expression string");
}

std::vector<std::string> labels_from_json(const json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  for (const auto& item : j.at(key)) out.push_back(item.get<std::string>());
  return out;
}

}  // namespace

SceneSpec parse_scene(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SceneError(std::string("scene is not valid JSON: ") + e.what());
  }
  try {
    SceneSpec spec;
    spec.states = labels_from_json(j, "states");
    spec.inputs = labels_from_json(j, "inputs");
    spec.outputs = labels_from_json(j, "outputs");
    if (j.contains("edges")) {
      for (const auto& ej : j.at("edges")) {
        SceneSpec::Edge e;
        e.from = ej.at("from").get<std::string>();
        e.to = ej.at("to").get<std::string>();
        const auto& coeff = ej.at("coeff");
        if (!coeff.is_array() || coeff.size() != 2)
          throw SceneError("edge coeff must be [re, im]");
        e.coeff = Amplitude{coeff[0].get<double>(), coeff[1].get<double>()};
        e.pathlength = ej.contains("pathlength") ? pathlength_from_json(ej.at("pathlength"))
                                                 : PathLength{};
        spec.edges.push_back(std::move(e));
      }
    }
    if (j.contains("params"))
      for (const auto& [name, value] : j.at("params").items())
        spec.params[name] = value.get<double>();
    return spec;
  } catch (const json::exception& e) {
    throw SceneError(std::string("malformed scene: ") + e.what());
  }
}

SceneSpec load_scene(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw SceneError("cannot open scene file: " + file.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_scene(text);
}

std::string serialize_scene(const SceneSpec& spec) {
  json j;
  j["states"] = spec.states;
  j["edges"] = json::array();
  for (const auto& e : spec.edges) {
    json ej;
    ej["from"] = e.from;
    ej["to"] = e.to;
    ej["coeff"] = {e.coeff.real(), e.coeff.imag()};
    if (e.pathlength.terms.empty())
      ej["pathlength"] = e.pathlength.constant;
    else
      ej["pathlength"] = e.pathlength.to_string();
    j["edges"].push_back(std::move(ej));
  }
  j["inputs"] = spec.inputs;
  j["outputs"] = spec.outputs;
  if (!spec.params.empty()) j["params"] = spec.params;
  return j.dump(2) + "\n";
}

}  // namespace optigraph
