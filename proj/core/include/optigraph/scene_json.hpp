#pragma once

#include <filesystem>
#include <string>

#include "optigraph/scene.hpp"

namespace optigraph {

/// Scene file schema (JSON):
///   {
///     "states":  ["A", "B", ...],
///     "edges":   [{"from": "A", "to": "B",
///                  "coeff": [re, im],
///                  "pathlength": 1.5 | "2*d0 + d1"}, ...],
///     "inputs":  ["A"], "outputs": ["B"],
///     "params":  {"d0": 1.0, ...}        // optional
///   }
/// The wavenumber is never stored; it is supplied at evaluation time.
SceneSpec parse_scene(const std::string& json_text);
SceneSpec load_scene(const std::filesystem::path& file);
std::string serialize_scene(const SceneSpec& spec);

}  // namespace optigraph
