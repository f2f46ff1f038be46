#pragma once

#include <string>

#include <json.hpp>

#include "levyscale/model.hpp"

namespace levyscale {

/// Model JSON schema:
///   {"label": str, "components": [{"type": "gaussian", "sigma": f},
///    {"type": "drift", "mu": f}, {"type": "theta", "c": f, "alpha": f,
///     "beta": f, "lambda": f}, ...]}
/// Complex parameters are written as {"re": f, "im": f}.
nlohmann::json model_to_json(const Model& m);
Model model_from_json(const nlohmann::json& j);

Model load_model_file(const std::string& path);
void save_model_file(const Model& m, const std::string& path);

} // namespace levyscale
