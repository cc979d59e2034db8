/*
Copyright 2026 The socval Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "socval/models.hpp"

namespace socval {

/// Model JSON:
///
///   {"family": "linear" | "interaction", "d": 1,
///    "columns": [...], "coefficients": [...]}          // design layout
///   {"family": "ensemble", "d": 1, "constant": 0.0,
///    "members": [{"gamma": 1.0, "feature": 0 | "S", "threshold": 1.0,
///                 "left": 0.0, "right": 1.0, "uses_s": false}, ...]}
nlohmann::json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& j);

std::string format_model(const Model& model);
Model parse_model(std::string_view contents);

void write_model(const std::filesystem::path& path, const Model& model);
Model read_model(const std::filesystem::path& path);

} // namespace socval
