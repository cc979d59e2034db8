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
#include "socval/model_io.hpp"

#include "socval/error.hpp"
#include "socval/ols.hpp"
#include "socval/text.hpp"

namespace socval {

using nlohmann::json;

json model_to_json(const Model& model) {
    validate(model);
    json j;
    j["family"] = family_tag(family(model));
    j["d"] = dims(model);
    if (const auto* em = std::get_if<EnsembleModel>(&model)) {
        j["constant"] = em->constant();
        json members = json::array();
        for (const auto& m : em->members()) {
            json entry;
            entry["gamma"] = m.gamma;
            if (m.model.reads_social()) entry["feature"] = "S";
            else entry["feature"] = m.model.feature;
            entry["threshold"] = m.model.threshold;
            entry["left"] = m.model.left;
            entry["right"] = m.model.right;
            entry["uses_s"] = m.uses_s;
            members.push_back(std::move(entry));
        }
        j["members"] = std::move(members);
        return j;
    }
    j["columns"] = design_columns(dims(model), family(model));
    j["coefficients"] = design_coefficients(model);
    return j;
}

Model model_from_json(const json& j) {
    try {
        const auto fam = parse_model_family(j.at("family").get<std::string>());
        const auto d = j.at("d").get<std::size_t>();
        if (fam == ModelFamily::ensemble) {
            std::vector<EnsembleMember> members;
            for (const auto& entry : j.at("members")) {
                EnsembleMember m;
                m.gamma = entry.at("gamma").get<double>();
                const auto& feature = entry.at("feature");
                if (feature.is_string()) {
                    if (feature.get<std::string>() != "S") throw FormatError("model: string feature must be \"S\"");
                    m.model.feature = Stump::social;
                } else {
                    m.model.feature = feature.get<std::size_t>();
                }
                m.model.threshold = entry.at("threshold").get<double>();
                m.model.left = entry.at("left").get<double>();
                m.model.right = entry.at("right").get<double>();
                m.uses_s = entry.at("uses_s").get<bool>();
                members.push_back(m);
            }
            return EnsembleModel(d, j.at("constant").get<double>(), std::move(members));
        }
        const auto coefficients = j.at("coefficients").get<std::vector<double>>();
        Model model = model_from_design(fam, d, coefficients);
        validate(model);
        return model;
    } catch (const json::exception& e) {
        throw FormatError(std::string("model: ") + e.what());
    }
}

std::string format_model(const Model& model) { return model_to_json(model).dump(2) + "\n"; }

Model parse_model(std::string_view contents) {
    json j;
    try {
        j = json::parse(contents);
    } catch (const json::exception& e) {
        throw FormatError(std::string("model: ") + e.what());
    }
    return model_from_json(j);
}

void write_model(const std::filesystem::path& path, const Model& model) { text::write_file(path, format_model(model)); }

Model read_model(const std::filesystem::path& path) { return parse_model(text::read_file(path)); }

} // namespace socval
