#pragma once

// Internal: JSON conversions shared by the serializers. Not installed.

#include <json.hpp>
#include <optional>

#include "ktri/formula.hpp"
#include "ktri/model.hpp"

namespace ktri::detail {

using json = nlohmann::ordered_json;

json frame_json(const Frame& fr);
json model_json(const Model& m, std::optional<std::size_t> designated = std::nullopt);

Frame frame_from(const json& j);
Model model_from(const json& j);

}  // namespace ktri::detail
