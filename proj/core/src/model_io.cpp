#include "ktri/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"

namespace ktri {

namespace detail {

json frame_json(const Frame& fr) {
  json rel = json::array();
  for (auto [a, b] : fr.edges()) rel.push_back({fr.name(a), fr.name(b)});
  return {{"worlds", fr.worlds()}, {"rel", std::move(rel)}};
}

json model_json(const Model& m, std::optional<std::size_t> designated) {
  json j = frame_json(m.frame());
  json val = json::object();
  for (std::size_t w = 0; w < m.frame().size(); ++w) {
    json at = json::object();
    for (const auto& var : m.variables()) at[var] = std::string(1, to_char(m.value(w, var)));
    val[m.frame().name(w)] = std::move(at);
  }
  j["val"] = std::move(val);
  if (designated) j["designated"] = m.frame().name(*designated);
  return j;
}

Frame frame_from(const json& j) {
  if (!j.is_object()) throw ModelFormatError("model must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "worlds" && key != "rel" && key != "val" && key != "designated") {
      throw ModelFormatError("unknown key \"" + key + "\"");
    }
  }
  if (!j.contains("worlds") || !j["worlds"].is_array() || j["worlds"].empty()) {
    throw ModelFormatError("\"worlds\" must be a nonempty array");
  }
  std::vector<std::string> worlds;
  for (const auto& w : j["worlds"]) {
    if (!w.is_string()) throw ModelFormatError("world identifiers must be strings");
    worlds.push_back(w.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("rel")) {
    if (!j["rel"].is_array()) throw ModelFormatError("\"rel\" must be an array of pairs");
    for (const auto& e : j["rel"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw ModelFormatError("\"rel\" entries must be [source, target] string pairs");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  try {
    return Frame(std::move(worlds), edges);
  } catch (const UnknownWorld& e) {
    throw ModelFormatError(std::string("\"rel\" refers to an ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ModelFormatError(e.what());
  }
}

Model model_from(const json& j) {
  Model m(frame_from(j));
  if (!j.contains("val")) return m;
  if (!j["val"].is_object()) throw ModelFormatError("\"val\" must be an object");
  for (const auto& [world, vars] : j["val"].items()) {
    auto w = m.frame().find(world);
    if (!w) throw ModelFormatError("\"val\" refers to unknown world '" + world + "'");
    if (!vars.is_object()) throw ModelFormatError("valuation of '" + world + "' must be an object");
    for (const auto& [var, v] : vars.items()) {
      if (!is_atom_name(var)) throw ModelFormatError("invalid variable name '" + var + "'");
      std::optional<FourValue> value;
      if (v.is_string() && v.get<std::string>().size() == 1) {
        value = value_from_char(v.get<std::string>()[0]);
      }
      if (!value) throw ModelFormatError("value of '" + var + "' at '" + world + "' must be T, B, N or F");
      m.set_value(*w, var, *value);
    }
  }
  return m;
}

}  // namespace detail

namespace {

detail::json parse(std::string_view text) {
  try {
    return detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw ModelFormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Model model_from_json(std::string_view text) { return detail::model_from(parse(text)); }

Frame frame_from_json(std::string_view text) { return detail::frame_from(parse(text)); }

PointedModel pointed_model_from_json(std::string_view text) {
  auto j = parse(text);
  Model m = detail::model_from(j);
  if (!j.contains("designated") || !j["designated"].is_string()) {
    throw ModelFormatError("pointed model needs a \"designated\" world");
  }
  auto w = m.frame().find(j["designated"].get<std::string>());
  if (!w) throw ModelFormatError("designated world is not a world of the model");
  return {std::move(m), *w};
}

std::string to_json(const Model& m, std::optional<std::size_t> designated) {
  return detail::model_json(m, designated).dump(2);
}

std::string to_json(const PointedModel& pm) { return to_json(pm.model, pm.world); }

std::string to_json(const Frame& fr) { return detail::frame_json(fr).dump(2); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model load_model(const std::filesystem::path& path) { return model_from_json(read_text_file(path)); }

Frame load_frame(const std::filesystem::path& path) { return frame_from_json(read_text_file(path)); }

}  // namespace ktri
