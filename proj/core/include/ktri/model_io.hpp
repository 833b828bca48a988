#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ktri/model.hpp"

namespace ktri {

// Model files are JSON objects:
//
//   {"worlds": ["w0", "w1"],
//    "rel":    [["w0", "w1"]],
//    "val":    {"w0": {"p": "T"}, "w1": {"p": "B"}},
//    "designated": "w0"}            // pointed models only
//
// Values are one of "T", "B", "N", "F"; omitted variables are "N". A frame
// file is the same object with "val" absent (or ignored).

class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Model model_from_json(std::string_view text);
Frame frame_from_json(std::string_view text);
/// Requires a "designated" world.
PointedModel pointed_model_from_json(std::string_view text);

/// Writes every declared variable at every world, N included, so that a
/// model round-trips exactly.
std::string to_json(const Model& m, std::optional<std::size_t> designated = std::nullopt);
std::string to_json(const PointedModel& pm);
std::string to_json(const Frame& fr);

std::string read_text_file(const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);
Frame load_frame(const std::filesystem::path& path);

}  // namespace ktri
