#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ktri/model.hpp"

namespace ktri {

/// A model drawn in one of the reference figures or worked examples.
struct FigureModel {
  std::string id;  // also the data file stem
  std::string caption;
  PointedModel model;
};

const std::vector<FigureModel>& figure_models();
/// Throws std::out_of_range for unknown ids.
const FigureModel& figure_model(std::string_view id);

struct FigureCheck {
  std::string figure;
  std::string claim;
  std::string expected;
  std::string actual;
  bool passed = false;
};

/// Re-derives every figure claim (evaluations, proofs, frame checks and the
/// bounded formula scans at 9 nodes). Deterministic.
std::vector<FigureCheck> run_figure_checks();

}  // namespace ktri
