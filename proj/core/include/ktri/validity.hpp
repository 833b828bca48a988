#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ktri/formula.hpp"
#include "ktri/model.hpp"
#include "ktri/world_sets.hpp"

namespace ktri {

inline constexpr std::size_t kDefaultCellBound = 12;

/// Raised instead of answering when an exhaustive search would exceed its
/// configured size. Never silently truncated.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(std::size_t cells, std::size_t bound);
  std::size_t cells() const noexcept { return cells_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t cells_;
  std::size_t bound_;
};

/// Throws BoundExceeded if worlds * vars > bound.
void check_cell_bound(std::size_t worlds, std::size_t vars, std::size_t bound);

/// Steps through all 4^(worlds * vars) valuations of `vars` variables on a
/// frame with `worlds` worlds. The first variable varies slowest.
class ValuationEnumerator {
 public:
  ValuationEnumerator(std::size_t worlds, std::size_t vars);

  std::span<const WorldSets> current() const noexcept { return sets_; }
  /// Advances; false once every valuation has been visited.
  bool next() noexcept;

  /// Builds the current valuation onto `frame`.
  Model to_model(const Frame& frame, const std::vector<std::string>& names) const;

 private:
  std::size_t worlds_;
  std::vector<std::uint64_t> codes_;
  std::vector<WorldSets> sets_;
};

enum class FrameProperty {
  Reflexive,
  Transitive,
  Symmetric,
  Euclidean,
  Serial,
  PartialFunctional,
  Coreflexive,
  EmptyRelation,
  Equivalence,
  Preorder,
};

std::string_view property_name(FrameProperty p);
/// Accepts property names as printed by property_name() plus the frame
/// class names T, S4, S5, F, Ver and 1.
std::optional<FrameProperty> parse_property(std::string_view name);
const std::vector<FrameProperty>& all_properties();

bool frame_property(const Frame& fr, FrameProperty p);

/// Every model on `fr` over Var(s) makes `s` hold. Valuations of other
/// variables cannot change the verdict since evaluation only reads the
/// atoms it recurses into.
bool sequent_valid_on_frame(const Frame& fr, const Sequent& s,
                            std::size_t bound = kDefaultCellBound);

/// First countermodel in enumeration order, if any.
std::optional<PointedModel> sequent_countermodel_on_frame(const Frame& fr, const Sequent& s,
                                                          std::size_t bound = kDefaultCellBound);

/// Formula validity: supported-true at every world of every model on `fr`.
bool formula_valid_on_frame(const Frame& fr, const Formula& f,
                            std::size_t bound = kDefaultCellBound);

std::optional<PointedModel> formula_countermodel_on_frame(const Frame& fr, const Formula& f,
                                                          std::size_t bound = kDefaultCellBound);

}  // namespace ktri
