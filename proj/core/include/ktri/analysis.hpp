#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ktri/formula.hpp"
#include "ktri/model.hpp"
#include "ktri/parser.hpp"
#include "ktri/validity.hpp"

namespace ktri {

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Frames are numbered by relation code: bit i*n+j set iff wi -> wj.
Frame frame_from_code(std::size_t worlds, std::uint64_t code);
std::uint64_t frame_count(std::size_t worlds);

/// 2^(n^2) * 4^(n*|vars|).
std::uint64_t model_count(std::size_t worlds, std::size_t vars);

/// Visits every model with exactly `worlds` worlds over `vars`: relation
/// codes in increasing order outside, valuations inside (first variable
/// slowest). Returning false from `visit` stops the walk. Throws
/// BoundExceeded if worlds * |vars| exceeds `bound`.
void enumerate_models(std::size_t worlds, const std::set<std::string>& vars,
                      const std::function<bool(const Model&)>& visit,
                      std::size_t bound = kDefaultCellBound);

/// Smallest frames first, then relation code, valuation, lowest world.
std::optional<PointedModel> find_countermodel(const Sequent& s, std::size_t max_worlds,
                                              std::size_t bound = kDefaultCellBound);

/// All formulas of `lang` over `vars` with at most `max_size` nodes, each
/// once. Ordered by size; within a size: atoms, negations, the modal
/// operator, conjunctions, disjunctions (binary ones by left-operand size).
std::vector<Formula> enumerate_formulas(Language lang, const std::set<std::string>& vars,
                                        std::size_t max_size);

// ---------------------------------------------------------------------------
// Frame definability
// ---------------------------------------------------------------------------

/// A sequent, or a formula (valid on a frame iff supported-true everywhere).
using Condition = std::variant<Sequent, Formula>;

Condition parse_condition(std::string_view text);
std::string render(const Condition& c, Style style = Style::Ascii);
bool condition_valid_on_frame(const Frame& fr, const Condition& c,
                              std::size_t bound = kDefaultCellBound);

/// The frame classes T, S4, S5, F, Ver, 1 with their defining conditions.
struct FrameClass {
  std::string name;
  FrameProperty property;
  std::vector<Condition> conditions;
};
const std::vector<FrameClass>& standard_frame_classes();

enum class Disagreement : std::uint8_t {
  PropertyButInvalid,  // frame has the property, some condition fails on it
  ValidButNoProperty,  // all conditions valid, property fails
};
std::string_view disagreement_name(Disagreement d);

struct DefinabilityReport {
  FrameProperty property;
  std::vector<Condition> conditions;
  std::size_t max_size = 0;
  bool defines = true;
  /// First disagreeing frame in enumeration order.
  std::optional<Frame> witness;
  std::optional<Disagreement> direction;
  /// First frame for each direction.
  std::optional<Frame> witness_property_but_invalid;
  std::optional<Frame> witness_valid_but_no_property;
  std::size_t frames_checked = 0;
  std::size_t frames_with_property = 0;
  std::size_t frames_all_valid = 0;
  std::size_t disagreements = 0;
  double seconds = 0;
};

/// Compares the property with joint validity of `conditions` on every
/// labelled frame with 1..max_size worlds.
DefinabilityReport check_definability(FrameProperty property, std::vector<Condition> conditions,
                                      std::size_t max_size, std::size_t bound = kDefaultCellBound);

std::string to_json(const DefinabilityReport& r);

// ---------------------------------------------------------------------------
// Indistinguishability
// ---------------------------------------------------------------------------

enum class SeparationMode : std::uint8_t {
  /// Violation: b has value T (resp. F) at its world but a does not.
  Transfer,
  /// Violation: value B at a's or b's world.
  Glut,
  /// Violation: the two values differ.
  Value,
};
std::string_view mode_name(SeparationMode m);
std::optional<SeparationMode> parse_mode(std::string_view name);
/// Transfer for the □ language, Glut for the ▲ language.
SeparationMode default_mode(Language lang);

struct IndistinguishabilityReport {
  PointedModel a;
  PointedModel b;
  Language language;
  SeparationMode mode;
  std::set<std::string> variables;
  std::size_t max_size = 0;
  std::size_t formulas_checked = 0;
  /// First violating formula in enumeration order, with its values.
  std::optional<Formula> separating;
  FourValue value_a = FourValue::N;
  FourValue value_b = FourValue::N;
  double seconds = 0;

  bool separated() const noexcept { return separating.has_value(); }
};

/// Scans enumerate_formulas(lang, vars, max_size). `vars` defaults to the
/// variables declared in both models.
IndistinguishabilityReport check_indistinguishability(
    const PointedModel& a, const PointedModel& b, Language lang, std::size_t max_size,
    std::optional<SeparationMode> mode = std::nullopt,
    std::optional<std::set<std::string>> vars = std::nullopt);

std::string to_json(const IndistinguishabilityReport& r);

}  // namespace ktri
