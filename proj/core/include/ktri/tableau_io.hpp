#pragma once

#include <optional>
#include <string>

#include "ktri/parser.hpp"
#include "ktri/tableau.hpp"

namespace ktri {

/// Indented proof tree, one item per line with the rule that added it.
/// Alternatives of a split are introduced by "+-" lines; leaves end with
/// "x closed" or "o open".
std::string proof_text(const ProofNode& tree, Style style = Style::Pretty);

/// {"verdict", "sequent"?, "stats", "tree", "countermodel"?}. Formulas are
/// written in ASCII syntax.
std::string result_json(const TableauResult& r, const std::optional<Sequent>& s = std::nullopt);

}  // namespace ktri
