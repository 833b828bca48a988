#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ktri/formula.hpp"

namespace ktri {

/// Syntax error; `offset()` is the byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Surface syntax (ASCII / glyph):
//   ~ ¬   & ∧   | ∨   # ▲   @ ▽   [] □   <> ◇   |- ⊢   ( )
// Unary operators bind tightest, then &, then |. Both binary operators
// associate to the left. @ and <> are desugared to ~# and ~[]~.
Formula parse_formula(std::string_view text);

/// Exactly one turnstile is required.
Sequent parse_sequent(std::string_view text);

enum class Style {
  Ascii,   // machine mode, re-parsable, ASCII only
  Pretty,  // glyphs; ~# is shown as ▽
};

std::string render(const Formula& f, Style style = Style::Ascii);
std::string render(const Sequent& s, Style style = Style::Ascii);

}  // namespace ktri
