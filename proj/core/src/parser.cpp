#include "ktri/parser.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ktri {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

enum class Tok { Ident, Not, And, Or, Tri, Nabla, Box, Diamond, LParen, RParen, Turnstile, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

struct Glyph {
  std::string_view spelling;
  Tok kind;
};

// Longest spellings first so that maximal munch falls out of the scan order.
constexpr Glyph kGlyphs[] = {
    {"\xE2\x8A\xA2", Tok::Turnstile},  // ⊢
    {"\xC2\xAC", Tok::Not},            // ¬
    {"\xE2\x88\xA7", Tok::And},        // ∧
    {"\xE2\x88\xA8", Tok::Or},         // ∨
    {"\xE2\x96\xB2", Tok::Tri},        // ▲
    {"\xE2\x96\xBD", Tok::Nabla},      // ▽
    {"\xE2\x96\xBC", Tok::Nabla},      // ▼
    {"\xE2\x96\xA1", Tok::Box},        // □
    {"\xE2\x97\x87", Tok::Diamond},    // ◇
    {"|-", Tok::Turnstile},
    {"[]", Tok::Box},
    {"<>", Tok::Diamond},
    {"~", Tok::Not},
    {"&", Tok::And},
    {"|", Tok::Or},
    {"#", Tok::Tri},
    {"@", Tok::Nabla},
    {"(", Tok::LParen},
    {")", Tok::RParen},
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < text.size() && ((text[j] >= 'a' && text[j] <= 'z') ||
                                 (text[j] >= '0' && text[j] <= '9') || text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, i, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    bool matched = false;
    for (const Glyph& g : kGlyphs) {
      if (text.substr(i).starts_with(g.spelling)) {
        out.push_back({g.kind, i, std::string(g.spelling)});
        i += g.spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
    }
  }
  out.push_back({Tok::End, text.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

  Formula parse_all() {
    if (peek().kind == Tok::End) throw ParseError("empty formula", peek().offset);
    Formula f = disjunction();
    if (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::RParen) throw ParseError("unbalanced ')'", t.offset);
      throw ParseError("unexpected '" + t.text + "'", t.offset);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Or) {
      next();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      next();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Not:
        return Formula::negation(unary());
      case Tok::Tri:
        return Formula::tri(unary());
      case Tok::Nabla:
        return Formula::nabla(unary());
      case Tok::Box:
        return Formula::box(unary());
      case Tok::Diamond:
        return Formula::diamond(unary());
      case Tok::Ident:
        return Formula::atom(t.text);
      case Tok::LParen: {
        Formula f = disjunction();
        if (peek().kind != Tok::RParen) {
          if (peek().kind == Tok::End) throw ParseError("unbalanced '('", t.offset);
          throw ParseError("expected ')' but found '" + peek().text + "'", peek().offset);
        }
        next();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.offset);
      case Tok::RParen:
        throw ParseError("unbalanced ')'", t.offset);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.offset);
    }
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
};

// Precedence levels: 0 = |, 1 = &, 2 = unary/atom.
int level(const Formula& f) {
  switch (f.kind()) {
    case Connective::Or:
      return 0;
    case Connective::And:
      return 1;
    default:
      return 2;
  }
}

void render_into(const Formula& f, Style style, std::string& out) {
  const bool pretty = style == Style::Pretty;
  auto sub = [&](const Formula& g, bool parens) {
    if (parens) out += '(';
    render_into(g, style, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::Not:
      if (pretty && f.child().is(Connective::Tri)) {
        out += "\xE2\x96\xBD";
        sub(f.child().child(), level(f.child().child()) < 2);
        return;
      }
      out += pretty ? "\xC2\xAC" : "~";
      break;
    case Connective::Tri:
      out += pretty ? "\xE2\x96\xB2" : "#";
      break;
    case Connective::Box:
      out += pretty ? "\xE2\x96\xA1" : "[]";
      break;
    case Connective::And:
      sub(f.left(), level(f.left()) < 1);
      out += pretty ? " \xE2\x88\xA7 " : " & ";
      sub(f.right(), level(f.right()) < 2);
      return;
    case Connective::Or:
      sub(f.left(), false);
      out += pretty ? " \xE2\x88\xA8 " : " | ";
      sub(f.right(), level(f.right()) < 1);
      return;
  }
  sub(f.child(), level(f.child()) < 2);
}

}  // namespace

Formula parse_formula(std::string_view text) {
  auto tokens = lex(text);
  for (const Token& t : tokens) {
    if (t.kind == Tok::Turnstile) throw ParseError("unexpected turnstile in formula", t.offset);
  }
  return Parser(tokens).parse_all();
}

Sequent parse_sequent(std::string_view text) {
  auto tokens = lex(text);
  std::optional<std::size_t> split;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != Tok::Turnstile) continue;
    if (split) throw ParseError("duplicate turnstile", tokens[i].offset);
    split = i;
  }
  if (!split) throw ParseError("missing turnstile '|-'", text.size());

  // Each side gets its own End token so error offsets stay meaningful.
  std::vector<Token> lhs(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(*split));
  lhs.push_back({Tok::End, tokens[*split].offset, {}});
  std::span<const Token> rhs(tokens.begin() + static_cast<std::ptrdiff_t>(*split) + 1, tokens.end());

  Formula premise = Parser(lhs).parse_all();
  Formula conclusion = Parser(rhs).parse_all();
  return {std::move(premise), std::move(conclusion)};
}

std::string render(const Formula& f, Style style) {
  std::string out;
  render_into(f, style, out);
  return out;
}

std::string render(const Sequent& s, Style style) {
  return render(s.premise, style) + (style == Style::Pretty ? " \xE2\x8A\xA2 " : " |- ") +
         render(s.conclusion, style);
}

}  // namespace ktri
