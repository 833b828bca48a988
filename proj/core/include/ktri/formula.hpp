#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace ktri {

enum class Connective : std::uint8_t { Atom, Not, And, Or, Tri, Box };

// L_tri has no Box node, L_box has no Tri node. Purely propositional
// formulas belong to both.
enum class Language : std::uint8_t { Tri, Box };

std::string_view language_name(Language lang);

/// Immutable formula tree with shared structure.
///
/// Copies are cheap (one shared_ptr). Equality and ordering are structural;
/// the ordering is total and deterministic (size first, then connective,
/// then atom name, then children), so std::set<Formula> iterates smaller
/// formulas first.
class Formula {
 public:
  /// Empty placeholder; only assignment and destruction are valid on it.
  Formula() = default;

  static Formula atom(std::string name);
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula tri(Formula child);
  static Formula box(Formula child);

  // Derived operators, desugared on construction.
  static Formula nabla(Formula child) { return negation(tri(std::move(child))); }
  static Formula diamond(Formula child) {
    return negation(box(negation(std::move(child))));
  }

  Connective kind() const noexcept;
  bool is(Connective c) const noexcept;

  /// Atom name; empty for compound formulas.
  const std::string& name() const noexcept;

  /// Only child of Not/Tri/Box.
  const Formula& child() const noexcept;
  const Formula& left() const noexcept;
  const Formula& right() const noexcept;

  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;
  int tri_depth() const noexcept;
  bool has_tri() const noexcept;
  bool has_box() const noexcept;
  bool in_language(Language lang) const noexcept {
    return lang == Language::Tri ? !has_box() : !has_tri();
  }

  /// Node identity; identical nodes are trivially equal.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::string name, Formula a, Formula b);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  std::string name;
  std::array<Formula, 2> children;
  std::size_t size = 1;
  std::size_t hash = 0;
  int tri_depth = 0;
  bool has_tri = false;
  bool has_box = false;
};

inline Connective Formula::kind() const noexcept { return node_->kind; }
inline bool Formula::is(Connective c) const noexcept { return node_->kind == c; }
inline const std::string& Formula::name() const noexcept { return node_->name; }
inline const Formula& Formula::child() const noexcept { return node_->children[0]; }
inline const Formula& Formula::left() const noexcept { return node_->children[0]; }
inline const Formula& Formula::right() const noexcept { return node_->children[1]; }
inline std::size_t Formula::size() const noexcept { return node_->size; }
inline std::size_t Formula::hash() const noexcept { return node_->hash; }
inline int Formula::tri_depth() const noexcept { return node_->tri_depth; }
inline bool Formula::has_tri() const noexcept { return node_->has_tri; }
inline bool Formula::has_box() const noexcept { return node_->has_box; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

struct Sequent {
  Formula premise;
  Formula conclusion;

  bool in_language(Language lang) const noexcept {
    return premise.in_language(lang) && conclusion.in_language(lang);
  }
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// Whether `name` matches [a-z][a-z0-9_]*.
bool is_atom_name(std::string_view name) noexcept;

/// Every subtree of `f`, `f` included.
std::set<Formula> subformulas(const Formula& f);

/// Names of the atoms occurring in `f`.
std::set<std::string> variables(const Formula& f);
std::set<std::string> variables(const Sequent& s);

}  // namespace ktri
