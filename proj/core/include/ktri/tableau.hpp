#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ktri/formula.hpp"
#include "ktri/model.hpp"
#include "ktri/parser.hpp"

namespace ktri {

// ---------------------------------------------------------------------------
// Labels and items
// ---------------------------------------------------------------------------

/// t: supported true, f: supported false, t̄ / f̄: not supported.
enum class ValueLabel : std::uint8_t { T = 0, F = 1, NotT = 2, NotF = 3 };

/// t <-> t̄, f <-> f̄.
constexpr ValueLabel bar(ValueLabel v) noexcept {
  return static_cast<ValueLabel>(static_cast<std::uint8_t>(v) ^ 2);
}
/// t <-> f, t̄ <-> f̄.
constexpr ValueLabel neg(ValueLabel v) noexcept {
  return static_cast<ValueLabel>(static_cast<std::uint8_t>(v) ^ 1);
}

std::string_view label_name(ValueLabel v, Style style = Style::Ascii);

struct LabelledFormula {
  std::string world;
  Formula formula;
  ValueLabel value;

  friend bool operator==(const LabelledFormula&, const LabelledFormula&) = default;
};

struct RelAtom {
  std::string source;
  std::string target;

  friend bool operator==(const RelAtom&, const RelAtom&) = default;
};

using Item = std::variant<LabelledFormula, RelAtom>;

std::string render(const LabelledFormula& lf, Style style = Style::Ascii);
std::string render(const RelAtom& r, Style style = Style::Ascii);
std::string render(const Item& item, Style style = Style::Ascii);

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

enum class Rule : std::uint8_t {
  Root,
  NotT, NotF, NotTbar, NotFbar,
  AndT, AndF, AndTbar, AndFbar,
  OrT, OrF, OrTbar, OrFbar,
  Cut,
  TriT, TriTPrime, TriB, TriN,  // propagation into existing successors
  TriBPlus, TriNPlus, TriF,     // world creation
};

std::string_view rule_name(Rule r, Style style = Style::Ascii);

// ---------------------------------------------------------------------------
// Branches
// ---------------------------------------------------------------------------

/// One tableau branch: labelled formulas and relational atoms in insertion
/// order, an index from (world, formula) to the set of labels present, the
/// fingerprints of rule instances already fired, and the fresh-world counter.
///
/// A branch is closed as soon as some (world, formula) carries a label
/// together with its bar. A glut (t and f together) does not close.
class Branch {
 public:
  explicit Branch(std::span<const LabelledFormula> root);
  Branch(std::span<const LabelledFormula> root, std::span<const RelAtom> relations);

  /// Returns false if the item was already present.
  bool add(const LabelledFormula& lf);
  bool add(const RelAtom& r);
  bool add(const Item& item);

  bool contains(const LabelledFormula& lf) const;
  bool contains(const RelAtom& r) const;

  bool is_closed() const noexcept { return closed_by_.has_value(); }
  /// The item whose arrival closed the branch.
  std::optional<LabelledFormula> closing_item() const;

  std::vector<Item> items() const;
  std::vector<LabelledFormula> labelled() const;
  std::vector<RelAtom> relations() const;
  /// World labels in order of first occurrence.
  const std::vector<std::string>& worlds() const noexcept { return names_; }
  std::size_t size() const noexcept { return order_.size(); }

  const std::set<std::string>& fired() const noexcept { return fired_; }
  int fresh_counter() const noexcept { return fresh_counter_; }

 private:
  friend struct BranchAccess;

  struct Entry {
    int world;
    Formula formula;
    ValueLabel label;
  };
  struct Key {
    int world;
    Formula formula;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return k.formula.hash() * 1000003u + static_cast<std::size_t>(k.world);
    }
  };

  int intern(const std::string& world);
  std::uint8_t mask(int world, const Formula& f) const;
  bool add_entry(int world, const Formula& f, ValueLabel v);
  bool add_relation(int from, int to);

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
  std::vector<Entry> entries_;
  std::vector<std::pair<int, int>> rels_;
  std::vector<std::vector<int>> succ_;
  std::unordered_map<Key, std::uint8_t, KeyHash> labels_;
  // (is relation, index into entries_/rels_) in insertion order
  std::vector<std::pair<bool, std::size_t>> order_;
  std::set<std::string> fired_;
  int fresh_counter_ = 1;
  std::optional<std::size_t> closed_by_;
};

bool is_closed(const Branch& b);

/// A rule instance chosen for a branch, with one item list per alternative
/// (two for the cut and for the falsity rule of ▲, one otherwise).
struct RuleApplication {
  Rule rule;
  std::string fingerprint;
  std::vector<std::vector<Item>> alternatives;
  int next_fresh_counter;
};

/// Highest-priority applicable rule instance, or nullopt if the branch is
/// closed or complete. Priority: propositional rules, propagation of ▲
/// into existing successors, analytic cuts, world-creating rules.
std::optional<RuleApplication> next_rule(const Branch& b);

/// Applies alternative `which` of `app` to `b` in place.
void apply_rule(Branch& b, const RuleApplication& app, std::size_t which);

/// Successor branches after one rule application; empty iff `b` is closed
/// or complete.
std::vector<Branch> saturation_step(const Branch& b);

// ---------------------------------------------------------------------------
// Proof search
// ---------------------------------------------------------------------------

enum class NodeStatus : std::uint8_t { Internal, Closed, Open };

struct ProofNode {
  Rule rule = Rule::Root;
  std::vector<Item> added;
  std::vector<ProofNode> children;
  NodeStatus status = NodeStatus::Internal;
};

struct TableauStats {
  std::size_t rule_applications = 0;
  std::size_t closed_branches = 0;
  std::size_t max_worlds = 0;
  std::size_t max_branch_size = 0;
};

struct TableauResult {
  bool proved = false;
  ProofNode tree;
  TableauStats stats;
  /// First complete open branch, when not proved.
  std::optional<Branch> open_branch;
  /// Model realising open_branch, pointed at the root world.
  std::optional<PointedModel> countermodel;
};

class LanguageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root {w0:premise;t, w0:conclusion;t̄}. Throws LanguageError for formulas
/// outside L_tri.
TableauResult prove(const Sequent& s);

/// Search from an arbitrary root (e.g. the contraposed root
/// {w0:premise;f̄, w0:conclusion;f}). Depth-first, left alternative first;
/// stops at the first complete open branch.
TableauResult prove_from(std::span<const LabelledFormula> root);

/// Model of a complete open branch: worlds and edges of the branch, v+ from
/// atoms labelled t, v- from atoms labelled f. Pointed at `root_world`
/// (default: the first world of the branch). Throws std::logic_error if the
/// model does not realise the branch.
PointedModel extract_countermodel(const Branch& b, std::optional<std::string> root_world = std::nullopt);

/// Every labelled formula of `b` holds in `m` (t/f supported, t̄/f̄ not).
/// False if some world of `b` is missing from `m`.
bool check_realisation(const Model& m, const Branch& b);

/// Every formula occurring anywhere in the tree.
std::set<Formula> formulas_in_tree(const ProofNode& tree);

}  // namespace ktri
