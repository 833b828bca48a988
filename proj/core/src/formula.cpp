#include "ktri/formula.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ktri {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string_view language_name(Language lang) {
  return lang == Language::Tri ? "tri" : "box";
}

bool is_atom_name(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Formula Formula::make(Connective kind, std::string name, Formula a, Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  switch (kind) {
    case Connective::Atom:
      h = mix(h, std::hash<std::string>{}(node->name));
      break;
    case Connective::And:
    case Connective::Or:
      node->size = 1 + a.size() + b.size();
      node->tri_depth = std::max(a.tri_depth(), b.tri_depth());
      node->has_tri = a.has_tri() || b.has_tri();
      node->has_box = a.has_box() || b.has_box();
      h = mix(mix(h, a.hash()), b.hash());
      break;
    case Connective::Not:
    case Connective::Tri:
    case Connective::Box:
      node->size = 1 + a.size();
      node->tri_depth = a.tri_depth() + (kind == Connective::Tri ? 1 : 0);
      node->has_tri = a.has_tri() || kind == Connective::Tri;
      node->has_box = a.has_box() || kind == Connective::Box;
      h = mix(h, a.hash());
      break;
  }
  node->hash = h;
  node->children = {std::move(a), std::move(b)};
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  if (!is_atom_name(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  return make(Connective::Atom, std::move(name), Formula(), Formula());
}

Formula Formula::negation(Formula child) {
  return make(Connective::Not, {}, std::move(child), Formula());
}

Formula Formula::conjunction(Formula left, Formula right) {
  return make(Connective::And, {}, std::move(left), std::move(right));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return make(Connective::Or, {}, std::move(left), std::move(right));
}

Formula Formula::tri(Formula child) {
  return make(Connective::Tri, {}, std::move(child), Formula());
}

Formula Formula::box(Formula child) {
  return make(Connective::Box, {}, std::move(child), Formula());
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Connective::Atom:
      return a.name() == b.name();
    case Connective::And:
    case Connective::Or:
      return a.left() == b.left() && a.right() == b.right();
    default:
      return a.child() == b.child();
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_ || !b.node_) return a.node_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Connective::Atom:
      return a.name().compare(b.name()) <=> 0;
    case Connective::And:
    case Connective::Or:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
    default:
      return a.child() <=> b.child();
  }
}

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = std::move(stack.back());
    stack.pop_back();
    if (!out.insert(g).second) continue;
    switch (g.kind()) {
      case Connective::Atom:
        break;
      case Connective::And:
      case Connective::Or:
        stack.push_back(g.left());
        stack.push_back(g.right());
        break;
      default:
        stack.push_back(g.child());
    }
  }
  return out;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  for (const Formula& g : subformulas(f)) {
    if (g.is(Connective::Atom)) out.insert(g.name());
  }
  return out;
}

std::set<std::string> variables(const Sequent& s) {
  auto out = variables(s.premise);
  out.merge(variables(s.conclusion));
  return out;
}

}  // namespace ktri
