#include "ktri/model.hpp"

#include <algorithm>
#include <set>

#include "ktri/formula.hpp"

namespace ktri {

char to_char(FourValue v) noexcept {
  switch (v) {
    case FourValue::T:
      return 'T';
    case FourValue::F:
      return 'F';
    case FourValue::B:
      return 'B';
    case FourValue::N:
      break;
  }
  return 'N';
}

std::optional<FourValue> value_from_char(char c) noexcept {
  switch (c) {
    case 'T':
      return FourValue::T;
    case 'F':
      return FourValue::F;
    case 'B':
      return FourValue::B;
    case 'N':
      return FourValue::N;
    default:
      return std::nullopt;
  }
}

Frame::Frame(std::vector<std::string> worlds,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : worlds_(std::move(worlds)) {
  if (worlds_.empty()) throw std::invalid_argument("a frame needs at least one world");
  std::set<std::string_view> seen;
  for (const auto& w : worlds_) {
    if (w.empty()) throw std::invalid_argument("empty world identifier");
    if (!seen.insert(w).second) throw std::invalid_argument("duplicate world '" + w + "'");
  }
  adj_.assign(worlds_.size() * worlds_.size(), false);
  succ_.resize(worlds_.size());
  for (const auto& [from, to] : edges) add_edge(index(from), index(to));
}

Frame Frame::indexed(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
  Frame f(std::move(names));
  for (auto [a, b] : edges) f.add_edge(a, b);
  return f;
}

std::optional<std::size_t> Frame::find(std::string_view world) const {
  auto it = std::find(worlds_.begin(), worlds_.end(), world);
  if (it == worlds_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - worlds_.begin());
}

std::size_t Frame::index(std::string_view world) const {
  if (auto i = find(world)) return *i;
  throw UnknownWorld(std::string(world));
}

std::vector<std::pair<std::size_t, std::size_t>> Frame::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (related(a, b)) out.emplace_back(a, b);
  return out;
}

std::size_t Frame::edge_count() const noexcept {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), true));
}

void Frame::add_edge(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) throw std::out_of_range("edge endpoint out of range");
  if (adj_[from * size() + to]) return;
  adj_[from * size() + to] = true;
  auto& s = succ_[from];
  s.insert(std::upper_bound(s.begin(), s.end(), to), to);
}

void Frame::remove_edge(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) throw std::out_of_range("edge endpoint out of range");
  if (!adj_[from * size() + to]) return;
  adj_[from * size() + to] = false;
  auto& s = succ_[from];
  s.erase(std::find(s.begin(), s.end(), to));
}

Model::Model(Frame frame) : frame_(std::move(frame)), val_(frame_.size()) {}

FourValue Model::value(std::size_t world, std::string_view var) const {
  const auto& m = val_.at(world);
  auto it = m.find(var);
  return it == m.end() ? FourValue::N : it->second;
}

void Model::declare(const std::string& var) {
  if (!is_atom_name(var)) throw std::invalid_argument("invalid variable name '" + var + "'");
  vars_.insert(var);
}

void Model::set_value(std::size_t world, const std::string& var, FourValue v) {
  declare(var);
  auto& m = val_.at(world);
  if (v == FourValue::N) {
    m.erase(var);
  } else {
    m[var] = v;
  }
}

bool operator==(const Model& a, const Model& b) {
  return a.frame_ == b.frame_ && a.vars_ == b.vars_ && a.val_ == b.val_;
}

Model dual_model(const Model& m) {
  Model d(m.frame());
  for (const auto& var : m.variables()) {
    d.declare(var);
    for (std::size_t w = 0; w < m.frame().size(); ++w) {
      FourValue v = m.value(w, var);
      if (v == FourValue::B) {
        v = FourValue::N;
      } else if (v == FourValue::N) {
        v = FourValue::B;
      }
      d.set_value(w, var, v);
    }
  }
  return d;
}

}  // namespace ktri
