#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ktri {

/// Belnapian value as an independent (supports-truth, supports-falsity) pair.
/// Bit 0 is truth support, bit 1 falsity support.
enum class FourValue : std::uint8_t { N = 0, T = 1, F = 2, B = 3 };

constexpr FourValue make_value(bool truth, bool falsity) noexcept {
  return static_cast<FourValue>((truth ? 1 : 0) | (falsity ? 2 : 0));
}
constexpr bool supports_truth(FourValue v) noexcept { return (static_cast<int>(v) & 1) != 0; }
constexpr bool supports_falsity(FourValue v) noexcept { return (static_cast<int>(v) & 2) != 0; }

char to_char(FourValue v) noexcept;
std::optional<FourValue> value_from_char(char c) noexcept;

class UnknownWorld : public std::out_of_range {
 public:
  explicit UnknownWorld(const std::string& world)
      : std::out_of_range("unknown world '" + world + "'") {}
};

/// Finite Kripke frame. Worlds keep their declaration order; world indices
/// are positions in that order.
class Frame {
 public:
  Frame(std::vector<std::string> worlds,
        const std::vector<std::pair<std::string, std::string>>& edges = {});

  /// Frame on worlds w0..w{n-1} with edges given by index.
  static Frame indexed(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const noexcept { return worlds_.size(); }
  const std::vector<std::string>& worlds() const noexcept { return worlds_; }
  const std::string& name(std::size_t w) const { return worlds_.at(w); }
  std::optional<std::size_t> find(std::string_view world) const;
  /// Throws UnknownWorld.
  std::size_t index(std::string_view world) const;

  bool related(std::size_t from, std::size_t to) const { return adj_[from * size() + to]; }
  const std::vector<std::size_t>& successors(std::size_t w) const { return succ_.at(w); }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const noexcept;

  void add_edge(std::size_t from, std::size_t to);
  void remove_edge(std::size_t from, std::size_t to);

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.worlds_ == b.worlds_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> worlds_;
  std::vector<bool> adj_;
  std::vector<std::vector<std::size_t>> succ_;
};

/// Frame plus a four-valued valuation (v+, v- packed per variable).
///
/// A variable becomes declared the first time it is assigned at any world;
/// declared variables are N wherever they were not assigned. Undeclared
/// variables are N everywhere and are left untouched by dual_model.
class Model {
 public:
  explicit Model(Frame frame);

  const Frame& frame() const noexcept { return frame_; }
  Frame& frame() noexcept { return frame_; }

  FourValue value(std::size_t world, std::string_view var) const;
  void set_value(std::size_t world, const std::string& var, FourValue v);
  void set_value(std::string_view world, const std::string& var, FourValue v) {
    set_value(frame_.index(world), var, v);
  }

  /// Declares `var` (N everywhere) without assigning it.
  void declare(const std::string& var);
  const std::set<std::string, std::less<>>& variables() const noexcept { return vars_; }

  friend bool operator==(const Model& a, const Model& b);

 private:
  Frame frame_;
  std::set<std::string, std::less<>> vars_;
  std::vector<std::map<std::string, FourValue, std::less<>>> val_;
};

struct PointedModel {
  Model model;
  std::size_t world;

  const std::string& world_name() const { return model.frame().name(world); }
};

/// Same frame; T and F kept, B and N swapped pointwise on declared variables.
Model dual_model(const Model& m);

}  // namespace ktri
