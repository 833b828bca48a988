#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ktri/formula.hpp"
#include "ktri/model.hpp"

namespace ktri {

/// Truth and falsity support of one formula at every world of a frame with
/// at most 64 worlds; bit i stands for world i.
struct WorldSets {
  std::uint64_t truth = 0;
  std::uint64_t falsity = 0;
  friend bool operator==(const WorldSets&, const WorldSets&) = default;
};

inline constexpr std::size_t kMaxSetWorlds = 64;

/// Successor masks of `frame`; frame.size() must not exceed kMaxSetWorlds.
std::vector<std::uint64_t> successor_masks(const Frame& frame);

/// Valuation of `var` in `m` as world sets.
WorldSets variable_sets(const Model& m, const std::string& var);

/// A fixed set of formulas compiled into a straight-line program that
/// evaluates all worlds at once with bitwise operations.
///
/// Shared subformulas are evaluated once. This is the fast path used by the
/// exhaustive searches; Evaluator remains the reference semantics. Not safe
/// for concurrent use of one instance (it owns its scratch space).
class SetEvaluator {
 public:
  /// `vars` fixes the order in which variable valuations are passed to
  /// evaluate(); every atom of `roots` must be listed.
  SetEvaluator(std::span<const Formula> roots, std::span<const std::string> vars);

  /// Evaluates every root. `succ` has one mask per world, `vars` one entry
  /// per variable in constructor order. Returned span is valid until the
  /// next call.
  std::span<const WorldSets> evaluate(std::span<const std::uint64_t> succ,
                                      std::span<const WorldSets> vars);

  std::size_t root_count() const noexcept { return roots_.size(); }

 private:
  enum class Op : std::uint8_t { Var, Not, And, Or, Tri, Box };
  struct Instr {
    Op op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
  };

  std::vector<Instr> program_;
  std::vector<std::uint32_t> roots_;
  std::vector<WorldSets> scratch_;
  std::vector<WorldSets> out_;
};

}  // namespace ktri
