#pragma once

#include <cstddef>
#include <string_view>
#include <unordered_map>

#include "ktri/formula.hpp"
#include "ktri/model.hpp"

namespace ktri {

/// Recursive evaluator over one model.
///
/// Truth and falsity support are computed by structural recursion; the
/// results are cached per (subformula, world) for the lifetime of the
/// evaluator. The cache is keyed structurally, so equal subformulas built
/// separately share entries. The model must outlive the evaluator.
class Evaluator {
 public:
  explicit Evaluator(const Model& model) : model_(model) {}

  FourValue value(std::size_t world, const Formula& f);
  bool supports_true(std::size_t world, const Formula& f) { return supports_truth(value(world, f)); }
  bool supports_false(std::size_t world, const Formula& f) {
    return supports_falsity(value(world, f));
  }

  const Model& model() const noexcept { return model_; }

 private:
  struct Key {
    Formula formula;
    std::size_t world;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return k.formula.hash() * 31 + k.world; }
  };

  FourValue compute(std::size_t world, const Formula& f);

  const Model& model_;
  std::unordered_map<Key, FourValue, KeyHash> memo_;
};

// One-shot helpers; throw UnknownWorld for a bad world identifier.
FourValue eval(const Model& m, std::string_view world, const Formula& f);
bool supports_true(const Model& m, std::string_view world, const Formula& f);
bool supports_false(const Model& m, std::string_view world, const Formula& f);

/// Value of tri(f) at `world`, computed from the four-case description
/// (uniform classical value / all-both / all-neither / two differing
/// successors) instead of the truth and falsity conditions.
FourValue tri_status_by_cases(const Model& m, std::string_view world, const Formula& f);

/// Truth preservation at every world of `m`.
bool sequent_holds(const Model& m, const Sequent& s);

}  // namespace ktri
