#include "ktri/world_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ktri {

std::vector<std::uint64_t> successor_masks(const Frame& frame) {
  if (frame.size() > kMaxSetWorlds) throw std::length_error("frame too large for world sets");
  std::vector<std::uint64_t> out(frame.size(), 0);
  for (std::size_t w = 0; w < frame.size(); ++w)
    for (std::size_t u : frame.successors(w)) out[w] |= std::uint64_t{1} << u;
  return out;
}

WorldSets variable_sets(const Model& m, const std::string& var) {
  WorldSets s;
  for (std::size_t w = 0; w < m.frame().size() && w < kMaxSetWorlds; ++w) {
    FourValue v = m.value(w, var);
    if (supports_truth(v)) s.truth |= std::uint64_t{1} << w;
    if (supports_falsity(v)) s.falsity |= std::uint64_t{1} << w;
  }
  return s;
}

SetEvaluator::SetEvaluator(std::span<const Formula> roots, std::span<const std::string> vars) {
  std::unordered_map<Formula, std::uint32_t, FormulaHash> slot;

  // Post-order compilation, iterative to avoid deep recursion.
  auto compile = [&](const Formula& root) -> std::uint32_t {
    std::vector<std::pair<Formula, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [f, expanded] = stack.back();
      stack.pop_back();
      if (slot.contains(f)) continue;
      if (!expanded && !f.is(Connective::Atom)) {
        stack.emplace_back(f, true);
        if (f.is(Connective::And) || f.is(Connective::Or)) {
          stack.emplace_back(f.right(), false);
          stack.emplace_back(f.left(), false);
        } else {
          stack.emplace_back(f.child(), false);
        }
        continue;
      }
      Instr ins{};
      switch (f.kind()) {
        case Connective::Atom: {
          auto it = std::find(vars.begin(), vars.end(), f.name());
          if (it == vars.end()) throw std::invalid_argument("variable '" + f.name() + "' not listed");
          ins = {Op::Var, static_cast<std::uint32_t>(it - vars.begin())};
          break;
        }
        case Connective::Not:
          ins = {Op::Not, slot.at(f.child())};
          break;
        case Connective::Tri:
          ins = {Op::Tri, slot.at(f.child())};
          break;
        case Connective::Box:
          ins = {Op::Box, slot.at(f.child())};
          break;
        case Connective::And:
          ins = {Op::And, slot.at(f.left()), slot.at(f.right())};
          break;
        case Connective::Or:
          ins = {Op::Or, slot.at(f.left()), slot.at(f.right())};
          break;
      }
      slot.emplace(f, static_cast<std::uint32_t>(program_.size()));
      program_.push_back(ins);
    }
    return slot.at(root);
  };

  for (const Formula& r : roots) roots_.push_back(compile(r));
  scratch_.resize(program_.size());
  out_.resize(roots_.size());
}

std::span<const WorldSets> SetEvaluator::evaluate(std::span<const std::uint64_t> succ,
                                                  std::span<const WorldSets> vars) {
  const std::size_t n = succ.size();
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t i = 0; i < program_.size(); ++i) {
    const Instr& ins = program_[i];
    WorldSets& r = scratch_[i];
    switch (ins.op) {
      case Op::Var:
        r = vars[ins.a];
        break;
      case Op::Not:
        r = {scratch_[ins.a].falsity, scratch_[ins.a].truth};
        break;
      case Op::And:
        r = {scratch_[ins.a].truth & scratch_[ins.b].truth,
             scratch_[ins.a].falsity | scratch_[ins.b].falsity};
        break;
      case Op::Or:
        r = {scratch_[ins.a].truth | scratch_[ins.b].truth,
             scratch_[ins.a].falsity & scratch_[ins.b].falsity};
        break;
      case Op::Box: {
        const WorldSets c = scratch_[ins.a];
        WorldSets out;
        for (std::size_t w = 0; w < n; ++w) {
          const std::uint64_t s = succ[w];
          const std::uint64_t bit = std::uint64_t{1} << w;
          if ((s & ~c.truth) == 0) out.truth |= bit;
          if ((s & c.falsity) != 0) out.falsity |= bit;
        }
        r = out;
        break;
      }
      case Op::Tri: {
        const WorldSets c = scratch_[ins.a];
        WorldSets out;
        for (std::size_t w = 0; w < n; ++w) {
          const std::uint64_t s = succ[w];
          const std::uint64_t bit = std::uint64_t{1} << w;
          const bool any_true = (s & c.truth) != 0;
          const bool any_untrue = (s & ~c.truth & all) != 0;
          const bool any_false = (s & c.falsity) != 0;
          const bool any_unfalse = (s & ~c.falsity & all) != 0;
          const bool all_valued = (s & ~(c.truth | c.falsity) & all) == 0;
          const bool truth = !(any_true && any_untrue) && !(any_false && any_unfalse) && all_valued;
          const bool falsity = (any_true && any_untrue) || (any_false && any_unfalse) ||
                               (any_true && any_false);
          if (truth) out.truth |= bit;
          if (falsity) out.falsity |= bit;
        }
        r = out;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) out_[i] = scratch_[roots_[i]];
  return out_;
}

}  // namespace ktri
