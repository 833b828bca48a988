#include "ktri/validity.hpp"

#include <array>
#include <bit>

namespace ktri {

BoundExceeded::BoundExceeded(std::size_t cells, std::size_t bound)
    : std::runtime_error("search bound exceeded: " + std::to_string(cells) +
                         " (world, variable) cells > bound " + std::to_string(bound)),
      cells_(cells),
      bound_(bound) {}

void check_cell_bound(std::size_t worlds, std::size_t vars, std::size_t bound) {
  if (worlds * vars > bound) throw BoundExceeded(worlds * vars, bound);
}

ValuationEnumerator::ValuationEnumerator(std::size_t worlds, std::size_t vars)
    : worlds_(worlds), codes_(vars, 0), sets_(vars) {
  if (worlds > 31) throw std::length_error("too many worlds for valuation enumeration");
}

bool ValuationEnumerator::next() noexcept {
  const std::uint64_t limit = std::uint64_t{1} << (2 * worlds_);
  const std::uint64_t low = (std::uint64_t{1} << worlds_) - 1;
  for (std::size_t i = codes_.size(); i-- > 0;) {
    if (++codes_[i] < limit) {
      sets_[i] = {codes_[i] & low, codes_[i] >> worlds_};
      return true;
    }
    codes_[i] = 0;
    sets_[i] = {};
  }
  return false;
}

Model ValuationEnumerator::to_model(const Frame& frame, const std::vector<std::string>& names) const {
  Model m(frame);
  for (std::size_t v = 0; v < names.size(); ++v) {
    m.declare(names[v]);
    for (std::size_t w = 0; w < worlds_; ++w) {
      const bool t = (sets_[v].truth >> w) & 1;
      const bool f = (sets_[v].falsity >> w) & 1;
      m.set_value(w, names[v], make_value(t, f));
    }
  }
  return m;
}

std::string_view property_name(FrameProperty p) {
  switch (p) {
    case FrameProperty::Reflexive:
      return "reflexive";
    case FrameProperty::Transitive:
      return "transitive";
    case FrameProperty::Symmetric:
      return "symmetric";
    case FrameProperty::Euclidean:
      return "euclidean";
    case FrameProperty::Serial:
      return "serial";
    case FrameProperty::PartialFunctional:
      return "partial_functional";
    case FrameProperty::Coreflexive:
      return "coreflexive";
    case FrameProperty::EmptyRelation:
      return "empty_relation";
    case FrameProperty::Equivalence:
      return "equivalence";
    case FrameProperty::Preorder:
      return "preorder";
  }
  return "?";
}

const std::vector<FrameProperty>& all_properties() {
  static const std::vector<FrameProperty> props = {
      FrameProperty::Reflexive,         FrameProperty::Transitive,  FrameProperty::Symmetric,
      FrameProperty::Euclidean,         FrameProperty::Serial,      FrameProperty::PartialFunctional,
      FrameProperty::Coreflexive,       FrameProperty::EmptyRelation, FrameProperty::Equivalence,
      FrameProperty::Preorder,
  };
  return props;
}

std::optional<FrameProperty> parse_property(std::string_view name) {
  for (FrameProperty p : all_properties()) {
    if (property_name(p) == name) return p;
  }
  if (name == "T") return FrameProperty::Reflexive;
  if (name == "S4") return FrameProperty::Preorder;
  if (name == "S5") return FrameProperty::Equivalence;
  if (name == "F") return FrameProperty::PartialFunctional;
  if (name == "Ver") return FrameProperty::EmptyRelation;
  if (name == "1") return FrameProperty::Coreflexive;
  return std::nullopt;
}

bool frame_property(const Frame& fr, FrameProperty p) {
  const std::size_t n = fr.size();
  auto all = [n](auto pred) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (!pred(x, y, z)) return false;
    return true;
  };
  auto R = [&fr](std::size_t a, std::size_t b) { return fr.related(a, b); };
  switch (p) {
    case FrameProperty::Reflexive:
      return all([&](auto x, auto, auto) { return R(x, x); });
    case FrameProperty::Transitive:
      return all([&](auto x, auto y, auto z) { return !(R(x, y) && R(y, z)) || R(x, z); });
    case FrameProperty::Symmetric:
      return all([&](auto x, auto y, auto) { return !R(x, y) || R(y, x); });
    case FrameProperty::Euclidean:
      return all([&](auto x, auto y, auto z) { return !(R(x, y) && R(x, z)) || R(y, z); });
    case FrameProperty::Serial:
      for (std::size_t x = 0; x < n; ++x)
        if (fr.successors(x).empty()) return false;
      return true;
    case FrameProperty::PartialFunctional:
      return all([&](auto x, auto y, auto z) { return !(R(x, y) && R(x, z)) || y == z; });
    case FrameProperty::Coreflexive:
      return all([&](auto x, auto y, auto) { return !R(x, y) || x == y; });
    case FrameProperty::EmptyRelation:
      return fr.edge_count() == 0;
    case FrameProperty::Equivalence:
      return frame_property(fr, FrameProperty::Reflexive) &&
             frame_property(fr, FrameProperty::Symmetric) &&
             frame_property(fr, FrameProperty::Transitive);
    case FrameProperty::Preorder:
      return frame_property(fr, FrameProperty::Reflexive) &&
             frame_property(fr, FrameProperty::Transitive);
  }
  return false;
}

namespace {

// Searches for a world where roots[0] is supported-true and roots[1] (if
// present) is not. With a single root, looks for a world where it fails.
std::optional<PointedModel> search(const Frame& fr, std::span<const Formula> roots,
                                   const std::set<std::string>& var_set, std::size_t bound) {
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  check_cell_bound(fr.size(), vars.size(), bound);
  const auto succ = successor_masks(fr);
  const std::uint64_t all =
      fr.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << fr.size()) - 1;
  SetEvaluator ev(roots, vars);
  ValuationEnumerator vals(fr.size(), vars.size());
  do {
    auto out = ev.evaluate(succ, vals.current());
    std::uint64_t bad = roots.size() == 2 ? out[0].truth & ~out[1].truth : all & ~out[0].truth;
    if (bad != 0) {
      return PointedModel{vals.to_model(fr, vars), static_cast<std::size_t>(std::countr_zero(bad))};
    }
  } while (vals.next());
  return std::nullopt;
}

}  // namespace

std::optional<PointedModel> sequent_countermodel_on_frame(const Frame& fr, const Sequent& s,
                                                          std::size_t bound) {
  const std::array<Formula, 2> roots{s.premise, s.conclusion};
  return search(fr, roots, variables(s), bound);
}

bool sequent_valid_on_frame(const Frame& fr, const Sequent& s, std::size_t bound) {
  return !sequent_countermodel_on_frame(fr, s, bound).has_value();
}

std::optional<PointedModel> formula_countermodel_on_frame(const Frame& fr, const Formula& f,
                                                          std::size_t bound) {
  const std::array<Formula, 1> roots{f};
  return search(fr, roots, variables(f), bound);
}

bool formula_valid_on_frame(const Frame& fr, const Formula& f, std::size_t bound) {
  return !formula_countermodel_on_frame(fr, f, bound).has_value();
}

}  // namespace ktri
