#include "ktri/analysis.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>

#include "json_detail.hpp"
#include "ktri/eval.hpp"

namespace ktri {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_frame_size(std::size_t worlds) {
  if (worlds == 0) throw std::invalid_argument("frames need at least one world");
  if (worlds * worlds > 30) throw std::length_error("too many worlds for relation enumeration");
}

}  // namespace

Frame frame_from_code(std::size_t worlds, std::uint64_t code) {
  check_frame_size(worlds);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < worlds; ++i)
    for (std::size_t j = 0; j < worlds; ++j)
      if ((code >> (i * worlds + j)) & 1) edges.emplace_back(i, j);
  return Frame::indexed(worlds, edges);
}

std::uint64_t frame_count(std::size_t worlds) {
  check_frame_size(worlds);
  return std::uint64_t{1} << (worlds * worlds);
}

std::uint64_t model_count(std::size_t worlds, std::size_t vars) {
  const std::size_t bits = worlds * worlds + 2 * worlds * vars;
  if (bits >= 64) throw std::overflow_error("model count does not fit in 64 bits");
  return std::uint64_t{1} << bits;
}

void enumerate_models(std::size_t worlds, const std::set<std::string>& vars,
                      const std::function<bool(const Model&)>& visit, std::size_t bound) {
  if (vars.empty()) throw std::invalid_argument("at least one variable is required");
  check_cell_bound(worlds, vars.size(), bound);
  const std::vector<std::string> names(vars.begin(), vars.end());
  const std::uint64_t frames = frame_count(worlds);
  for (std::uint64_t code = 0; code < frames; ++code) {
    const Frame fr = frame_from_code(worlds, code);
    ValuationEnumerator vals(worlds, names.size());
    do {
      if (!visit(vals.to_model(fr, names))) return;
    } while (vals.next());
  }
}

std::optional<PointedModel> find_countermodel(const Sequent& s, std::size_t max_worlds,
                                              std::size_t bound) {
  if (max_worlds == 0) throw std::invalid_argument("max_worlds must be at least 1");
  check_cell_bound(max_worlds, variables(s).size(), bound);
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    const std::uint64_t frames = frame_count(n);
    for (std::uint64_t code = 0; code < frames; ++code) {
      if (auto m = sequent_countermodel_on_frame(frame_from_code(n, code), s, bound)) return m;
    }
  }
  return std::nullopt;
}

std::vector<Formula> enumerate_formulas(Language lang, const std::set<std::string>& vars,
                                        std::size_t max_size) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  std::vector<Formula> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto& cur = by_size[n];
    if (n == 1) {
      for (const auto& v : vars) cur.push_back(Formula::atom(v));
    } else {
      for (const auto& f : by_size[n - 1]) cur.push_back(Formula::negation(f));
      for (const auto& f : by_size[n - 1]) {
        cur.push_back(lang == Language::Tri ? Formula::tri(f) : Formula::box(f));
      }
      for (bool conj : {true, false}) {
        for (std::size_t l = 1; l + 1 < n; ++l) {
          const std::size_t r = n - 1 - l;
          for (const auto& a : by_size[l])
            for (const auto& b : by_size[r])
              cur.push_back(conj ? Formula::conjunction(a, b) : Formula::disjunction(a, b));
        }
      }
    }
    out.insert(out.end(), cur.begin(), cur.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Definability
// ---------------------------------------------------------------------------

Condition parse_condition(std::string_view text) {
  if (text.find("|-") != std::string_view::npos || text.find("⊢") != std::string_view::npos) {
    return parse_sequent(text);
  }
  return parse_formula(text);
}

std::string render(const Condition& c, Style style) {
  return std::visit([style](const auto& x) { return render(x, style); }, c);
}

bool condition_valid_on_frame(const Frame& fr, const Condition& c, std::size_t bound) {
  if (const auto* s = std::get_if<Sequent>(&c)) return sequent_valid_on_frame(fr, *s, bound);
  return formula_valid_on_frame(fr, std::get<Formula>(c), bound);
}

const std::vector<FrameClass>& standard_frame_classes() {
  static const std::vector<FrameClass> classes = [] {
    auto seq = [](std::string_view t) -> Condition { return parse_sequent(t); };
    const Condition refl = seq("#(p|~p) |- p|~p");
    return std::vector<FrameClass>{
        {"T", FrameProperty::Reflexive, {refl}},
        {"S4", FrameProperty::Preorder, {seq("#p |- ##p"), refl}},
        {"S5", FrameProperty::Equivalence, {seq("~#p |- ##p"), refl}},
        {"F", FrameProperty::PartialFunctional, {seq("~#p |- #p")}},
        {"Ver", FrameProperty::EmptyRelation, {Condition{parse_formula("#p")}}},
        {"1", FrameProperty::Coreflexive, {seq("p|~p |- #p")}},
    };
  }();
  return classes;
}

std::string_view disagreement_name(Disagreement d) {
  return d == Disagreement::PropertyButInvalid ? "property-but-invalid" : "valid-but-no-property";
}

DefinabilityReport check_definability(FrameProperty property, std::vector<Condition> conditions,
                                      std::size_t max_size, std::size_t bound) {
  if (max_size == 0) throw std::invalid_argument("max_size must be at least 1");
  std::set<std::string> vars;
  for (const auto& c : conditions) {
    auto vs = std::visit([](const auto& x) { return variables(x); }, c);
    vars.insert(vs.begin(), vs.end());
  }
  check_cell_bound(max_size, vars.size(), bound);

  const auto t0 = Clock::now();
  DefinabilityReport r;
  r.property = property;
  r.conditions = std::move(conditions);
  r.max_size = max_size;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const std::uint64_t frames = frame_count(n);
    for (std::uint64_t code = 0; code < frames; ++code) {
      Frame fr = frame_from_code(n, code);
      const bool has = frame_property(fr, property);
      bool valid = true;
      for (const auto& c : r.conditions) {
        if (!condition_valid_on_frame(fr, c, bound)) {
          valid = false;
          break;
        }
      }
      ++r.frames_checked;
      r.frames_with_property += has;
      r.frames_all_valid += valid;
      if (has == valid) continue;
      ++r.disagreements;
      const Disagreement d = has ? Disagreement::PropertyButInvalid : Disagreement::ValidButNoProperty;
      auto& slot = has ? r.witness_property_but_invalid : r.witness_valid_but_no_property;
      if (!slot) slot = fr;
      if (!r.witness) {
        r.witness = fr;
        r.direction = d;
      }
    }
  }
  r.defines = r.disagreements == 0;
  r.seconds = since(t0);
  return r;
}

std::string to_json(const DefinabilityReport& r) {
  detail::json j;
  j["kind"] = "definability";
  detail::json conds = detail::json::array();
  for (const auto& c : r.conditions) conds.push_back(render(c));
  j["parameters"] = {{"property", property_name(r.property)}, {"conditions", conds}, {"max_size", r.max_size}};
  j["verdict"] = r.defines ? "defines" : "refuted";
  j["counts"] = {{"frames_checked", r.frames_checked},
                 {"frames_with_property", r.frames_with_property},
                 {"frames_all_valid", r.frames_all_valid},
                 {"disagreements", r.disagreements}};
  if (r.witness) {
    j["witness"] = detail::frame_json(*r.witness);
    j["direction"] = disagreement_name(*r.direction);
  }
  if (r.witness_property_but_invalid) {
    j["witness_property_but_invalid"] = detail::frame_json(*r.witness_property_but_invalid);
  }
  if (r.witness_valid_but_no_property) {
    j["witness_valid_but_no_property"] = detail::frame_json(*r.witness_valid_but_no_property);
  }
  j["wall_time_s"] = r.seconds;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Indistinguishability
// ---------------------------------------------------------------------------

std::string_view mode_name(SeparationMode m) {
  switch (m) {
    case SeparationMode::Transfer: return "transfer";
    case SeparationMode::Glut: return "glut";
    case SeparationMode::Value: return "value";
  }
  return "?";
}

std::optional<SeparationMode> parse_mode(std::string_view name) {
  for (auto m : {SeparationMode::Transfer, SeparationMode::Glut, SeparationMode::Value}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

SeparationMode default_mode(Language lang) {
  return lang == Language::Box ? SeparationMode::Transfer : SeparationMode::Glut;
}

IndistinguishabilityReport check_indistinguishability(const PointedModel& a, const PointedModel& b,
                                                      Language lang, std::size_t max_size,
                                                      std::optional<SeparationMode> mode,
                                                      std::optional<std::set<std::string>> vars) {
  const auto t0 = Clock::now();
  IndistinguishabilityReport r{a, b, lang, mode.value_or(default_mode(lang)), {}, max_size, 0, std::nullopt};
  if (vars) {
    r.variables = std::move(*vars);
  } else {
    for (const auto& v : a.model.variables())
      if (b.model.variables().contains(v)) r.variables.insert(v);
  }
  Evaluator ea(r.a.model);
  Evaluator eb(r.b.model);
  for (const auto& f : enumerate_formulas(lang, r.variables, max_size)) {
    ++r.formulas_checked;
    const FourValue va = ea.value(r.a.world, f);
    const FourValue vb = eb.value(r.b.world, f);
    bool bad = false;
    switch (r.mode) {
      case SeparationMode::Transfer:
        bad = (vb == FourValue::T && va != FourValue::T) || (vb == FourValue::F && va != FourValue::F);
        break;
      case SeparationMode::Glut:
        bad = va == FourValue::B || vb == FourValue::B;
        break;
      case SeparationMode::Value:
        bad = va != vb;
        break;
    }
    if (bad) {
      r.separating = f;
      r.value_a = va;
      r.value_b = vb;
      break;
    }
  }
  r.seconds = since(t0);
  return r;
}

std::string to_json(const IndistinguishabilityReport& r) {
  detail::json j;
  j["kind"] = "indistinguishability";
  j["parameters"] = {{"language", language_name(r.language)},
                     {"mode", mode_name(r.mode)},
                     {"variables", r.variables},
                     {"max_size", r.max_size},
                     {"bounded", true}};
  j["model_a"] = detail::model_json(r.a.model, r.a.world);
  j["model_b"] = detail::model_json(r.b.model, r.b.world);
  j["verdict"] = r.separated() ? "separating formula" : "no separating formula found";
  j["counts"] = {{"formulas_checked", r.formulas_checked}};
  if (r.separating) {
    j["separating"] = {{"formula", render(*r.separating)},
                       {"value_a", std::string(1, to_char(r.value_a))},
                       {"value_b", std::string(1, to_char(r.value_b))}};
  }
  j["wall_time_s"] = r.seconds;
  return j.dump(2);
}

}  // namespace ktri
