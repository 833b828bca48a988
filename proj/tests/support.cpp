#include "support.hpp"

#include <array>

#include "ktri/analysis.hpp"
#include "ktri/eval.hpp"
#include "ktri/parser.hpp"
#include "ktri/world_sets.hpp"

#ifndef KTRI_DATA_DIR
#define KTRI_DATA_DIR "data"
#endif

namespace ktri::testing {

Formula random_formula(Rng& rng, Language lang, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<std::size_t> pick_var(0, vars.size() - 1);
  if (depth <= 0) return Formula::atom(vars[pick_var(rng)]);
  std::uniform_int_distribution<int> pick(0, 9);
  switch (pick(rng)) {
    case 0:
    case 1:
      return Formula::atom(vars[pick_var(rng)]);
    case 2:
    case 3:
      return Formula::negation(random_formula(rng, lang, vars, depth - 1));
    case 4:
      return Formula::conjunction(random_formula(rng, lang, vars, depth - 1),
                                  random_formula(rng, lang, vars, depth - 1));
    case 5:
      return Formula::disjunction(random_formula(rng, lang, vars, depth - 1),
                                  random_formula(rng, lang, vars, depth - 1));
    default: {
      Formula c = random_formula(rng, lang, vars, depth - 1);
      return lang == Language::Tri ? Formula::tri(c) : Formula::box(c);
    }
  }
}

Model random_model(Rng& rng, std::size_t worlds, const std::vector<std::string>& vars, double edge_p) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::bernoulli_distribution edge(edge_p);
  for (std::size_t i = 0; i < worlds; ++i)
    for (std::size_t j = 0; j < worlds; ++j)
      if (edge(rng)) edges.emplace_back(i, j);
  Model m(Frame::indexed(worlds, edges));
  std::uniform_int_distribution<int> val(0, 3);
  for (const auto& v : vars) {
    m.declare(v);
    for (std::size_t w = 0; w < worlds; ++w) m.set_value(w, v, static_cast<FourValue>(val(rng)));
  }
  return m;
}

std::vector<Sequent> corpus() {
  static const char* const hand[] = {
      "#p |- #~p",          "#~p |- #p",           "q|~q |- #(q|~q)",      "p&~p |- q",
      "p&q |- p",           "p |- p|q",            "p |- p",               "#p |- p",
      "p |- #p",            "#p |- ##p",           "~#p |- ##p",           "~#p |- #p",
      "p|~p |- #p",         "#(p|~p) |- p|~p",     "#p&#q |- #(p&q)",      "#(p&q) |- #p|#q",
      "#p |- #~~p",         "#~~p |- #p",          "~~p |- p",             "p |- ~~p",
      "~(p&q) |- ~p|~q",    "~p|~q |- ~(p&q)",     "~(p|q) |- ~p&~q",      "#p |- #p|q",
      "##p |- #p",          "###p |- #p",          "#p |- ###p",           "##p |- ##~p",
      "#~#p |- ##p",        "##p |- #~#p",         "#(p&~p) |- #p",        "#p |- #(p|p)",
      "#(p|p) |- #p",       "#(p&p) |- #p",        "#p&p |- #p",           "#p |- #p&#p",
      "#p&#~p |- #p",       "#(p|q) |- #(q|p)",    "#(p&q) |- #(q&p)",     "#p&#q |- #(p|q)",
      "#p|#q |- #(p|q)",    "~#p |- ~#~p",         "~#~p |- ~#p",          "#p&~#p |- q",
      "#p&~#p |- #q",       "p&#p |- #p|q",        "#(#p) |- #(#~p)",      "~##p |- ~#p",
      "#p&~p |- #~p",       "#(p|~p) |- #(p&~p)",  "#(p&~p) |- #(p|~p)",   "#~p&#p |- #~~p",
      "#q |- #(q&q)|p",     "#(#p&#q) |- #(#q&#p)", "##p&#p |- #(#p&p)",   "#(p&#q) |- #(#q&p)",
  };
  std::vector<Sequent> out;
  for (const char* s : hand) out.push_back(parse_sequent(s));

  Rng rng(20240601);
  const std::vector<std::string> vars{"p", "q"};
  std::size_t added = 0;
  while (added < 200) {
    Formula a = random_formula(rng, Language::Tri, vars, 3);
    Formula b = random_formula(rng, Language::Tri, vars, 3);
    if (a.tri_depth() > 3 || b.tri_depth() > 3) continue;
    if (a.size() + b.size() > 14) continue;
    out.push_back({a, b});
    ++added;
  }
  return out;
}

ContrapositionCheck contraposition_check(const Sequent& s, std::size_t max_worlds) {
  const auto vs = variables(s);
  const std::vector<std::string> names(vs.begin(), vs.end());
  const std::array<Formula, 4> roots{s.premise, s.conclusion, Formula::negation(s.conclusion),
                                     Formula::negation(s.premise)};
  SetEvaluator ev(roots, names);
  ContrapositionCheck r;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    const std::uint64_t cells = std::uint64_t{1} << (2 * n * names.size());
    std::vector<WorldSets> val(names.size());
    for (std::uint64_t code = 0; code < frame_count(n); ++code) {
      const auto succ = successor_masks(frame_from_code(n, code));
      for (std::uint64_t v = 0; v < cells; ++v) {
        for (std::size_t i = 0; i < names.size(); ++i) {
          const std::uint64_t bits = v >> (2 * n * i);
          val[i] = {bits & all, (bits >> n) & all};
        }
        auto out = ev.evaluate(succ, val);
        ++r.models;
        if (out[0].truth & ~out[1].truth) r.truth_preserved = false;
        if (~out[0].falsity & out[1].falsity & all) r.non_falsity_preserved = false;
        if (out[2].truth & ~out[3].truth) r.contraposed_preserved = false;
      }
    }
  }
  return r;
}

bool dual_clauses_hold(const Model& m, const Formula& f) {
  const Model d = dual_model(m);
  Evaluator em(m);
  Evaluator ed(d);
  for (std::size_t w = 0; w < m.frame().size(); ++w) {
    const FourValue a = em.value(w, f);
    const FourValue b = ed.value(w, f);
    const bool ok = (a == FourValue::T && b == FourValue::T) || (a == FourValue::B && b == FourValue::N) ||
                    (a == FourValue::N && b == FourValue::B) || (a == FourValue::F && b == FourValue::F);
    if (!ok) return false;
  }
  return true;
}

std::string data_dir() { return KTRI_DATA_DIR; }

}  // namespace ktri::testing
