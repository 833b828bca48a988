#include "ktri/figures.hpp"

#include <stdexcept>

#include "ktri/analysis.hpp"
#include "ktri/eval.hpp"
#include "ktri/parser.hpp"
#include "ktri/tableau.hpp"
#include "ktri/validity.hpp"

namespace ktri {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;
using Vals = std::vector<std::tuple<std::string, std::string, char>>;

PointedModel build(std::vector<std::string> worlds, const Edges& edges, const std::vector<std::string>& vars,
                   const Vals& vals) {
  const std::string first = worlds.front();
  Model m{Frame(std::move(worlds), edges)};
  for (const auto& v : vars) m.declare(v);
  for (const auto& [w, var, c] : vals) m.set_value(w, var, *value_from_char(c));
  const std::size_t w = m.frame().index(first);
  return {std::move(m), w};
}

std::vector<FigureModel> make_figures() {
  std::vector<FigureModel> f;
  f.push_back({"fig1", "p true everywhere, false somewhere: w0 reflexive, w0->w1; p = T at w0, B at w1",
               build({"w0", "w1"}, {{"w0", "w0"}, {"w0", "w1"}}, {"p"}, {{"w0", "p", 'T'}, {"w1", "p", 'B'}})});
  f.push_back({"fig4", "model of the leftmost open branch for q|~q |- #(q|~q)",
               build({"w0", "w1", "w2"}, {{"w0", "w1"}, {"w0", "w2"}}, {"q"},
                     {{"w0", "q", 'B'}, {"w1", "q", 'B'}, {"w2", "q", 'N'}})});
  f.push_back({"fig5_b", "#p is B: w0 reflexive, w0->w1, p = B everywhere",
               build({"w0", "w1"}, {{"w0", "w0"}, {"w0", "w1"}}, {"p"}, {{"w0", "p", 'B'}, {"w1", "p", 'B'}})});
  f.push_back({"fig5_n", "#p is N: same frame, p = N everywhere",
               build({"w0", "w1"}, {{"w0", "w0"}, {"w0", "w1"}}, {"p"}, {})});
  f.push_back({"fig6_m", "M: one reflexive world, p = T", build({"w0"}, {{"w0", "w0"}}, {"p"}, {{"w0", "p", 'T'}})});
  f.push_back({"fig6_mprime", "M': two reflexive, mutually linked worlds, p = T at v0, N at v1",
               build({"v0", "v1"}, {{"v0", "v0"}, {"v0", "v1"}, {"v1", "v0"}, {"v1", "v1"}}, {"p"},
                     {{"v0", "p", 'T'}})});
  f.push_back({"fig7", "two reflexive, mutually linked worlds, p = T at w0, B at w1",
               build({"w0", "w1"}, {{"w0", "w0"}, {"w0", "w1"}, {"w1", "w0"}, {"w1", "w1"}}, {"p"},
                     {{"w0", "p", 'T'}, {"w1", "p", 'B'}})});
  f.push_back({"fig8_dead", "partial-functional frame: one world, no edges", build({"w"}, {}, {"p"}, {})});
  f.push_back({"fig8_loop", "partial-functional frame: one reflexive world", build({"w"}, {{"w", "w"}}, {"p"}, {})});
  f.push_back({"fig9_m", "no tautologies: one reflexive world, p = B", build({"w"}, {{"w", "w"}}, {"p"}, {{"w", "p", 'B'}})});
  f.push_back({"fig9_mprime", "no tautologies: one reflexive world, p = N", build({"v"}, {{"v", "v"}}, {"p"}, {})});
  f.push_back({"fig10", "#p |- ##p fails on a transitive frame: w->w1, w1->w2, w->w2, p = B",
               build({"w", "w1", "w2"}, {{"w", "w1"}, {"w1", "w2"}, {"w", "w2"}}, {"p"},
                     {{"w", "p", 'B'}, {"w1", "p", 'B'}, {"w2", "p", 'B'}})});
  f.push_back({"fig11", "non-Euclidean frame w->w1", build({"w", "w1"}, {{"w", "w1"}}, {"p"}, {})});
  f.push_back({"fig12", "one reflexive world, p = B, q = N",
               build({"w"}, {{"w", "w"}}, {"p", "q"}, {{"w", "p", 'B'}})});
  f.push_back({"ex2_1", "witnesses: w->w1, w->w2; p T at w1, N at w2; s T at w1, B at w2",
               build({"w", "w1", "w2"}, {{"w", "w1"}, {"w", "w2"}}, {"p", "s"},
                     {{"w1", "p", 'T'}, {"w1", "s", 'T'}, {"w2", "s", 'B'}})});
  const Edges pencils{{"wc", "wc"}, {"wh", "wh"}, {"ws", "ws"}, {"wc", "wh"}, {"wh", "ws"}, {"wc", "ws"}};
  const Vals pencil_vals{{"wc", "p", 'T'}, {"wc", "r", 'T'}, {"wh", "p", 'T'},
                         {"wh", "r", 'T'}, {"ws", "p", 'F'}, {"ws", "r", 'N'}};
  f.push_back({"ex2_2", "pencils: wc, wh, ws reflexive; wc->wh, wh->ws, wc->ws",
               build({"wc", "wh", "ws"}, pencils, {"p", "r"}, pencil_vals)});
  Edges cut(pencils.begin(), pencils.end() - 1);
  f.push_back({"ex2_2_cut", "pencils with the wc->ws edge removed",
               build({"wc", "wh", "ws"}, cut, {"p", "r"}, pencil_vals)});
  return f;
}

std::string value_str(FourValue v) { return std::string(1, to_char(v)); }

struct Checker {
  std::vector<FigureCheck> out;

  void add(std::string fig, std::string claim, std::string expected, std::string actual) {
    bool ok = expected == actual;
    out.push_back({std::move(fig), std::move(claim), std::move(expected), std::move(actual), ok});
  }
  void value(const std::string& fig, std::string_view world, std::string_view formula, char expected) {
    const auto& pm = figure_model(fig).model;
    const Formula f = parse_formula(formula);
    add(fig, render(f, Style::Pretty) + " at " + std::string(world), std::string(1, expected),
        value_str(eval(pm.model, world, f)));
  }
  void flag(std::string fig, std::string claim, bool actual) {
    add(std::move(fig), std::move(claim), "yes", actual ? "yes" : "no");
  }
};

}  // namespace

const std::vector<FigureModel>& figure_models() {
  static const std::vector<FigureModel> figs = make_figures();
  return figs;
}

const FigureModel& figure_model(std::string_view id) {
  for (const auto& f : figure_models()) {
    if (f.id == id) return f;
  }
  throw std::out_of_range("unknown figure '" + std::string(id) + "'");
}

std::vector<FigureCheck> run_figure_checks() {
  Checker c;
  c.value("fig1", "w0", "#p", 'F');
  c.value("fig1", "w0", "[]p", 'B');

  {
    auto r = prove(parse_sequent("#p |- #~p"));
    c.add("fig2", "tableau for #p |- #~p closes", "proved", r.proved ? "proved" : "refuted");
  }
  {
    const Sequent s = parse_sequent("q|~q |- #(q|~q)");
    auto r = prove(s);
    c.add("fig3", "tableau for q|~q |- #(q|~q) has an open branch", "refuted", r.proved ? "proved" : "refuted");
    bool refutes = false;
    std::size_t worlds = 0;
    if (r.countermodel) {
      const auto& pm = *r.countermodel;
      worlds = pm.model.frame().size();
      Evaluator ev(pm.model);
      refutes = ev.supports_true(pm.world, s.premise) && !ev.supports_true(pm.world, s.conclusion);
    }
    c.flag("fig3", "extracted model refutes the sequent at w0", refutes);
    c.add("fig3", "extracted model size", "3", std::to_string(worlds));
  }
  c.value("fig4", "w0", "q|~q", 'B');
  c.value("fig4", "w0", "#(q|~q)", 'F');

  c.value("fig5_b", "w0", "#p", 'B');
  c.value("fig5_n", "w0", "#p", 'N');

  c.value("fig6_m", "w0", "#p", 'T');
  c.value("fig6_mprime", "v0", "#p", 'F');
  {
    auto r = check_indistinguishability(figure_model("fig6_m").model, figure_model("fig6_mprime").model,
                                        Language::Box, 9, SeparationMode::Transfer);
    c.add("fig6", "no []-formula (<= 9 nodes) breaks the T/F transfer from M' to M",
          "none", r.separating ? render(*r.separating) : "none");
  }

  c.value("fig7", "w0", "[]p", 'B');
  {
    const auto& pm = figure_model("fig7").model;
    auto r = check_indistinguishability(pm, pm, Language::Tri, 9, SeparationMode::Glut);
    c.add("fig7", "no #-formula (<= 9 nodes) is B at w0", "none", r.separating ? render(*r.separating) : "none");
  }

  {
    const Formula tp = parse_formula("#p");
    c.flag("fig8", "#p valid on the dead-end frame", formula_valid_on_frame(figure_model("fig8_dead").model.model.frame(), tp));
    c.flag("fig8", "#p not valid on the reflexive point",
           !formula_valid_on_frame(figure_model("fig8_loop").model.model.frame(), tp));
  }

  {
    const auto& m = figure_model("fig9_m").model;
    const auto& mp = figure_model("fig9_mprime").model;
    Evaluator em(m.model), emp(mp.model);
    std::size_t bad = 0, total = 0;
    for (const auto& f : enumerate_formulas(Language::Tri, {"p"}, 9)) {
      ++total;
      if (em.value(m.world, f) != FourValue::B || emp.value(mp.world, f) != FourValue::N) ++bad;
    }
    c.add("fig9", "formulas (<= 9 nodes) not B in M or not N in M' (of " + std::to_string(total) + ")", "0",
          std::to_string(bad));
  }

  {
    const auto& pm = figure_model("fig10").model;
    c.flag("fig10", "frame is transitive", frame_property(pm.model.frame(), FrameProperty::Transitive));
    c.value("fig10", "w", "#p", 'B');
    c.value("fig10", "w", "##p", 'F');
    c.flag("fig10", "#p |- ##p fails at w", !sequent_holds(pm.model, parse_sequent("#p |- ##p")));
  }

  {
    const Frame& fr = figure_model("fig11").model.model.frame();
    c.flag("fig11", "frame is not Euclidean", !frame_property(fr, FrameProperty::Euclidean));
    c.flag("fig11", "~#p |- ##p valid on the frame", sequent_valid_on_frame(fr, parse_sequent("~#p |- ##p")));
  }

  {
    const auto& pm = figure_model("fig12").model;
    Evaluator ev(pm.model);
    std::size_t bad = 0;
    for (const auto& f : enumerate_formulas(Language::Tri, {"p"}, 9)) {
      if (ev.value(pm.world, f) != FourValue::B) ++bad;
    }
    c.add("fig12", "{p}-formulas (<= 9 nodes) not B at w", "0", std::to_string(bad));
    c.flag("fig12", "q not supported-true at w", !ev.supports_true(pm.world, Formula::atom("q")));
  }

  c.value("ex2_1", "w", "#p", 'F');
  c.value("ex2_1", "w", "#s", 'F');
  c.value("ex2_2", "wc", "#p", 'F');
  c.value("ex2_2", "wc", "#r", 'F');
  c.value("ex2_2_cut", "wc", "#p", 'T');
  c.value("ex2_2_cut", "wc", "#r", 'T');
  return c.out;
}

}  // namespace ktri
