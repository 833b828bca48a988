#include <doctest.h>

#include "ktri/eval.hpp"
#include "ktri/figures.hpp"
#include "ktri/model_io.hpp"
#include "ktri/parser.hpp"
#include "ktri/tableau.hpp"
#include "ktri/tableau_io.hpp"
#include "support.hpp"

using namespace ktri;

namespace {

using LF = std::vector<LabelledFormula>;
using RA = std::vector<RelAtom>;

constexpr auto t = ValueLabel::T;
constexpr auto f = ValueLabel::F;
constexpr auto tb = ValueLabel::NotT;
constexpr auto fb = ValueLabel::NotF;

LabelledFormula lf(std::string w, std::string_view formula, ValueLabel v) {
  return {std::move(w), parse_formula(formula), v};
}

}  // namespace

TEST_CASE("bar and neg") {
  CHECK(bar(t) == tb);
  CHECK(bar(tb) == t);
  CHECK(bar(f) == fb);
  CHECK(neg(f) == t);
  CHECK(neg(t) == f);
  CHECK(neg(tb) == fb);
  CHECK(neg(bar(t)) == fb);
  for (auto v : {t, f, tb, fb}) {
    CHECK(bar(bar(v)) == v);
    CHECK(neg(neg(v)) == v);
  }
  CHECK(label_name(tb, Style::Pretty) == "t̄");
}

TEST_CASE("closure") {
  CHECK(Branch(LF{lf("w1", "p", tb), lf("w1", "p", t)}).is_closed());
  CHECK_FALSE(Branch(LF{lf("w1", "p", t), lf("w1", "p", f)}).is_closed());
  CHECK(Branch(LF{lf("w2", "p", fb), lf("w2", "p", f)}).is_closed());
  CHECK_FALSE(Branch(LF{lf("w1", "p", t), lf("w2", "p", tb)}).is_closed());
  Branch b(LF{lf("w0", "#p", t), lf("w0", "#p", fb)});
  CHECK_FALSE(is_closed(b));
  b.add(lf("w0", "#p", tb));
  CHECK(is_closed(b));
  CHECK(b.closing_item() == lf("w0", "#p", tb));
}

TEST_CASE("saturation_step: negation") {
  auto next = saturation_step(Branch(LF{lf("w0", "~p", t)}));
  REQUIRE(next.size() == 1);
  CHECK(next[0].contains(lf("w0", "p", f)));
  CHECK(next[0].size() == 2);
  CHECK(saturation_step(next[0]).empty());
}

TEST_CASE("saturation_step: falsity of # splits and creates two worlds") {
  Branch b(LF{lf("w0", "#p", f), lf("w0", "#p", tb)});
  auto app = next_rule(b);
  REQUIRE(app.has_value());
  CHECK(app->rule == Rule::TriF);
  auto next = saturation_step(b);
  REQUIRE(next.size() == 2);
  for (const auto& c : next) {
    CHECK(c.contains(RelAtom{"w0", "w1"}));
    CHECK(c.contains(RelAtom{"w0", "w2"}));
  }
  CHECK(next[0].contains(lf("w1", "p", t)));
  CHECK(next[0].contains(lf("w2", "p", tb)));
  CHECK(next[1].contains(lf("w1", "p", f)));
  CHECK(next[1].contains(lf("w2", "p", fb)));
  // fires once per (world, formula)
  CHECK(next[0].fired().size() == 1);
}

TEST_CASE("saturation_step: truth of # propagates the converse label") {
  Branch b(LF{lf("w0", "#p", t), lf("w0", "#p", fb)}, RA{RelAtom{"w0", "w1"}});
  b.add(lf("w1", "p", t));
  auto next = saturation_step(b);
  REQUIRE(next.size() == 1);
  CHECK(next[0].contains(lf("w1", "p", fb)));
}

TEST_CASE("saturation_step: B and N propagation and creation") {
  Branch b(LF{lf("w0", "#p", t), lf("w0", "#p", f)});
  auto next = saturation_step(b);
  REQUIRE(next.size() == 1);
  CHECK(next[0].contains(RelAtom{"w0", "w1"}));
  CHECK(next[0].contains(lf("w1", "p", t)));
  CHECK(next[0].contains(lf("w1", "p", f)));
  CHECK(saturation_step(next[0]).empty());

  Branch n(LF{lf("w0", "#p", tb), lf("w0", "#p", fb)}, RA{RelAtom{"w0", "w5"}});
  auto step = saturation_step(n);
  REQUIRE(step.size() == 1);
  CHECK(step[0].contains(lf("w5", "p", tb)));
  CHECK(step[0].contains(lf("w5", "p", fb)));
}

TEST_CASE("extract_countermodel and check_realisation") {
  {
    Branch b(LF{lf("w0", "p", t)});
    auto pm = extract_countermodel(b);
    CHECK(pm.model.frame().size() == 1);
    CHECK(pm.model.frame().edge_count() == 0);
    CHECK(pm.model.value(0, "p") == FourValue::T);
  }
  {
    Branch b(LF{lf("w0", "p", t), lf("w0", "p", f)}, RA{RelAtom{"w0", "w0"}});
    auto pm = extract_countermodel(b);
    CHECK(pm.model.frame().related(0, 0));
    CHECK(pm.model.value(0, "p") == FourValue::B);
  }
  {
    Model n(Frame({"w0"}));
    n.declare("p");
    CHECK_FALSE(check_realisation(n, Branch(LF{lf("w0", "p", t)})));
    CHECK_FALSE(check_realisation(n, Branch(LF{lf("w9", "p", tb)})));
  }
  {
    // a branch that is not realisable by its atoms must be reported
    Branch b(LF{lf("w0", "#p", tb)});
    CHECK_THROWS_AS(extract_countermodel(b), std::logic_error);
  }
}

TEST_CASE("prove: reference examples") {
  CHECK(prove(parse_sequent("#p |- #~p")).proved);
  CHECK(prove(parse_sequent("p&q |- p")).proved);
  {
    const auto s = parse_sequent("q|~q |- #(q|~q)");
    auto r = prove(s);
    REQUIRE_FALSE(r.proved);
    REQUIRE(r.countermodel.has_value());
    const auto& pm = *r.countermodel;
    CHECK(pm.model.frame().size() == 3);
    CHECK(pm.model.frame().successors(pm.world).size() == 2);
    CHECK(supports_true(pm.model, pm.world_name(), s.premise));
    CHECK_FALSE(supports_true(pm.model, pm.world_name(), s.conclusion));
    CHECK(check_realisation(pm.model, *r.open_branch));
  }
  {
    auto r = prove(parse_sequent("p&~p |- q"));
    REQUIRE_FALSE(r.proved);
    CHECK(r.countermodel->model.value(r.countermodel->world, "p") == FourValue::B);
    CHECK_FALSE(supports_truth(r.countermodel->model.value(r.countermodel->world, "q")));
  }
}

TEST_CASE("fig4 model realises a branch of the fig3 tableau") {
  // leftmost open branch as drawn: q;t at w0, w1 a glut, w2 a gap
  Branch b(LF{lf("w0", "q|~q", t), lf("w0", "#(q|~q)", tb), lf("w0", "#(q|~q)", f),
                       lf("w1", "q|~q", t), lf("w1", "q|~q", f), lf("w2", "q|~q", tb), lf("w2", "q|~q", fb)},
           RA{RelAtom{"w0", "w1"}, RelAtom{"w0", "w2"}});
  CHECK(check_realisation(figure_model("fig4").model.model, b));
}

TEST_CASE("box is rejected by the prover") {
  CHECK_THROWS_AS(prove(parse_sequent("[]p |- p")), LanguageError);
  CHECK_THROWS_AS(prove(parse_sequent("#p |- []p | []~p")), LanguageError);
}

TEST_CASE("termination on nested #") {
  for (const char* s : {"###p |- #p", "#p |- ###p", "###p |- ###~p", "#(#p & #(#q | ~#p)) |- ##(p|q)",
                        "##(p & ~#q) |- #(#~p | #q)", "#(#(#p)) & #q |- #(#q & #(#p | q))"}) {
    auto r = prove(parse_sequent(s));
    CHECK(r.stats.rule_applications > 0);
    if (!r.proved) CHECK(check_realisation(r.countermodel->model, *r.open_branch));
  }
}

TEST_CASE("determinism") {
  const auto s = parse_sequent("#(p|q) & ~#p |- #q | p");
  auto a = prove(s);
  auto b = prove(s);
  CHECK(a.proved == b.proved);
  CHECK(proof_text(a.tree) == proof_text(b.tree));
  CHECK(result_json(a, s) == result_json(b, s));
}

TEST_CASE("proof serialisation") {
  const auto s = parse_sequent("#p |- #~p");
  auto r = prove(s);
  const auto text = proof_text(r.tree, Style::Ascii);
  CHECK(text.find("w0: #p ; t    [root]") != std::string::npos);
  CHECK(text.find("x closed") != std::string::npos);
  CHECK(text.find("o open") == std::string::npos);
  const auto js = result_json(r, s);
  CHECK(js.find("\"verdict\": \"proved\"") != std::string::npos);
  CHECK(js.find("\"rule\": \"#F\"") != std::string::npos);

  const auto s2 = parse_sequent("#p |- p");
  auto r2 = prove(s2);
  const auto js2 = result_json(r2, s2);
  CHECK(js2.find("\"designated\": \"w0\"") != std::string::npos);
  CHECK(proof_text(r2.tree).find("o open") != std::string::npos);
}

TEST_CASE("formulas in the tree are subformulas of the root") {
  const auto s = parse_sequent("#(p & #q) |- #(#q & p) | q");
  auto r = prove(s);
  auto subs = subformulas(s.premise);
  auto more = subformulas(s.conclusion);
  subs.insert(more.begin(), more.end());
  for (const auto& g : formulas_in_tree(r.tree)) CHECK(subs.contains(g));
}
