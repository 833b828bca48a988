#include <doctest.h>

#include "ktri/eval.hpp"
#include "ktri/figures.hpp"
#include "ktri/model.hpp"
#include "ktri/parser.hpp"
#include "support.hpp"

using namespace ktri;

namespace {

Model one_world(bool reflexive, std::vector<std::pair<std::string, FourValue>> vals) {
  Model m(reflexive ? Frame({"w"}, {{"w", "w"}}) : Frame({"w"}));
  for (auto& [v, x] : vals) m.set_value("w", v, x);
  return m;
}

const Model& fig(std::string_view id) { return figure_model(id).model.model; }

}  // namespace

TEST_CASE("FourValue encoding") {
  CHECK(make_value(true, false) == FourValue::T);
  CHECK(make_value(true, true) == FourValue::B);
  CHECK(make_value(false, false) == FourValue::N);
  CHECK(make_value(false, true) == FourValue::F);
  for (char c : {'T', 'B', 'N', 'F'}) CHECK(to_char(*value_from_char(c)) == c);
  CHECK_FALSE(value_from_char('X').has_value());
}

TEST_CASE("fig1: #p is false and not true at w0") {
  const auto f = parse_formula("#p");
  CHECK_FALSE(supports_true(fig("fig1"), "w0", f));
  CHECK(supports_false(fig("fig1"), "w0", f));
  CHECK(tri_status_by_cases(fig("fig1"), "w0", parse_formula("p")) == FourValue::F);
}

TEST_CASE("dead end makes #p true and not false") {
  Model m = one_world(false, {{"p", FourValue::B}});
  CHECK(eval(m, "w", parse_formula("#p")) == FourValue::T);
  CHECK(tri_status_by_cases(m, "w", parse_formula("p")) == FourValue::T);
  CHECK(eval(m, "w", parse_formula("[]p")) == FourValue::T);
}

TEST_CASE("fig5: B and N for #p") {
  CHECK(eval(fig("fig5_b"), "w0", parse_formula("#p")) == FourValue::B);
  CHECK(eval(fig("fig5_n"), "w0", parse_formula("#p")) == FourValue::N);
  CHECK(tri_status_by_cases(fig("fig5_b"), "w0", parse_formula("p")) == FourValue::B);
  CHECK(tri_status_by_cases(fig("fig5_n"), "w0", parse_formula("p")) == FourValue::N);
}

TEST_CASE("fig6 right: []p | []~p is not true at v0") {
  CHECK_FALSE(supports_true(fig("fig6_mprime"), "v0", parse_formula("[]p | []~p")));
}

TEST_CASE("worked examples") {
  CHECK(eval(fig("ex2_1"), "w", parse_formula("#s")) == FourValue::F);
  CHECK(eval(fig("ex2_1"), "w", parse_formula("#p")) == FourValue::F);
  CHECK(eval(fig("ex2_2"), "wc", parse_formula("#p")) == FourValue::F);
  CHECK(eval(fig("ex2_2"), "wc", parse_formula("#r")) == FourValue::F);
  CHECK(eval(fig("ex2_2_cut"), "wc", parse_formula("#p")) == FourValue::T);
  CHECK(eval(fig("ex2_2_cut"), "wc", parse_formula("#r")) == FourValue::T);
}

TEST_CASE("box clauses") {
  // (t[]) every successor true; (f[]) some successor false
  Model m(Frame({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}));
  m.set_value("b", "p", FourValue::T);
  m.set_value("c", "p", FourValue::B);
  CHECK(eval(m, "a", parse_formula("[]p")) == FourValue::B);
  m.set_value("c", "p", FourValue::N);
  CHECK(eval(m, "a", parse_formula("[]p")) == FourValue::N);
  m.set_value("c", "p", FourValue::F);
  CHECK(eval(m, "a", parse_formula("[]p")) == FourValue::F);
}

TEST_CASE("sequent_holds") {
  testing::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    CHECK(sequent_holds(testing::random_model(rng, 3, {"p", "q"}), parse_sequent("p&q |- p")));
  }
  Model glut = one_world(true, {{"p", FourValue::B}});
  CHECK_FALSE(sequent_holds(glut, parse_sequent("p&~p |- q")));
  CHECK_FALSE(sequent_holds(fig("fig4"), parse_sequent("q|~q |- #(q|~q)")));
}

TEST_CASE("unknown worlds are reported") {
  CHECK_THROWS_AS(eval(fig("fig1"), "nope", parse_formula("p")), UnknownWorld);
  CHECK_THROWS_AS(Frame({"a"}, {{"a", "b"}}), UnknownWorld);
  CHECK_THROWS_AS(Frame(std::vector<std::string>{}), std::invalid_argument);
}

TEST_CASE("dual_model") {
  Model m = one_world(true, {{"p", FourValue::B}, {"q", FourValue::T}, {"r", FourValue::N}, {"s", FourValue::F}});
  m.declare("r");
  Model d = dual_model(m);
  CHECK(d.value(0, "p") == FourValue::N);
  CHECK(d.value(0, "q") == FourValue::T);
  CHECK(d.value(0, "r") == FourValue::B);
  CHECK(d.value(0, "s") == FourValue::F);
  CHECK(d.frame() == m.frame());
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Model x = testing::random_model(rng, 3, {"p", "q"});
    CHECK(dual_model(dual_model(x)) == x);
  }
}

TEST_CASE("memoized evaluator agrees with fresh evaluation") {
  testing::Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Model m = testing::random_model(rng, 3, {"p", "q"});
    Evaluator shared(m);
    for (int k = 0; k < 5; ++k) {
      Formula f = testing::random_formula(rng, i % 2 ? Language::Tri : Language::Box, {"p", "q"}, 5);
      for (std::size_t w = 0; w < 3; ++w) {
        Evaluator fresh(m);
        CHECK(shared.value(w, f) == fresh.value(w, f));
      }
    }
  }
}
