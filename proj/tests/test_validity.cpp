#include <doctest.h>

#include <array>

#include "ktri/eval.hpp"
#include "ktri/figures.hpp"
#include "ktri/parser.hpp"
#include "ktri/validity.hpp"
#include "ktri/world_sets.hpp"
#include "support.hpp"

using namespace ktri;

namespace {
const Frame& fig_frame(std::string_view id) { return figure_model(id).model.model.frame(); }
}  // namespace

TEST_CASE("frame properties") {
  CHECK(frame_property(fig_frame("fig10"), FrameProperty::Transitive));
  CHECK_FALSE(frame_property(fig_frame("fig11"), FrameProperty::Euclidean));
  CHECK(frame_property(fig_frame("fig8_dead"), FrameProperty::PartialFunctional));
  CHECK(frame_property(fig_frame("fig8_loop"), FrameProperty::PartialFunctional));
  CHECK(frame_property(fig_frame("fig8_dead"), FrameProperty::EmptyRelation));
  CHECK(frame_property(fig_frame("fig8_loop"), FrameProperty::Coreflexive));
  CHECK(frame_property(fig_frame("fig7"), FrameProperty::Equivalence));
  CHECK(frame_property(fig_frame("fig7"), FrameProperty::Serial));
  CHECK_FALSE(frame_property(fig_frame("fig1"), FrameProperty::Serial));
  CHECK(frame_property(fig_frame("ex2_2"), FrameProperty::Preorder));
  CHECK_FALSE(frame_property(fig_frame("ex2_2"), FrameProperty::Symmetric));
  CHECK_FALSE(frame_property(fig_frame("ex2_2_cut"), FrameProperty::Transitive));
}

TEST_CASE("property names") {
  for (auto p : all_properties()) CHECK(parse_property(property_name(p)) == p);
  CHECK(parse_property("S4") == FrameProperty::Preorder);
  CHECK(parse_property("1") == FrameProperty::Coreflexive);
  CHECK_FALSE(parse_property("nonsense").has_value());
}

TEST_CASE("sequent_valid_on_frame") {
  const Frame loop({"w"}, {{"w", "w"}});
  const Frame dead({"w"});
  const auto s = parse_sequent("#(p|~p) |- p|~p");
  CHECK(sequent_valid_on_frame(loop, s));
  CHECK_FALSE(sequent_valid_on_frame(dead, s));
  auto cm = sequent_countermodel_on_frame(dead, s);
  REQUIRE(cm.has_value());
  CHECK(cm->model.value(0, "p") == FourValue::N);
  CHECK(sequent_valid_on_frame(fig_frame("fig11"), parse_sequent("~#p |- ##p")));
}

TEST_CASE("formula_valid_on_frame") {
  const Frame ver({"a", "b"});
  CHECK(formula_valid_on_frame(ver, parse_formula("#p")));
  const Frame loop({"w"}, {{"w", "w"}});
  CHECK_FALSE(formula_valid_on_frame(loop, parse_formula("#p")));
  auto cm = formula_countermodel_on_frame(loop, parse_formula("#p"));
  REQUIRE(cm.has_value());
  CHECK(cm->model.value(0, "p") == FourValue::N);
  for (const auto& fr : {loop, ver, fig_frame("fig10")}) {
    auto c = formula_countermodel_on_frame(fr, parse_formula("p|~p"));
    REQUIRE(c.has_value());
    CHECK_FALSE(supports_true(c->model, c->world_name(), parse_formula("p|~p")));
  }
}

TEST_CASE("resource bound is an error, not a verdict") {
  const Frame fr = Frame::indexed(5, {});
  const auto s = parse_sequent("p&q&r |- p");
  CHECK_THROWS_AS(sequent_valid_on_frame(fr, s), BoundExceeded);
  const auto small = parse_sequent("p&q |- p");
  CHECK_THROWS_AS(sequent_valid_on_frame(fr, small, 9), BoundExceeded);
  CHECK(sequent_valid_on_frame(fr, small, 10));
  try {
    sequent_valid_on_frame(fr, s, 4);
  } catch (const BoundExceeded& e) {
    CHECK(e.cells() == 15);
    CHECK(e.bound() == 4);
  }
}

TEST_CASE("valuation enumerator visits 4^(worlds*vars) valuations") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t v = 1; v <= 2; ++v) {
      ValuationEnumerator e(n, v);
      std::size_t count = 1;
      while (e.next()) ++count;
      CHECK(count == (std::size_t{1} << (2 * n * v)));
    }
  }
}

TEST_CASE("set evaluator agrees with the recursive evaluator") {
  testing::Rng rng(17);
  const std::vector<std::string> vars{"p", "q"};
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 4;
    Model m = testing::random_model(rng, n, vars, 0.35);
    std::array<Formula, 3> fs{testing::random_formula(rng, Language::Tri, vars, 5),
                              testing::random_formula(rng, Language::Box, vars, 5),
                              testing::random_formula(rng, Language::Tri, vars, 3)};
    SetEvaluator se(fs, vars);
    std::vector<WorldSets> vs{variable_sets(m, "p"), variable_sets(m, "q")};
    auto out = se.evaluate(successor_masks(m.frame()), vs);
    Evaluator ev(m);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      for (std::size_t w = 0; w < n; ++w) {
        const FourValue v = ev.value(w, fs[k]);
        CHECK(bool((out[k].truth >> w) & 1) == supports_truth(v));
        CHECK(bool((out[k].falsity >> w) & 1) == supports_falsity(v));
      }
    }
  }
}
