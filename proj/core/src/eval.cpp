#include "ktri/eval.hpp"

#include <vector>

namespace ktri {

FourValue Evaluator::value(std::size_t world, const Formula& f) {
  if (world >= model_.frame().size()) throw std::out_of_range("world index out of range");
  Key key{f, world};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  FourValue v = compute(world, f);
  memo_.emplace(std::move(key), v);
  return v;
}

FourValue Evaluator::compute(std::size_t w, const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      return model_.value(w, f.name());
    case Connective::Not: {
      FourValue v = value(w, f.child());
      return make_value(supports_falsity(v), supports_truth(v));
    }
    case Connective::And: {
      FourValue a = value(w, f.left());
      FourValue b = value(w, f.right());
      return make_value(supports_truth(a) && supports_truth(b),
                        supports_falsity(a) || supports_falsity(b));
    }
    case Connective::Or: {
      FourValue a = value(w, f.left());
      FourValue b = value(w, f.right());
      return make_value(supports_truth(a) || supports_truth(b),
                        supports_falsity(a) && supports_falsity(b));
    }
    case Connective::Box: {
      bool truth = true;
      bool falsity = false;
      for (std::size_t u : model_.frame().successors(w)) {
        FourValue v = value(u, f.child());
        truth = truth && supports_truth(v);
        falsity = falsity || supports_falsity(v);
      }
      return make_value(truth, falsity);
    }
    case Connective::Tri:
      break;
  }

  // Truth: (t1) any two successors agree on truth support and on falsity
  // support; (t2) every successor supports truth or falsity.
  // Falsity: (f1) one successor supports truth and another does not;
  // (f2) likewise for falsity; (f3) one supports truth and one (possibly
  // the same) supports falsity.
  bool any_true = false, any_untrue = false, any_false = false, any_unfalse = false;
  bool all_valued = true;
  for (std::size_t u : model_.frame().successors(w)) {
    FourValue v = value(u, f.child());
    (supports_truth(v) ? any_true : any_untrue) = true;
    (supports_falsity(v) ? any_false : any_unfalse) = true;
    all_valued = all_valued && v != FourValue::N;
  }
  bool t1 = !(any_true && any_untrue) && !(any_false && any_unfalse);
  bool t2 = all_valued;
  bool f1 = any_true && any_untrue;
  bool f2 = any_false && any_unfalse;
  bool f3 = any_true && any_false;
  return make_value(t1 && t2, f1 || f2 || f3);
}

FourValue eval(const Model& m, std::string_view world, const Formula& f) {
  return Evaluator(m).value(m.frame().index(world), f);
}

bool supports_true(const Model& m, std::string_view world, const Formula& f) {
  return supports_truth(eval(m, world, f));
}

bool supports_false(const Model& m, std::string_view world, const Formula& f) {
  return supports_falsity(eval(m, world, f));
}

FourValue tri_status_by_cases(const Model& m, std::string_view world, const Formula& f) {
  const std::size_t w = m.frame().index(world);
  Evaluator ev(m);
  std::vector<FourValue> values;
  for (std::size_t u : m.frame().successors(w)) values.push_back(ev.value(u, f));

  // d. two successors with different values
  for (FourValue v : values) {
    if (v != values.front()) return FourValue::F;
  }
  // a. vacuous, or uniformly true-and-not-false / false-and-not-true
  if (values.empty() || values.front() == FourValue::T || values.front() == FourValue::F) {
    return FourValue::T;
  }
  // b. / c. nonempty, uniformly both / uniformly neither
  return values.front();
}

bool sequent_holds(const Model& m, const Sequent& s) {
  Evaluator ev(m);
  for (std::size_t w = 0; w < m.frame().size(); ++w) {
    if (ev.supports_true(w, s.premise) && !ev.supports_true(w, s.conclusion)) return false;
  }
  return true;
}

}  // namespace ktri
