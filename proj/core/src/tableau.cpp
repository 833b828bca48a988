#include "ktri/tableau.hpp"

#include <stdexcept>

#include "ktri/eval.hpp"

namespace ktri {

namespace {

constexpr std::uint8_t bit(ValueLabel v) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(v)); }

constexpr std::uint8_t kT = bit(ValueLabel::T);
constexpr std::uint8_t kF = bit(ValueLabel::F);
constexpr std::uint8_t kTbar = bit(ValueLabel::NotT);
constexpr std::uint8_t kFbar = bit(ValueLabel::NotF);
constexpr std::uint8_t kTruthDim = kT | kTbar;
constexpr std::uint8_t kFalsityDim = kF | kFbar;

constexpr ValueLabel kAll[] = {ValueLabel::T, ValueLabel::F, ValueLabel::NotT, ValueLabel::NotF};

}  // namespace

std::string_view label_name(ValueLabel v, Style style) {
  const bool pretty = style == Style::Pretty;
  switch (v) {
    case ValueLabel::T: return "t";
    case ValueLabel::F: return "f";
    case ValueLabel::NotT: return pretty ? "t̄" : "t-";
    case ValueLabel::NotF: return pretty ? "f̄" : "f-";
  }
  return "?";
}

std::string render(const LabelledFormula& lf, Style style) {
  return lf.world + ": " + render(lf.formula, style) + " ; " + std::string(label_name(lf.value, style));
}

std::string render(const RelAtom& r, Style) { return r.source + " R " + r.target; }

std::string render(const Item& item, Style style) {
  return std::visit([&](const auto& x) { return render(x, style); }, item);
}

std::string_view rule_name(Rule r, Style style) {
  const bool p = style == Style::Pretty;
  switch (r) {
    case Rule::Root: return "root";
    case Rule::NotT: return p ? "¬t" : "~t";
    case Rule::NotF: return p ? "¬f" : "~f";
    case Rule::NotTbar: return p ? "¬t̄" : "~t-";
    case Rule::NotFbar: return p ? "¬f̄" : "~f-";
    case Rule::AndT: return p ? "∧t" : "&t";
    case Rule::AndF: return p ? "∧f" : "&f";
    case Rule::AndTbar: return p ? "∧t̄" : "&t-";
    case Rule::AndFbar: return p ? "∧f̄" : "&f-";
    case Rule::OrT: return p ? "∨t" : "|t";
    case Rule::OrF: return p ? "∨f" : "|f";
    case Rule::OrTbar: return p ? "∨t̄" : "|t-";
    case Rule::OrFbar: return p ? "∨f̄" : "|f-";
    case Rule::Cut: return "cut";
    case Rule::TriT: return p ? "▲T" : "#T";
    case Rule::TriTPrime: return p ? "▲'T" : "#'T";
    case Rule::TriB: return p ? "▲B" : "#B";
    case Rule::TriN: return p ? "▲N" : "#N";
    case Rule::TriBPlus: return p ? "▲B+" : "#B+";
    case Rule::TriNPlus: return p ? "▲N+" : "#N+";
    case Rule::TriF: return p ? "▲F" : "#F";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Branch
// ---------------------------------------------------------------------------

Branch::Branch(std::span<const LabelledFormula> root) : Branch(root, {}) {}

Branch::Branch(std::span<const LabelledFormula> root, std::span<const RelAtom> relations) {
  for (const auto& lf : root) add(lf);
  for (const auto& r : relations) add(r);
}

int Branch::intern(const std::string& world) {
  auto [it, inserted] = ids_.emplace(world, static_cast<int>(names_.size()));
  if (inserted) {
    names_.push_back(world);
    succ_.emplace_back();
  }
  return it->second;
}

std::uint8_t Branch::mask(int world, const Formula& f) const {
  auto it = labels_.find(Key{world, f});
  return it == labels_.end() ? 0 : it->second;
}

bool Branch::add_entry(int world, const Formula& f, ValueLabel v) {
  auto& m = labels_[Key{world, f}];
  if (m & bit(v)) return false;
  m |= bit(v);
  entries_.push_back({world, f, v});
  order_.emplace_back(false, entries_.size() - 1);
  if (!closed_by_ && (m & bit(bar(v)))) closed_by_ = entries_.size() - 1;
  return true;
}

bool Branch::add_relation(int from, int to) {
  for (int s : succ_[from]) {
    if (s == to) return false;
  }
  succ_[from].push_back(to);
  rels_.emplace_back(from, to);
  order_.emplace_back(true, rels_.size() - 1);
  return true;
}

bool Branch::add(const LabelledFormula& lf) { return add_entry(intern(lf.world), lf.formula, lf.value); }

bool Branch::add(const RelAtom& r) {
  int a = intern(r.source);
  int b = intern(r.target);
  return add_relation(a, b);
}

bool Branch::add(const Item& item) {
  return std::visit([this](const auto& x) { return add(x); }, item);
}

bool Branch::contains(const LabelledFormula& lf) const {
  auto it = ids_.find(lf.world);
  return it != ids_.end() && (mask(it->second, lf.formula) & bit(lf.value));
}

bool Branch::contains(const RelAtom& r) const {
  auto a = ids_.find(r.source);
  auto b = ids_.find(r.target);
  if (a == ids_.end() || b == ids_.end()) return false;
  for (int s : succ_[a->second]) {
    if (s == b->second) return true;
  }
  return false;
}

std::optional<LabelledFormula> Branch::closing_item() const {
  if (!closed_by_) return std::nullopt;
  const auto& e = entries_[*closed_by_];
  return LabelledFormula{names_[e.world], e.formula, e.label};
}

std::vector<Item> Branch::items() const {
  std::vector<Item> out;
  out.reserve(order_.size());
  for (auto [is_rel, i] : order_) {
    if (is_rel) {
      out.emplace_back(RelAtom{names_[rels_[i].first], names_[rels_[i].second]});
    } else {
      const auto& e = entries_[i];
      out.emplace_back(LabelledFormula{names_[e.world], e.formula, e.label});
    }
  }
  return out;
}

std::vector<LabelledFormula> Branch::labelled() const {
  std::vector<LabelledFormula> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({names_[e.world], e.formula, e.label});
  return out;
}

std::vector<RelAtom> Branch::relations() const {
  std::vector<RelAtom> out;
  out.reserve(rels_.size());
  for (auto [a, b] : rels_) out.push_back({names_[a], names_[b]});
  return out;
}

bool is_closed(const Branch& b) { return b.is_closed(); }

// ---------------------------------------------------------------------------
// Rule selection
// ---------------------------------------------------------------------------

struct BranchAccess {
  const Branch& b;

  LabelledFormula lf(int w, const Formula& f, ValueLabel v) const { return {b.names_[w], f, v}; }
  RelAtom rel(int from, const std::string& to) const { return {b.names_[from], to}; }
  bool has(int w, const Formula& f, ValueLabel v) const { return (b.mask(w, f) & bit(v)) != 0; }
  std::uint8_t mask(int w, const Formula& f) const { return b.mask(w, f); }

  std::pair<std::vector<std::string>, int> fresh(int count) const {
    std::vector<std::string> out;
    int n = b.fresh_counter_;
    while (static_cast<int>(out.size()) < count) {
      std::string name = "w" + std::to_string(n++);
      if (!b.ids_.contains(name)) out.push_back(std::move(name));
    }
    return {std::move(out), n};
  }

  RuleApplication linear(Rule r, std::vector<Item> items) const {
    return {r, {}, {std::move(items)}, b.fresh_counter_};
  }

  RuleApplication cut(int w, const Formula& f, bool truth_dim) const {
    ValueLabel pos = truth_dim ? ValueLabel::T : ValueLabel::F;
    return {Rule::Cut, {}, {{lf(w, f, pos)}, {lf(w, f, bar(pos))}}, b.fresh_counter_};
  }

  // Conclusions of the propositional rule for entry e that are not yet on
  // the branch.
  std::optional<RuleApplication> propositional(const Branch::Entry& e) const {
    const Formula& f = e.formula;
    const int w = e.world;
    const ValueLabel v = e.label;
    auto missing = [&](const Formula& g, ValueLabel u, std::vector<Item>& out) {
      if (!has(w, g, u)) out.emplace_back(lf(w, g, u));
    };
    switch (f.kind()) {
      case Connective::Not: {
        std::vector<Item> out;
        missing(f.child(), neg(v), out);
        if (out.empty()) return std::nullopt;
        static constexpr Rule rules[] = {Rule::NotT, Rule::NotF, Rule::NotTbar, Rule::NotFbar};
        return linear(rules[static_cast<int>(v)], std::move(out));
      }
      case Connective::And:
      case Connective::Or: {
        const bool is_and = f.is(Connective::And);
        // conjunctive cases: ∧t, ∧f̄, ∨f, ∨t̄ need both components
        const bool both = is_and ? (v == ValueLabel::T || v == ValueLabel::NotF)
                                 : (v == ValueLabel::F || v == ValueLabel::NotT);
        Rule rule;
        if (is_and) {
          static constexpr Rule r[] = {Rule::AndT, Rule::AndF, Rule::AndTbar, Rule::AndFbar};
          rule = r[static_cast<int>(v)];
        } else {
          static constexpr Rule r[] = {Rule::OrT, Rule::OrF, Rule::OrTbar, Rule::OrFbar};
          rule = r[static_cast<int>(v)];
        }
        if (both) {
          std::vector<Item> out;
          missing(f.left(), v, out);
          missing(f.right(), v, out);
          if (out.empty()) return std::nullopt;
          return linear(rule, std::move(out));
        }
        // one component suffices: if one side carries the bar, the other
        // must carry v
        const Formula* sides[] = {&f.left(), &f.right()};
        for (int i = 0; i < 2; ++i) {
          const Formula& me = *sides[i];
          const Formula& other = *sides[1 - i];
          if (has(w, me, bar(v)) && !has(w, other, v)) return linear(rule, {lf(w, other, v)});
        }
        return std::nullopt;
      }
      default:
        return std::nullopt;
    }
  }

  std::optional<RuleApplication> propagation(const Branch::Entry& e) const {
    const Formula& f = e.formula;
    if (!f.is(Connective::Tri)) return std::nullopt;
    const Formula& g = f.child();
    const int w = e.world;
    const std::uint8_t m = mask(w, f);
    const auto& succ = b.succ_[w];

    if ((m & kT) && (m & kFbar)) {
      for (int j : succ) {
        for (ValueLabel u : kAll) {
          ValueLabel c = neg(bar(u));
          if (has(j, g, u) && !has(j, g, c)) return linear(Rule::TriT, {lf(j, g, c)});
        }
      }
      for (int j1 : succ) {
        for (auto [x, y] : {std::pair{ValueLabel::T, ValueLabel::NotF}, std::pair{ValueLabel::F, ValueLabel::NotT}}) {
          if (!has(j1, g, x) || !has(j1, g, y)) continue;
          for (int j2 : succ) {
            if (j2 == j1) continue;
            std::vector<Item> out;
            if (!has(j2, g, x)) out.emplace_back(lf(j2, g, x));
            if (!has(j2, g, y)) out.emplace_back(lf(j2, g, y));
            if (!out.empty()) return linear(Rule::TriTPrime, std::move(out));
          }
        }
      }
    }
    auto spread = [&](ValueLabel x, ValueLabel y, Rule rule) -> std::optional<RuleApplication> {
      for (int j : succ) {
        std::vector<Item> out;
        if (!has(j, g, x)) out.emplace_back(lf(j, g, x));
        if (!has(j, g, y)) out.emplace_back(lf(j, g, y));
        if (!out.empty()) return linear(rule, std::move(out));
      }
      return std::nullopt;
    };
    if ((m & kT) && (m & kF)) {
      if (auto r = spread(ValueLabel::T, ValueLabel::F, Rule::TriB)) return r;
    }
    if ((m & kTbar) && (m & kFbar)) {
      if (auto r = spread(ValueLabel::NotT, ValueLabel::NotF, Rule::TriN)) return r;
    }
    return std::nullopt;
  }

  std::optional<RuleApplication> analytic_cut(const Branch::Entry& e) const {
    const Formula& f = e.formula;
    const int w = e.world;
    if (f.is(Connective::Tri)) {
      const std::uint8_t m = mask(w, f);
      const bool t = m & kTruthDim;
      const bool fl = m & kFalsityDim;
      if (t && !fl) return cut(w, f, false);
      if (fl && !t) return cut(w, f, true);
      if ((m & kT) && (m & kFbar)) {
        for (int j : b.succ_[w]) {
          if (mask(j, f.child()) == 0) return cut(j, f.child(), true);
        }
      }
      return std::nullopt;
    }
    if (!f.is(Connective::And) && !f.is(Connective::Or)) return std::nullopt;
    const ValueLabel v = e.label;
    const bool is_and = f.is(Connective::And);
    const bool disjunctive = is_and ? (v == ValueLabel::F || v == ValueLabel::NotT)
                                    : (v == ValueLabel::T || v == ValueLabel::NotF);
    if (!disjunctive) return std::nullopt;
    const std::uint8_t dim = (v == ValueLabel::T || v == ValueLabel::NotT) ? kTruthDim : kFalsityDim;
    if ((mask(w, f.left()) & dim) || (mask(w, f.right()) & dim)) return std::nullopt;
    return cut(w, f.left(), dim == kTruthDim);
  }

  std::optional<RuleApplication> creation(Rule rule) const {
    for (const auto& e : b.entries_) {
      const Formula& f = e.formula;
      if (!f.is(Connective::Tri)) continue;
      const int w = e.world;
      const std::uint8_t m = mask(w, f);
      const Formula& g = f.child();
      std::string tag;
      switch (rule) {
        case Rule::TriBPlus:
          if (!((m & kT) && (m & kF))) continue;
          tag = "B+";
          break;
        case Rule::TriNPlus:
          if (!((m & kTbar) && (m & kFbar))) continue;
          tag = "N+";
          break;
        default:
          if (!((m & kF) && (m & kTbar))) continue;
          tag = "F";
          break;
      }
      std::string print = tag + "|" + b.names_[w] + "|" + render(f);
      if (b.fired_.contains(print)) continue;
      if (rule == Rule::TriF) {
        auto [names, next] = fresh(2);
        std::vector<Item> left{rel(w, names[0]), rel(w, names[1]),
                               LabelledFormula{names[0], g, ValueLabel::T},
                               LabelledFormula{names[1], g, ValueLabel::NotT}};
        std::vector<Item> right{rel(w, names[0]), rel(w, names[1]),
                                LabelledFormula{names[0], g, ValueLabel::F},
                                LabelledFormula{names[1], g, ValueLabel::NotF}};
        return RuleApplication{rule, std::move(print), {std::move(left), std::move(right)}, next};
      }
      auto [names, next] = fresh(1);
      ValueLabel x = rule == Rule::TriBPlus ? ValueLabel::T : ValueLabel::NotT;
      ValueLabel y = rule == Rule::TriBPlus ? ValueLabel::F : ValueLabel::NotF;
      std::vector<Item> items{rel(w, names[0]), LabelledFormula{names[0], g, x},
                              LabelledFormula{names[0], g, y}};
      return RuleApplication{rule, std::move(print), {std::move(items)}, next};
    }
    return std::nullopt;
  }

  std::optional<RuleApplication> next() const {
    if (b.is_closed()) return std::nullopt;
    for (const auto& e : b.entries_) {
      if (auto r = propositional(e)) return r;
    }
    for (const auto& e : b.entries_) {
      if (auto r = propagation(e)) return r;
    }
    for (const auto& e : b.entries_) {
      if (auto r = analytic_cut(e)) return r;
    }
    for (Rule r : {Rule::TriBPlus, Rule::TriNPlus, Rule::TriF}) {
      if (auto app = creation(r)) return app;
    }
    return std::nullopt;
  }

  static void apply(Branch& br, const RuleApplication& app, std::size_t which) {
    for (const auto& item : app.alternatives.at(which)) br.add(item);
    if (!app.fingerprint.empty()) br.fired_.insert(app.fingerprint);
    br.fresh_counter_ = app.next_fresh_counter;
  }
};

std::optional<RuleApplication> next_rule(const Branch& b) { return BranchAccess{b}.next(); }

void apply_rule(Branch& b, const RuleApplication& app, std::size_t which) {
  BranchAccess::apply(b, app, which);
}

std::vector<Branch> saturation_step(const Branch& b) {
  std::vector<Branch> out;
  auto app = next_rule(b);
  if (!app) return out;
  for (std::size_t k = 0; k < app->alternatives.size(); ++k) {
    out.push_back(b);
    apply_rule(out.back(), *app, k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

namespace {

struct Search {
  TableauStats stats;
  std::optional<Branch> open;

  void note(const Branch& b) {
    stats.max_worlds = std::max(stats.max_worlds, b.worlds().size());
    stats.max_branch_size = std::max(stats.max_branch_size, b.size());
  }

  // true iff every branch below closes
  bool explore(Branch b, ProofNode* node) {
    for (;;) {
      note(b);
      if (b.is_closed()) {
        node->status = NodeStatus::Closed;
        ++stats.closed_branches;
        return true;
      }
      auto app = next_rule(b);
      if (!app) {
        node->status = NodeStatus::Open;
        open = std::move(b);
        return false;
      }
      ++stats.rule_applications;
      if (app->alternatives.size() == 1) {
        apply_rule(b, *app, 0);
        node->children.push_back(ProofNode{app->rule, app->alternatives[0], {}, NodeStatus::Internal});
        node = &node->children.back();
        continue;
      }
      node->children.reserve(app->alternatives.size());
      for (std::size_t k = 0; k < app->alternatives.size(); ++k) {
        Branch c = k + 1 == app->alternatives.size() ? std::move(b) : b;
        apply_rule(c, *app, k);
        node->children.push_back(ProofNode{app->rule, app->alternatives[k], {}, NodeStatus::Internal});
        if (!explore(std::move(c), &node->children.back())) return false;
      }
      return true;
    }
  }
};

}  // namespace

TableauResult prove_from(std::span<const LabelledFormula> root) {
  for (const auto& lf : root) {
    if (!lf.formula.in_language(Language::Tri)) {
      throw LanguageError("the tableau calculus covers the ▲ language only; found □ in " + render(lf.formula));
    }
  }
  TableauResult result;
  result.tree.rule = Rule::Root;
  for (const auto& lf : root) result.tree.added.emplace_back(lf);
  Search search;
  result.proved = search.explore(Branch(root), &result.tree);
  result.stats = search.stats;
  if (!result.proved) {
    result.open_branch = std::move(search.open);
    std::optional<std::string> w;
    if (!root.empty()) w = root.front().world;
    result.countermodel = extract_countermodel(*result.open_branch, w);
  }
  return result;
}

TableauResult prove(const Sequent& s) {
  const LabelledFormula root[] = {{"w0", s.premise, ValueLabel::T}, {"w0", s.conclusion, ValueLabel::NotT}};
  return prove_from(root);
}

PointedModel extract_countermodel(const Branch& b, std::optional<std::string> root_world) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& r : b.relations()) edges.emplace_back(r.source, r.target);
  std::vector<std::string> worlds = b.worlds();
  if (worlds.empty()) worlds.push_back(root_world.value_or("w0"));
  Model m{Frame(worlds, edges)};
  for (const auto& lf : b.labelled()) {
    for (const auto& var : variables(lf.formula)) m.declare(var);
    if (!lf.formula.is(Connective::Atom)) continue;
    const std::size_t w = m.frame().index(lf.world);
    FourValue cur = m.value(w, lf.formula.name());
    if (lf.value == ValueLabel::T) m.set_value(w, lf.formula.name(), make_value(true, supports_falsity(cur)));
    if (lf.value == ValueLabel::F) m.set_value(w, lf.formula.name(), make_value(supports_truth(cur), true));
  }
  if (!check_realisation(m, b)) throw std::logic_error("extracted model does not realise the open branch");
  const std::size_t designated = root_world ? m.frame().index(*root_world) : 0;
  return {std::move(m), designated};
}

bool check_realisation(const Model& m, const Branch& b) {
  Evaluator ev(m);
  for (const auto& lf : b.labelled()) {
    auto w = m.frame().find(lf.world);
    if (!w) return false;
    FourValue v = ev.value(*w, lf.formula);
    bool ok = false;
    switch (lf.value) {
      case ValueLabel::T: ok = supports_truth(v); break;
      case ValueLabel::F: ok = supports_falsity(v); break;
      case ValueLabel::NotT: ok = !supports_truth(v); break;
      case ValueLabel::NotF: ok = !supports_falsity(v); break;
    }
    if (!ok) return false;
  }
  for (const auto& r : b.relations()) {
    auto a = m.frame().find(r.source);
    auto c = m.frame().find(r.target);
    if (!a || !c || !m.frame().related(*a, *c)) return false;
  }
  return true;
}

std::set<Formula> formulas_in_tree(const ProofNode& tree) {
  std::set<Formula> out;
  std::vector<const ProofNode*> stack{&tree};
  while (!stack.empty()) {
    const ProofNode* n = stack.back();
    stack.pop_back();
    for (const auto& item : n->added) {
      if (auto* lf = std::get_if<LabelledFormula>(&item)) out.insert(lf->formula);
    }
    for (const auto& c : n->children) stack.push_back(&c);
  }
  return out;
}

}  // namespace ktri
