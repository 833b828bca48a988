#include "ktri/tableau_io.hpp"

#include <sstream>

#include "json_detail.hpp"

namespace ktri {

namespace {

void text(const ProofNode& n, Style style, const std::string& indent, std::ostringstream& out) {
  const ProofNode* cur = &n;
  for (;;) {
    for (const auto& item : cur->added) {
      out << indent << render(item, style) << "    [" << rule_name(cur->rule, style) << "]\n";
    }
    if (cur->status == NodeStatus::Closed) out << indent << "x closed\n";
    if (cur->status == NodeStatus::Open) out << indent << "o open\n";
    if (cur->children.size() == 1) {
      cur = &cur->children.front();
      continue;
    }
    for (std::size_t k = 0; k < cur->children.size(); ++k) {
      out << indent << "+- " << (k + 1) << "\n";
      text(cur->children[k], style, indent + "   ", out);
    }
    return;
  }
}

detail::json item_json(const Item& item) {
  if (auto* r = std::get_if<RelAtom>(&item)) {
    return {{"rel", {r->source, r->target}}};
  }
  const auto& lf = std::get<LabelledFormula>(item);
  return {{"world", lf.world}, {"formula", render(lf.formula)}, {"label", label_name(lf.value)}};
}

detail::json node_json(const ProofNode& n) {
  detail::json j;
  j["rule"] = rule_name(n.rule);
  detail::json items = detail::json::array();
  for (const auto& i : n.added) items.push_back(item_json(i));
  j["items"] = std::move(items);
  if (n.status == NodeStatus::Closed) j["status"] = "closed";
  if (n.status == NodeStatus::Open) j["status"] = "open";
  detail::json kids = detail::json::array();
  for (const auto& c : n.children) kids.push_back(node_json(c));
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

std::string proof_text(const ProofNode& tree, Style style) {
  std::ostringstream out;
  text(tree, style, "", out);
  return out.str();
}

std::string result_json(const TableauResult& r, const std::optional<Sequent>& s) {
  detail::json j;
  j["verdict"] = r.proved ? "proved" : "refuted";
  if (s) j["sequent"] = render(*s);
  j["stats"] = {{"rule_applications", r.stats.rule_applications},
                {"closed_branches", r.stats.closed_branches},
                {"max_worlds", r.stats.max_worlds},
                {"max_branch_size", r.stats.max_branch_size}};
  j["tree"] = node_json(r.tree);
  if (r.countermodel) j["countermodel"] = detail::model_json(r.countermodel->model, r.countermodel->world);
  return j.dump(2);
}

}  // namespace ktri
