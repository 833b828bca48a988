#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ktri/analysis.hpp"
#include "ktri/eval.hpp"
#include "ktri/figures.hpp"
#include "ktri/model_io.hpp"
#include "ktri/parser.hpp"
#include "ktri/tableau.hpp"
#include "ktri/tableau_io.hpp"
#include "ktri/validity.hpp"

namespace ktri::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string quote(const std::string& s) {
  std::ostringstream o;
  o << std::quoted(s);
  return o.str();
}

PointedModel load_pointed(const std::string& path, const std::string& world) {
  Model m = load_model(path);
  auto w = m.frame().find(world);
  if (!w) throw UsageError("world '" + world + "' is not in " + path);
  return {std::move(m), *w};
}

std::vector<Condition> load_conditions(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<Condition> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto c = line.find('%'); c != std::string::npos) line.erase(c);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_condition(line));
  }
  if (out.empty()) throw UsageError(path + " contains no sequents");
  return out;
}

Language parse_language(const std::string& s) {
  if (s == "tri") return Language::Tri;
  if (s == "box") return Language::Box;
  throw UsageError("language must be tri or box");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Four-valued non-contingency logic: prover, model checker, experiments", "ktri"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool ascii = false;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--ascii", ascii, "ASCII connectives instead of glyphs");
  std::size_t bound = kDefaultCellBound;
  app.add_option("--bound", bound, "max worlds*variables for exhaustive searches")->capture_default_str();

  std::string seq_text, formula_text, model_path, world, frame_path, property, class_name, sequents_path;
  std::string model_a, model_b, world_a, world_b, language = "tri", mode, write_data;
  std::vector<std::string> var_list;
  std::size_t max_worlds = 3, max_size = 3, formula_size = 9;
  bool contrapose = false;

  auto* prove_cmd = app.add_subcommand("prove", "tableau proof search for an L_tri sequent");
  prove_cmd->add_option("sequent", seq_text, "e.g. \"#p |- #~p\"")->required();
  prove_cmd->add_flag("--contrapose", contrapose, "start from {w0:premise;f-, w0:conclusion;f}");

  auto* eval_cmd = app.add_subcommand("eval", "value of a formula at a world");
  eval_cmd->add_option("--model", model_path)->required();
  eval_cmd->add_option("--world", world)->required();
  eval_cmd->add_option("--formula", formula_text)->required();

  auto* vof_cmd = app.add_subcommand("valid-on-frame", "validity of a sequent (or formula) on a frame");
  vof_cmd->add_option("--frame", frame_path)->required();
  vof_cmd->add_option("sequent", seq_text)->required();

  auto* dual_cmd = app.add_subcommand("dual", "swap B and N everywhere");
  dual_cmd->add_option("--model", model_path)->required();

  auto* cm_cmd = app.add_subcommand("countermodel", "smallest countermodel by exhaustive search");
  cm_cmd->add_option("sequent", seq_text)->required();
  cm_cmd->add_option("--max-worlds", max_worlds)->capture_default_str();

  auto* def_cmd = app.add_subcommand("definability", "property vs joint validity on all small frames");
  auto* prop_opt = def_cmd->add_option("--property", property, "frame property or class name");
  auto* seqs_opt = def_cmd->add_option("--sequents", sequents_path, "one sequent or formula per line, % comments");
  auto* class_opt = def_cmd->add_option("--class", class_name, "T, S4, S5, F, Ver or 1 with its defining sequents");
  def_cmd->add_option("--max-size", max_size)->capture_default_str();
  class_opt->excludes(prop_opt)->excludes(seqs_opt);
  prop_opt->needs(seqs_opt);
  seqs_opt->needs(prop_opt);

  auto* sep_cmd = app.add_subcommand("separate", "search for a formula separating two pointed models");
  sep_cmd->add_option("--model-a", model_a)->required();
  sep_cmd->add_option("--world-a", world_a)->required();
  sep_cmd->add_option("--model-b", model_b)->required();
  sep_cmd->add_option("--world-b", world_b)->required();
  sep_cmd->add_option("--language", language)->check(CLI::IsMember({"tri", "box"}))->capture_default_str();
  sep_cmd->add_option("--max-size", formula_size)->capture_default_str();
  sep_cmd->add_option("--mode", mode)->check(CLI::IsMember({"transfer", "glut", "value"}));
  sep_cmd->add_option("--vars", var_list)->delimiter(',');

  auto* fig_cmd = app.add_subcommand("figures", "re-check every figure and worked example");
  fig_cmd->add_option("--write-data", write_data, "also write the figure models as JSON into this directory");

  std::vector<std::string> argv_store{"ktri"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  const char* no_color = std::getenv("NO_COLOR");
  const Style style = (ascii || (no_color && *no_color)) ? Style::Ascii : Style::Pretty;

  try {
    if (*prove_cmd) {
      const Sequent s = parse_sequent(seq_text);
      if (!s.in_language(Language::Tri)) throw LanguageError("prove accepts L_tri sequents only (no [])");
      TableauResult r;
      if (contrapose) {
        const LabelledFormula root[] = {{"w0", s.premise, ValueLabel::NotF}, {"w0", s.conclusion, ValueLabel::F}};
        r = prove_from(root);
      } else {
        r = prove(s);
      }
      if (json) {
        out << result_json(r, s) << "\n";
      } else if (r.proved) {
        out << "PROVED\n" << proof_text(r.tree, style);
      } else {
        out << "REFUTED\n" << to_json(*r.countermodel) << "\n";
      }
      return r.proved ? kOk : kNegative;
    }

    if (*eval_cmd) {
      const Model m = load_model(model_path);
      const Formula f = parse_formula(formula_text);
      if (!m.frame().find(world)) throw UsageError("world '" + world + "' is not in " + model_path);
      const FourValue v = eval(m, world, f);
      if (json) {
        out << "{\"world\": " << quote(world) << ", \"formula\": " << quote(render(f)) << ", \"value\": \""
            << to_char(v) << "\"}\n";
      } else {
        out << to_char(v) << "\n";
      }
      return kOk;
    }

    if (*vof_cmd) {
      const Frame fr = load_frame(frame_path);
      const Condition c = parse_condition(seq_text);
      std::optional<PointedModel> cm;
      if (const auto* s = std::get_if<Sequent>(&c)) {
        cm = sequent_countermodel_on_frame(fr, *s, bound);
      } else {
        cm = formula_countermodel_on_frame(fr, std::get<Formula>(c), bound);
      }
      if (json) {
        out << "{\"condition\": " << quote(render(c)) << ", \"valid\": " << (cm ? "false" : "true");
        if (cm) out << ", \"countermodel\": " << to_json(*cm);
        out << "}\n";
      } else if (cm) {
        out << "INVALID\n" << to_json(*cm) << "\n";
      } else {
        out << "VALID\n";
      }
      return cm ? kNegative : kOk;
    }

    if (*dual_cmd) {
      out << to_json(dual_model(load_model(model_path))) << "\n";
      return kOk;
    }

    if (*cm_cmd) {
      const Sequent s = parse_sequent(seq_text);
      auto cm = find_countermodel(s, max_worlds, bound);
      if (json) {
        out << (cm ? to_json(*cm) : std::string("null")) << "\n";
      } else if (cm) {
        out << "FOUND\n" << to_json(*cm) << "\n";
      } else {
        out << "NONE (no countermodel with <= " << max_worlds << " worlds)\n";
      }
      return cm ? kNegative : kOk;
    }

    if (*def_cmd) {
      FrameProperty prop{};
      std::vector<Condition> conds;
      if (!class_name.empty()) {
        const FrameClass* fc = nullptr;
        for (const auto& c : standard_frame_classes())
          if (c.name == class_name) fc = &c;
        if (!fc) throw UsageError("unknown frame class '" + class_name + "'");
        prop = fc->property;
        conds = fc->conditions;
      } else {
        if (property.empty()) throw UsageError("definability needs --class or --property with --sequents");
        auto p = parse_property(property);
        if (!p) throw UsageError("unknown frame property '" + property + "'");
        prop = *p;
        conds = load_conditions(sequents_path);
      }
      const auto r = check_definability(prop, std::move(conds), max_size, bound);
      if (json) {
        out << to_json(r) << "\n";
      } else {
        out << (r.defines ? "DEFINES" : "REFUTED") << "  " << property_name(r.property) << " by {";
        for (std::size_t i = 0; i < r.conditions.size(); ++i) out << (i ? ", " : "") << render(r.conditions[i], style);
        out << "} on " << r.frames_checked << " frames with <= " << r.max_size << " worlds\n";
        if (r.witness) {
          out << "witness (" << disagreement_name(*r.direction) << "):\n" << to_json(*r.witness) << "\n";
        }
      }
      return r.defines ? kOk : kNegative;
    }

    if (*sep_cmd) {
      const PointedModel a = load_pointed(model_a, world_a);
      const PointedModel b = load_pointed(model_b, world_b);
      std::optional<std::set<std::string>> vars;
      if (!var_list.empty()) vars = std::set<std::string>(var_list.begin(), var_list.end());
      std::optional<SeparationMode> m;
      if (!mode.empty()) m = parse_mode(mode);
      const auto r = check_indistinguishability(a, b, parse_language(language), formula_size, m, vars);
      if (json) {
        out << to_json(r) << "\n";
      } else if (r.separating) {
        out << "SEPARATED by " << render(*r.separating, style) << "  (a: " << to_char(r.value_a)
            << ", b: " << to_char(r.value_b) << ", mode " << mode_name(r.mode) << ")\n";
      } else {
        out << "NO SEPARATING FORMULA among " << r.formulas_checked << " formulas with <= " << r.max_size
            << " nodes (mode " << mode_name(r.mode) << ", bounded check)\n";
      }
      return r.separating ? kNegative : kOk;
    }

    if (*fig_cmd) {
      if (!write_data.empty()) {
        std::filesystem::create_directories(write_data);
        for (const auto& f : figure_models()) {
          const auto path = std::filesystem::path(write_data) / (f.id + ".json");
          std::ofstream o(path);
          if (!o) throw std::runtime_error("cannot write '" + path.string() + "'");
          o << to_json(f.model) << "\n";
        }
      }
      const auto checks = run_figure_checks();
      bool all = true;
      for (const auto& c : checks) all = all && c.passed;
      if (json) {
        out << "[\n";
        for (std::size_t i = 0; i < checks.size(); ++i) {
          const auto& c = checks[i];
          out << "  {\"figure\": " << quote(c.figure) << ", \"claim\": " << quote(c.claim)
              << ", \"expected\": " << quote(c.expected) << ", \"actual\": " << quote(c.actual)
              << ", \"passed\": " << (c.passed ? "true" : "false") << "}" << (i + 1 < checks.size() ? "," : "") << "\n";
        }
        out << "]\n";
      } else {
        for (const auto& c : checks) {
          out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << c.figure << c.claim
              << "  [expected " << c.expected << ", got " << c.actual << "]\n";
        }
        out << (all ? "all figure checks passed" : "some figure checks FAILED") << "\n";
      }
      return all ? kOk : kNegative;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const LanguageError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace ktri::cli
