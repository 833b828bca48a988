#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"
#include "ktri/eval.hpp"
#include "ktri/figures.hpp"
#include "ktri/model_io.hpp"
#include "support.hpp"

using namespace ktri;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fig(const std::string& id) {
  return (std::filesystem::path(testing::data_dir()) / "figures" / (id + ".json")).string();
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("prove exit codes and output") {
  auto a = run({"prove", "#p |- #~p"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out.rfind("PROVED", 0) == 0);
  auto b = run({"prove", "q|~q |- #(q|~q)"});
  CHECK(b.code == cli::kNegative);
  CHECK(b.out.rfind("REFUTED", 0) == 0);
  CHECK(run({"prove", "--contrapose", "#p |- #~p"}).code == cli::kOk);
  CHECK(run({"prove", "#p |- #p &"}).code == cli::kError);
  auto box = run({"prove", "[]p |- p"});
  CHECK(box.code == cli::kError);
  CHECK(box.err.find("error:") == 0);
}

TEST_CASE("prove --json round-trips its countermodel") {
  auto r = run({"--json", "prove", "#p |- p"});
  REQUIRE(r.code == cli::kNegative);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "refuted");
  auto pm = pointed_model_from_json(j["countermodel"].dump());
  CHECK(pm.world_name() == j["countermodel"]["designated"]);
  // flag after the subcommand is accepted too
  CHECK(run({"prove", "#p |- p", "--json"}).out == r.out);
}

TEST_CASE("ascii output and NO_COLOR") {
  auto pretty = run({"prove", "#p |- #~p"});
  auto ascii = run({"--ascii", "prove", "#p |- #~p"});
  CHECK(pretty.out.find("▲") != std::string::npos);
  CHECK(ascii.out.find("▲") == std::string::npos);
  ::setenv("NO_COLOR", "1", 1);
  auto nc = run({"prove", "#p |- #~p"});
  ::unsetenv("NO_COLOR");
  CHECK(nc.out == ascii.out);
}

TEST_CASE("eval and dual") {
  auto e = run({"eval", "--model", fig("fig1"), "--world", "w0", "--formula", "#p"});
  CHECK(e.code == cli::kOk);
  CHECK(e.out == "F\n");
  CHECK(run({"eval", "--model", fig("fig1"), "--world", "nowhere", "--formula", "p"}).code == cli::kError);
  CHECK(run({"eval", "--model", "/nonexistent.json", "--world", "w0", "--formula", "p"}).code == cli::kError);
  auto d = run({"dual", "--model", fig("fig5_b")});
  REQUIRE(d.code == cli::kOk);
  const Model m = model_from_json(read_text_file(fig("fig5_b")));
  CHECK(model_from_json(d.out) == dual_model(m));
}

TEST_CASE("valid-on-frame and countermodel") {
  const auto refl = temp_file("ktri_refl.json", R"({"worlds": ["a"], "rel": [["a", "a"]]})");
  CHECK(run({"valid-on-frame", "--frame", refl, "#(p|~p) |- p|~p"}).code == cli::kOk);
  const auto dead = temp_file("ktri_dead.json", R"({"worlds": ["a"], "rel": []})");
  auto inv = run({"valid-on-frame", "--frame", dead, "#p |- p"});
  CHECK(inv.code == cli::kNegative);
  CHECK(inv.out.rfind("INVALID", 0) == 0);
  CHECK(run({"valid-on-frame", "--frame", dead, "#p"}).code == cli::kOk);
  CHECK(run({"countermodel", "p |- q", "--max-worlds", "1"}).code == cli::kNegative);
  CHECK(run({"countermodel", "#p |- #~p", "--max-worlds", "2"}).code == cli::kOk);
  CHECK(run({"--bound", "2", "countermodel", "p&q |- p", "--max-worlds", "2"}).code == cli::kError);
}

TEST_CASE("definability") {
  CHECK(run({"definability", "--class", "T", "--max-size", "2"}).code == cli::kOk);
  CHECK(run({"definability", "--class", "K9"}).code == cli::kError);
  const auto file = temp_file("ktri_trans.txt", "% transitivity attempt\n#p |- ##p\n");
  auto r = run({"--json", "definability", "--property", "transitive", "--sequents", file, "--max-size", "3"});
  CHECK(r.code == cli::kNegative);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "refuted");
  CHECK(j["direction"] == "property-but-invalid");
  CHECK(run({"definability", "--property", "transitive"}).code == cli::kError);
}

TEST_CASE("separate") {
  auto r = run({"separate", "--model-a", fig("fig6_m"), "--world-a", "w0", "--model-b", fig("fig6_mprime"),
                "--world-b", "v0", "--language", "box", "--max-size", "5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("NO SEPARATING FORMULA") == 0);
  auto s = run({"separate", "--model-a", fig("fig6_m"), "--world-a", "w0", "--model-b", fig("fig6_mprime"),
                "--world-b", "v0", "--language", "tri", "--max-size", "3", "--mode", "value"});
  CHECK(s.code == cli::kNegative);
  CHECK(run({"separate", "--model-a", fig("fig6_m"), "--world-a", "w0", "--model-b", fig("fig6_mprime"),
             "--world-b", "v0", "--language", "diamond"})
            .code == cli::kError);
}

TEST_CASE("figures and usage") {
  auto f = run({"figures"});
  CHECK(f.code == cli::kOk);
  CHECK(f.out.find("FAIL") == std::string::npos);
  auto j = nlohmann::json::parse(run({"--json", "figures"}).out);
  CHECK(j.size() == run_figure_checks().size());
  CHECK(run({}).code == cli::kError);
  CHECK(run({"frobnicate"}).code == cli::kError);
  CHECK(run({"--help"}).code == cli::kOk);
}
