#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "strata/cli.hpp"

using namespace strata;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  Run r;
  r.code = cli::run(args, o, e);
  r.out = o.str();
  r.err = e.str();
  return r;
}

std::string emit(const std::string& name, int k = 0) {
  const fs::path dir = fs::temp_directory_path() / "strata_cli_tests";
  fs::create_directories(dir);
  const std::string path = (dir / (name + "_" + std::to_string(k) + ".json")).string();
  const auto r = run({"catalog", "emit", name, "--stratification", std::to_string(k), "--out", path});
  REQUIRE(r.code == 0);
  return path;
}

io::Json result_of(const Run& r) { return io::parse_json(r.out).at("result"); }

}  // namespace

TEST_CASE("catalog list and emit") {
  const auto r = run({"catalog", "list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Sigma-T3") != std::string::npos);
  const auto path = emit("T2", 1);
  const auto j = io::read_json_file(path);
  CHECK(io::filtered_from_json(j).same_filtration(catalog::get("T2").stratifications[1]));
  CHECK(run({"catalog", "emit", "Klein"}).code == cli::kUsage);
}

TEST_CASE("validate reports clauses and exit codes") {
  const auto ok = run({"validate", emit("Sigma-T2")});
  CHECK(ok.code == cli::kOk);
  CHECK(result_of(ok).at("pass") == true);
  CHECK(run({"validate", "--with-boundary", emit("I-T2")}).code == cli::kOk);
  CHECK(run({"validate", emit("I-T2")}).code == cli::kNegative);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"validate", "/nonexistent/file.json"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"classify", emit("T2"), "--class", "nope"}).code == cli::kUsage);
}

TEST_CASE("homology and intersection homology subcommands") {
  const auto h = run({"homology", emit("RP2"), "--ring", "Z"});
  CHECK(h.code == 0);
  const auto hr = result_of(h);
  const auto& groups = hr.at("groups");
  CHECK(groups.at(1).at("torsion").size() == 1);
  const auto ih = run({"ih", emit("Sigma-T3"), "--perversity", "m"});
  CHECK(ih.code == 0);
  const auto ir = result_of(ih);
  CHECK(ir.at("ring") == "Q");
  std::vector<int> r;
  for (const auto& g : ir.at("groups")) r.push_back(g.at("rank").get<int>());
  CHECK(r == std::vector<int>{1, 3, 0, 3, 1});
}

TEST_CASE("classify routes agree and negative verdicts exit with 1") {
  const auto r = run({"classify", emit("Sigma-T2"), "--class", "witt:Q", "--via", "both"});
  CHECK(r.code == cli::kNegative);
  CHECK(run({"classify", emit("Sigma-T3"), "--class", "witt:Q", "--via", "both"}).code == cli::kOk);
}

TEST_CASE("bordism and glue subcommands") {
  const fs::path dir = fs::temp_directory_path() / "strata_cli_tests";
  const auto x = emit("T2");
  const auto cyl = run({"bordism", "--cylinder", x});
  REQUIRE(cyl.code == 0);
  const std::string cpath = (dir / "cyl.json").string();
  {
    std::ofstream f(cpath);
    f << result_of(cyl).at("certificate").dump();
  }
  CHECK(run({"glue", cpath, cpath, "--along", "top=bottom"}).code == cli::kOk);
  CHECK(run({"glue", cpath, cpath, "--along", "top=top"}).code == cli::kUsage);
  CHECK(run({"bordism", "--to-intrinsic", emit("Sigma-T2", 1)}).code == cli::kOk);
  CHECK(run({"bordism", "--between", emit("Sigma-T2", 0), emit("Sigma-T2", 1)}).code == cli::kOk);
}

TEST_CASE("reports are identical across thread counts and text mirrors JSON") {
  const auto x = emit("Sigma-RP2", 1);
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"validate", x}, {"stratify", x}, {"links", x}, {"classify", x, "--class", "euler2"}}) {
    auto one = cmd, four = cmd;
    one.insert(one.begin(), {"--jobs", "1"});
    four.insert(four.begin(), {"--jobs", "4"});
    const auto a = run(one), b = run(four);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    auto text = cmd;
    text.insert(text.begin(), {"--format", "text"});
    CHECK(run(text).out == cli::render_text(io::parse_json(a.out)));
  }
}

TEST_CASE("render_text flattens nested values") {
  const auto j = io::parse_json(R"({"b":{"c":[1,2]},"a":true})");
  CHECK(cli::render_text(j) == "a = true\nb.c[0] = 1\nb.c[1] = 2\n");
}
