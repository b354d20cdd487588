#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tga/cli.hpp"

using namespace tga;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("TGA_CLI");
  REQUIRE(p != nullptr);
  return p;
}

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / "tga_cli_test";
  fs::create_directories(d);
  return d;
}

RunResult run(const std::string& args) {
  fs::path out = scratch_dir() / "out.txt";
  std::string cmd = cli_path() + " " + args + " > " + out.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = rc == -1 ? -1 : WEXITSTATUS(rc);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream f(p);
  f << content;
  return p.string();
}

}  // namespace

TEST_CASE("eval prints twelve significant digits") {
  std::string v34 = write_file(
      "v34.json", R"({"entries": {"1": 3.0, "2": 4.0}, "dim": 4})");
  RunResult r = run("eval --norm '{\"kind\":\"lp\",\"p\":2}' " + v34);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "5.00000000000\n");

  std::string b4 = write_file(
      "b4.json", R"({"entries": {"1":1, "2":1, "3":1, "4":1}, "dim": 8})");
  RunResult r2 = run("eval --preset oikhberg-small " + b4);
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == "4.00000000000\n");

  std::string zero = write_file("zero.json", R"({"entries": {}, "dim": 4})");
  RunResult r3 = run("eval --norm '{\"kind\":\"lp\",\"p\":2}' " + zero);
  CHECK(r3.exit_code == 0);
  CHECK(r3.out == "0.00000000000\n");
}

TEST_CASE("schema violations exit with the config code") {
  std::string bad = write_file("bad.json", R"({"entries": {"x": 1}, "dim": 4})");
  RunResult r = run("eval --norm '{\"kind\":\"lp\",\"p\":2}' " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("error") != std::string::npos);

  RunResult r2 = run("constants --norm '{\"kind\":\"nope\"}'");
  CHECK(r2.exit_code == 2);
}

TEST_CASE("presets list") {
  RunResult r = run("presets list");
  CHECK(r.exit_code == 0);
  for (const std::string& name : preset_names())
    CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("constants are deterministic for a fixed seed") {
  std::string args =
      "constants --norm '{\"kind\":\"lp\",\"p\":2}' --N 12 --budget 200000 "
      "--seed 99 --t 1.0";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("kind,t,value,direction,upper,search_spec") !=
        std::string::npos);

  RunResult c = run(args + " --format json");
  CHECK(c.exit_code == 0);
  json parsed = json::parse(c.out);
  CHECK(parsed.is_array());
  CHECK(parsed.size() > 0);
}

TEST_CASE("verify exit codes and report files") {
  fs::path outdir = scratch_dir() / "rep";
  std::string cfg = write_file("cfg.json", R"({
    "norm": {"kind": "lp", "p": 2},
    "N": 12, "t": [1.0], "budget": 2000000, "seed": 5,
    "checks": ["ledger"], "out": ")" + outdir.string() + R"("})");
  RunResult r = run("verify --config " + cfg);
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(outdir / "report.json"));
  std::ifstream js(outdir / "report.json");
  json rep = json::parse(js);
  CHECK(rep["all_pass"].get<bool>());

  // malformed config file
  std::string broken = write_file("broken.json", "{ not json");
  RunResult rb = run("verify --config " + broken);
  CHECK(rb.exit_code == 2);

  // N beyond the materialized sequence is a config error
  std::string toolarge = write_file("toolarge.json", R"({
    "norm": {"kind": "lacunary", "sequence": {"prefix": [1, 7, 64]},
             "k": [1, 2]},
    "N": 100})");
  RunResult rn = run("verify --config " + toolarge);
  CHECK(rn.exit_code == 2);

  // a corrupted instance (selection rule violated) surfaces the constructor
  // error as a config failure
  std::string corrupt = write_file("corrupt.json", R"({
    "norm": {"kind": "lacunary", "sequence": {"prefix": [1, 6, 64]},
             "k": [1, 2]},
    "N": 64})");
  RunResult rc = run("verify --config " + corrupt);
  CHECK(rc.exit_code == 2);
  CHECK(rc.out.find("3(j+1)") != std::string::npos);
}

TEST_CASE("growth emits the ratio table") {
  RunResult r = run("growth --preset lacunary-small --from 1 --to 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("index,kind,value") != std::string::npos);
  CHECK(r.out.find("DE_ratio") != std::string::npos);
  CHECK(r.out.find("ucc_ratio") != std::string::npos);
}

TEST_CASE("config JSON round trips through the loader") {
  std::string cfg = write_file("roundtrip.json", R"({
    "preset": "lacunary-small", "t": [0.5], "budget": 1000,
    "seed": 7, "format": "json"})");
  ExperimentConfig c = load_config(cfg);
  CHECK(c.instance.name == "lacunary-small");
  CHECK(c.ts == std::vector<double>{0.5});
  CHECK(c.budget == 1000);
  CHECK(c.seed == 7);
  CHECK(c.format == "json");
  json j = to_json(c.instance.seq);
  GapSequence s = sequence_from_json(j);
  CHECK(s.prefix() == c.instance.seq.prefix());
}
