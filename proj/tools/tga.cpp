// CLI front end: evaluate norms, estimate greedy-theoretic constants, run the
// verification ledger, and tabulate the growth ratios behind the
// counterexample constructions.

#include <CLI11.hpp>

#include "tga/cli.hpp"

namespace {

tga::ExperimentConfig build_config(const std::string& config_path,
                                   const std::string& preset,
                                   const std::string& norm_json, int N,
                                   const std::vector<double>& ts,
                                   long long budget, std::uint64_t seed,
                                   const std::string& out_dir,
                                   const std::string& format) {
  tga::ExperimentConfig cfg;
  if (!config_path.empty()) {
    cfg = tga::load_config(config_path);
  } else if (!preset.empty()) {
    cfg.instance = tga::make_preset(preset);
  } else if (!norm_json.empty()) {
    cfg.instance = tga::norm_from_json(tga::json::parse(norm_json));
  } else {
    throw tga::ConfigError("need --config, --preset, or --norm");
  }
  if (N > 0) cfg.instance.default_N = N;
  if (!ts.empty()) cfg.ts = ts;
  if (budget > 0) cfg.budget = budget;
  cfg.seed = seed;
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (!format.empty()) cfg.format = format;
  if (cfg.instance.seq.prefix().back() < cfg.instance.default_N)
    throw tga::ConfigError("sequence prefix does not reach N");
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thresholding greedy algorithm constants on sequence spaces"};
  app.require_subcommand(1);

  std::string config_path, preset, norm_json, out_dir, format, vector_path;
  int N = 0, i_lo = 1, i_hi = 2;
  long long budget = 0;
  std::uint64_t seed = 1234;
  std::vector<double> ts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "experiment config JSON file");
    cmd->add_option("--preset", preset, "named preset instance");
    cmd->add_option("--norm", norm_json, "inline norm spec JSON");
    cmd->add_option("--N", N, "truncation dimension");
    cmd->add_option("--t", ts, "weakness parameter(s), repeatable");
    cmd->add_option("--budget", budget, "enumeration budget");
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--format", format, "csv or json");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a norm on a vector");
  add_common(eval);
  eval->add_option("vector", vector_path, "JSON vector file")->required();

  CLI::App* constants =
      app.add_subcommand("constants", "estimate all greedy constants");
  add_common(constants);

  CLI::App* verify =
      app.add_subcommand("verify", "run the verification ledger");
  add_common(verify);

  CLI::App* growth =
      app.add_subcommand("growth", "tabulate counterexample growth ratios");
  add_common(growth);
  growth->add_option("--from", i_lo, "first block/step index");
  growth->add_option("--to", i_hi, "last block/step index");

  CLI::App* presets = app.add_subcommand("presets", "preset utilities");
  std::string presets_action;
  presets->add_option("action", presets_action, "list")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(presets)) {
      if (presets_action != "list") {
        std::cerr << "error: unknown presets action '" << presets_action
                  << "'\n";
        return 2;
      }
      return tga::run_presets_list(std::cout);
    }
    if (app.got_subcommand(eval)) {
      auto cfg = build_config(config_path, preset, norm_json, N, ts, budget,
                              seed, out_dir, format);
      return tga::run_eval(cfg.instance, vector_path, std::cout, std::cerr);
    }
    if (app.got_subcommand(constants)) {
      auto cfg = build_config(config_path, preset, norm_json, N, ts, budget,
                              seed, out_dir, format);
      return tga::run_constants(cfg, std::cout, std::cerr);
    }
    if (app.got_subcommand(verify)) {
      auto cfg = build_config(config_path, preset, norm_json, N, ts, budget,
                              seed, out_dir, format);
      return tga::run_verify(cfg, std::cout, std::cerr);
    }
    if (app.got_subcommand(growth)) {
      auto cfg = build_config(config_path, preset, norm_json, N, ts, budget,
                              seed, out_dir, format);
      return tga::run_growth(cfg.instance, i_lo, i_hi, std::cout, std::cerr);
    }
  } catch (const tga::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
