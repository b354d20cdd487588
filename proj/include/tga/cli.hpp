#pragma once

// Command implementations behind the CLI front end. Each returns a process
// exit code: 0 ok, 1 check failure, 2 configuration error. Output is CSV for
// tables and JSON for witnesses and reports; all randomness is seeded, so a
// fixed (config, seed) pair reproduces output byte for byte.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "tga/io.hpp"

namespace tga {

struct ExperimentConfig {
  PresetInstance instance;
  std::vector<double> ts{1.0, 0.5};
  long long budget = 1000000;
  std::uint64_t seed = 1234;
  std::string format = "csv";  // csv | json
  std::string out_dir;         // empty: stdout only
  std::vector<std::string> checks{"all"};
};

inline ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  ExperimentConfig cfg;
  if (j.contains("norm")) cfg.instance = norm_from_json(j["norm"]);
  else if (j.contains("preset")) cfg.instance = make_preset(j["preset"].get<std::string>());
  else throw ConfigError("config: need \"norm\" or \"preset\"");
  if (j.contains("sequence")) cfg.instance.seq = sequence_from_json(j["sequence"]);
  if (j.contains("N")) {
    if (!j["N"].is_number_integer() || j["N"].get<long long>() < 1)
      throw ConfigError("config.N: expected a positive integer");
    cfg.instance.default_N = int(j["N"].get<long long>());
  }
  if (j.contains("t")) {
    cfg.ts.clear();
    for (auto& v : j["t"]) {
      double t = v.get<double>();
      if (!(t > 0.0 && t <= 1.0)) throw ConfigError("config.t: need 0 < t <= 1");
      cfg.ts.push_back(t);
    }
  }
  cfg.budget = j.value("budget", 1000000LL);
  if (cfg.budget < 1) throw ConfigError("config.budget: must be positive");
  cfg.seed = j.value("seed", 1234ULL);
  cfg.format = j.value("format", std::string("csv"));
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigError("config.format: expected \"csv\" or \"json\"");
  if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
  if (j.contains("checks"))
    cfg.checks = j["checks"].get<std::vector<std::string>>();
  // dimension sanity: every check below needs the sequence materialized to N
  if (cfg.instance.seq.prefix().back() < cfg.instance.default_N)
    throw ConfigError("config: sequence prefix does not reach N");
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  return config_from_json(j);
}

inline std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// --- eval --------------------------------------------------------------------

inline int run_eval(const PresetInstance& inst, const std::string& vector_path,
                    std::ostream& os, std::ostream& err) {
  try {
    std::ifstream in(vector_path);
    if (!in) throw ConfigError("cannot open vector file: " + vector_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ConfigError("vector parse error in " + vector_path + ": " + e.what());
    }
    CoeffVector x = coeff_vector_from_json(j);
    double v = inst.norm->eval(x);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    os << buf << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

// --- constants ---------------------------------------------------------------

// Rows that cannot be formed on an instance (no admissible set or pair in
// range) are skipped with a note; everything else is deterministic in the
// seed.
inline std::vector<ConstantEstimate> compute_constant_table(
    const ExperimentConfig& cfg, std::vector<std::string>* notes = nullptr) {
  const SpaceNorm& norm = *cfg.instance.norm;
  const GapSequence& seq = cfg.instance.seq;
  const int N = cfg.instance.default_N;
  std::vector<ConstantEstimate> rows;
  Rng rng(cfg.seed);
  auto attempt = [&](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::invalid_argument& e) {
      if (notes) notes->push_back(e.what());
    }
  };

  SampleSpec spec;
  for (double t : cfg.ts) {
    Rng r1(cfg.seed + std::uint64_t(1000 * t));
    auto qg = quasi_greedy_constant(norm, seq, N, t, spec, r1);
    qg.cq.witness.t = qg.csq.witness.t = t;
    rows.push_back(qg.cq);
    rows.push_back(qg.csq);
    Rng r2(cfg.seed + 7 + std::uint64_t(1000 * t));
    auto pg = partially_greedy_constants(norm, seq, N, t, spec, r2);
    rows.push_back(pg.cp);
    rows.push_back(pg.csp);
  }
  attempt([&] { rows.push_back(ucc_constant(norm, seq, N, cfg.budget, rng)); });
  {
    SampleSpec s2;
    s2.random_count = 120;
    rows.push_back(suppression_unconditionality_constant(norm, seq, N, s2, rng));
  }
  {
    auto [c1, c2] = ul_constants(norm, seq, N, cfg.budget, rng);
    rows.push_back(c1);
    rows.push_back(c2);
  }
  for (ConstantKind k : {ConstantKind::Delta_d, ConstantKind::Delta_s,
                         ConstantKind::Delta_c, ConstantKind::Delta_sc,
                         ConstantKind::Delta_oc, ConstantKind::Delta_osc}) {
    attempt([&] {
      DemocracyOptions opt;
      opt.max_cardinality = 16;
      rows.push_back(
          democracy_like_constant(k, norm, seq, N, cfg.budget, rng, opt));
    });
  }
  attempt([&] { rows.push_back(qglc_constant(norm, seq, N, cfg.budget, rng)); });
  attempt([&] { rows.push_back(slc_constant(norm, seq, N, cfg.budget, rng)); });
  rows.push_back(bidemocracy_constant(norm, seq, N, cfg.budget, rng));
  return rows;
}

inline void write_constants_csv(const std::vector<ConstantEstimate>& rows,
                                std::ostream& os) {
  os << "kind,t,value,direction,upper,search_spec\n";
  for (auto& e : rows) {
    os << kind_name(e.kind) << "," << format_value(e.witness.t) << ","
       << format_value(e.value) << "," << to_string(e.direction) << ","
       << (e.upper ? format_value(*e.upper) : "") << ",\"" << e.search_spec
       << "\"\n";
  }
}

inline int run_constants(const ExperimentConfig& cfg, std::ostream& os,
                         std::ostream& err) {
  try {
    std::vector<std::string> notes;
    auto rows = compute_constant_table(cfg, &notes);
    for (auto& n : notes) err << "note: skipped: " << n << "\n";
    if (cfg.format == "json") {
      json out = json::array();
      for (auto& e : rows) out.push_back(to_json(e));
      os << out.dump(2) << "\n";
    } else {
      write_constants_csv(rows, os);
    }
    if (!cfg.out_dir.empty()) {
      std::filesystem::create_directories(cfg.out_dir);
      std::ofstream csv(cfg.out_dir + "/constants.csv");
      write_constants_csv(rows, csv);
      json out = json::array();
      for (auto& e : rows) out.push_back(to_json(e));
      std::ofstream js(cfg.out_dir + "/constants.json");
      js << out.dump(2) << "\n";
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

// --- verify --------------------------------------------------------------------

inline int run_verify(const ExperimentConfig& cfg, std::ostream& os,
                      std::ostream& err) {
  try {
    auto t0 = std::chrono::steady_clock::now();
    Instance inst{cfg.instance.norm, cfg.instance.seq, cfg.instance.default_N,
                  cfg.budget, cfg.seed, cfg.instance.name};
    bool want_all = std::find(cfg.checks.begin(), cfg.checks.end(), "all") !=
                    cfg.checks.end();
    VerdictReport rep;
    rep.instance = inst.name;
    rep.seed = cfg.seed;
    bool known_preset =
        std::find(preset_names().begin(), preset_names().end(),
                  cfg.instance.name) != preset_names().end();
    bool want_examples =
        known_preset &&
        (want_all || std::find(cfg.checks.begin(), cfg.checks.end(),
                               "examples") != cfg.checks.end());
    if (want_all ||
        std::find(cfg.checks.begin(), cfg.checks.end(), "ledger") !=
            cfg.checks.end())
      rep.append(run_ledger(inst, cfg.ts, /*include_mixedpq_battery=*/
                            !want_examples));
    if (want_examples)
      rep.append(check_example_claims(cfg.instance.name,
                                      cfg.instance.default_N, cfg.budget,
                                      cfg.seed));
    rep.runtime_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rep.print_table(os);
    if (!cfg.out_dir.empty()) {
      std::filesystem::create_directories(cfg.out_dir);
      std::ofstream js(cfg.out_dir + "/report.json");
      js << to_json(rep).dump(2) << "\n";
      std::ofstream tb(cfg.out_dir + "/report.txt");
      rep.print_table(tb);
    }
    return rep.all_pass() ? 0 : 1;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

// --- growth --------------------------------------------------------------------

inline int run_growth(const PresetInstance& inst, int i_lo, int i_hi,
                      std::ostream& os, std::ostream& err) {
  try {
    auto rows = growth_table(inst, i_lo, i_hi);
    os << "index,kind,value\n";
    for (auto& r : rows)
      os << r.index << "," << r.kind << "," << format_value(r.value) << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int run_presets_list(std::ostream& os) {
  for (auto& n : preset_names()) os << n << "\n";
  return 0;
}

}  // namespace tga
