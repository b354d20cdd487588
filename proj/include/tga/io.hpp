#pragma once

// JSON (de)serialization for the public data types, plus the norm-spec and
// experiment-config schemas the CLI consumes. Malformed input surfaces as
// ConfigError with a path-like diagnostic.

#include <json.hpp>

#include "tga/constants.hpp"
#include "tga/presets.hpp"
#include "tga/verify.hpp"

namespace tga {

using nlohmann::json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- CoeffVector: {"entries": {"1": 3.0}, "dim": N} -------------------------

inline json to_json(const CoeffVector& x) {
  json e = json::object();
  for (auto& [i, v] : x.entries()) e[std::to_string(i)] = v;
  return json{{"entries", e}, {"dim", x.dim()}};
}

inline CoeffVector coeff_vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.contains("dim"))
    throw ConfigError("vector: expected {\"entries\": {...}, \"dim\": N}");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw ConfigError("vector.dim: expected a nonnegative integer");
  CoeffVector x(Index(j["dim"].get<long long>()));
  for (auto& [key, val] : j["entries"].items()) {
    Index i = 0;
    try {
      i = Index(std::stol(key));
    } catch (...) {
      throw ConfigError("vector.entries: non-integer index '" + key + "'");
    }
    if (!val.is_number())
      throw ConfigError("vector.entries[" + key + "]: expected a number");
    try {
      x.set(i, val.get<double>());
    } catch (const std::exception& e) {
      throw ConfigError("vector.entries[" + key + "]: " + std::string(e.what()));
    }
  }
  return x;
}

// --- IndexSet / SignPattern --------------------------------------------------

inline json to_json(const IndexSet& a) {
  json out = json::array();
  for (Index i : a) out.push_back(i);
  return out;
}

inline json to_json(const SignPattern& eps) {
  json out = json::object();
  for (auto& [i, s] : eps.entries()) out[std::to_string(i)] = s;
  return out;
}

// --- GapSequence: {"prefix": [...], "rule": {...}} ---------------------------

inline json to_json(const GapSequence& s) {
  json out{{"prefix", s.prefix()}};
  if (s.rule()) {
    out["rule"] = {{"kind", s.rule()->name()},
                   {"a", s.rule()->a},
                   {"r", s.rule()->r}};
  }
  return out;
}

inline GapSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("prefix"))
    throw ConfigError("sequence: expected {\"prefix\": [...], \"rule\"?: {...}}");
  std::vector<long long> prefix;
  for (auto& v : j["prefix"]) {
    if (!v.is_number_integer())
      throw ConfigError("sequence.prefix: expected integers");
    prefix.push_back(v.get<long long>());
  }
  std::optional<SequenceRule> rule;
  if (j.contains("rule")) {
    const json& r = j["rule"];
    std::string kind = r.value("kind", "");
    SequenceRule sr;
    if (kind == "geometric") sr.kind = SequenceRule::Kind::geometric;
    else if (kind == "arithmetic") sr.kind = SequenceRule::Kind::arithmetic;
    else if (kind == "factorial") sr.kind = SequenceRule::Kind::factorial;
    else if (kind == "doubly-exponential")
      sr.kind = SequenceRule::Kind::doubly_exponential;
    else throw ConfigError("sequence.rule.kind: unknown '" + kind + "'");
    sr.a = r.value("a", 1LL);
    sr.r = r.value("r", 2LL);
    rule = sr;
  }
  try {
    return GapSequence(std::move(prefix), rule);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("sequence: ") + e.what());
  }
}

// --- norm spec ---------------------------------------------------------------
// {"preset": "name"} | "name" |
// {"kind": "lp", "p": 2} |
// {"kind": "oikhberg"|"oikhberg-unconditional", "sequence": {...}, "k": [...]} |
// {"kind": "lacunary", "sequence": {...}, "k": [...]} |
// {"kind": "mixedpq", "m":, "p":, "q":, "eps":, "delta":} |
// {"kind": "additivegap", "sequence": {...}, "k": [...], "p_exponents": [...]}

inline PresetInstance norm_from_json(const json& j) {
  try {
    if (j.is_string()) return make_preset(j.get<std::string>());
    if (!j.is_object()) throw ConfigError("norm: expected an object or string");
    if (j.contains("preset")) return make_preset(j["preset"].get<std::string>());
    std::string kind = j.value("kind", "");
    PresetInstance p;
    p.name = kind;
    if (kind == "lp") {
      double pp = j["p"].is_string() ? LpNorm::inf : j["p"].get<double>();
      p.norm = std::make_shared<LpNorm>(pp);
      p.seq = GapSequence::geometric(1, 2, 12);
      p.default_N = 16;
    } else if (kind == "oikhberg" || kind == "oikhberg-unconditional") {
      GapSequence s = sequence_from_json(j.at("sequence"));
      std::vector<int> k = j.at("k").get<std::vector<int>>();
      p.norm = std::make_shared<OikhbergNorm>(s, k, kind == "oikhberg-unconditional");
      p.seq = s;
      p.default_N = 40;
    } else if (kind == "lacunary") {
      GapSequence s = sequence_from_json(j.at("sequence"));
      std::vector<int> k = j.at("k").get<std::vector<int>>();
      p.norm = std::make_shared<LacunaryNorm>(s, k);
      p.seq = s;
      p.default_N = int(std::min<long long>(s.prefix().back(), 256));
    } else if (kind == "mixedpq") {
      auto pq = std::make_shared<MixedPQNorm>(
          j.at("m").get<long long>(), j.at("p").get<double>(),
          j.at("q").get<double>(), j.at("eps").get<double>(),
          j.value("delta", 0.5));
      p.default_N = int(std::min<long long>(pq->m() * 3, 10000));
      p.seq = pq->proposition_sequence(p.default_N);
      p.norm = pq;
    } else if (kind == "additivegap") {
      GapSequence s = sequence_from_json(j.at("sequence"));
      std::vector<int> k = j.at("k").get<std::vector<int>>();
      std::vector<double> pe = j.at("p_exponents").get<std::vector<double>>();
      p.norm = std::make_shared<AdditiveGapNorm>(s, k, pe);
      p.seq = s;
      p.default_N = int(std::min<long long>(s.prefix().back(), 512));
    } else {
      throw ConfigError("norm.kind: unknown '" + kind + "'");
    }
    return p;
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("norm: ") + e.what());
  } catch (const std::exception& e) {
    throw ConfigError(std::string("norm: ") + e.what());
  }
}

// --- estimates and reports ---------------------------------------------------

inline json to_json(const Witness& w) {
  json out;
  if (!w.x.is_zero() || w.x.dim() > 0) out["x"] = to_json(w.x);
  if (!w.A.empty()) out["A"] = to_json(w.A);
  if (!w.B.empty()) out["B"] = to_json(w.B);
  if (w.epsA.size()) out["epsA"] = to_json(w.epsA);
  if (w.epsB.size()) out["epsB"] = to_json(w.epsB);
  if (w.n) out["n"] = w.n;
  out["t"] = w.t;
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

inline json to_json(const ConstantEstimate& e) {
  json out{{"kind", kind_name(e.kind)},
           {"value", e.value},
           {"direction", to_string(e.direction)},
           {"search_spec", e.search_spec},
           {"witness", to_json(e.witness)}};
  if (e.upper) out["upper"] = *e.upper;
  return out;
}

inline json to_json(const LemmaCheck& c) {
  return json{{"id", c.id},
              {"inputs", c.inputs},
              {"lhs", c.lhs},
              {"rhs", c.rhs},
              {"lhs_dir", to_string(c.lhs_dir)},
              {"rhs_dir", to_string(c.rhs_dir)},
              {"mode", c.mode == CheckMode::proved ? "proved" : "consistency"},
              {"verdict", to_string(c.verdict)},
              {"margin", c.margin},
              {"family", c.family}};
}

inline json to_json(const VerdictReport& r) {
  json checks = json::array();
  for (auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"instance", r.instance},
              {"seed", r.seed},
              {"runtime_sec", r.runtime_sec},
              {"all_pass", r.all_pass()},
              {"checks", checks}};
}

}  // namespace tga
