#pragma once

// Named desk-scale instances used by the verification ledger, the CLI, and
// the acceptance runs. Each preset fixes the norm, the gap sequence the
// constants are restricted to, and a default truncation dimension.

#include "tga/norms.hpp"

namespace tga {

struct PresetInstance {
  std::string name;
  NormPtr norm;
  GapSequence seq;  // the sequence n the greedy constants are restricted to
  int default_N = 16;
};

inline std::vector<std::string> preset_names() {
  return {"oikhberg-small", "oikhberg-unconditional", "lacunary-small",
          "additivegap-small", "mixedpq-m4", "mixedpq-paper"};
}

inline PresetInstance make_preset(const std::string& name) {
  PresetInstance p;
  p.name = name;
  if (name == "oikhberg-small" || name == "oikhberg-unconditional") {
    // ratios 16, 81, 625 -> c = (2, 3, 5), m = (4, 153, 34450), all exact
    GapSequence n({1, 16, 17, 1377, 1378, 861250});
    p.norm = std::make_shared<OikhbergNorm>(n, std::vector<int>{1, 3, 5},
                                            name == "oikhberg-unconditional");
    p.seq = n;
    p.default_N = 40;
  } else if (name == "lacunary-small") {
    GapSequence n({1, 7, 64});
    p.norm = std::make_shared<LacunaryNorm>(n, std::vector<int>{1, 2});
    p.seq = n;
    p.default_N = 64;
  } else if (name == "additivegap-small") {
    GapSequence n({1, 32, 3200});
    p.norm = std::make_shared<AdditiveGapNorm>(
        n, std::vector<int>{1, 2}, std::vector<double>{2.0, 1.5, 4.0 / 3.0});
    p.seq = n;
    p.default_N = 332;
  } else if (name == "mixedpq-m4") {
    auto pq = std::make_shared<MixedPQNorm>(4, 3.5, 1.6, 0.5, 0.5);
    p.seq = pq->proposition_sequence(24);
    p.norm = pq;
    p.default_N = 24;
  } else if (name == "mixedpq-paper") {
    auto pq = std::make_shared<MixedPQNorm>(10000, 3.5, 1.6, 0.5, 0.5);
    if (!pq->largem_holds())
      throw std::invalid_argument("mixedpq-paper: the large-m inequality must hold");
    p.seq = pq->proposition_sequence(10000);
    p.norm = pq;
    p.default_N = 10000;
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return p;
}

}  // namespace tga
