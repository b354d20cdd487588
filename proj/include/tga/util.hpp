#pragma once

// Deterministic RNG and subset enumeration helpers shared by the estimators.
// All randomness flows through Rng so that a fixed seed reproduces every
// sample, search order, and therefore every report byte-for-byte.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace tga {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0,1)
    return double(gen_() >> 11) * 0x1.0p-53;
  }
  // Box-Muller rather than std::normal_distribution: the latter is
  // implementation-defined, which would break cross-toolchain determinism.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0, u2 = 0.0;
    do { u1 = uniform(); } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(6.283185307179586476925286766559 * u2);
    have_spare_ = true;
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + int(gen_() % std::uint64_t(hi - lo + 1));
  }
  // k distinct values from [lo,hi], sorted (partial Fisher-Yates).
  std::vector<int> sample_without_replacement(int lo, int hi, int k) {
    const int n = hi - lo + 1;
    k = std::min(k, std::max(0, n));
    std::vector<int> pool(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) pool[std::size_t(i)] = lo + i;
    for (int j = 0; j < k; ++j)
      std::swap(pool[std::size_t(j)],
                pool[std::size_t(uniform_int(j, n - 1))]);
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * double(n - k + j) / double(j);
  return r;
}

// Visits every k-subset of `pool` in lexicographic order; the callback gets
// the chosen values. Returns false if the callback aborted the scan.
inline bool for_each_subset(const std::vector<int>& pool, int k,
                            const std::function<bool(const std::vector<int>&)>& fn) {
  int n = int(pool.size());
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k), chosen(k);
  for (int j = 0; j < k; ++j) idx[j] = j;
  while (true) {
    for (int j = 0; j < k; ++j) chosen[j] = pool[idx[j]];
    if (!fn(chosen)) return false;
    int j = k - 1;
    while (j >= 0 && idx[j] == n - k + j) --j;
    if (j < 0) return true;
    ++idx[j];
    for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
  }
}

}  // namespace tga
