#pragma once

// Strictly increasing integer sequences n = (n_k) and their gap structure:
// ratio gaps n_{k+1}/n_k, additive gaps n_{k+1}-n_k, and the subsequence
// selections the counterexample norms are built on. Classification is always
// a statement about the stored prefix; asymptotic claims are only made when a
// trusted generator rule is attached.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tga/core.hpp"

namespace tga {

struct SequenceRule {
  enum class Kind { geometric, arithmetic, factorial, doubly_exponential };
  Kind kind;
  long long a = 1;  // first term (geometric/arithmetic/doubly_exponential base)
  long long r = 2;  // ratio (geometric) or step (arithmetic)

  std::string name() const {
    switch (kind) {
      case Kind::geometric: return "geometric";
      case Kind::arithmetic: return "arithmetic";
      case Kind::factorial: return "factorial";
      case Kind::doubly_exponential: return "doubly-exponential";
    }
    return "?";
  }
};

class GapSequence {
 public:
  GapSequence() = default;
  explicit GapSequence(std::vector<long long> prefix,
                       std::optional<SequenceRule> rule = std::nullopt)
      : prefix_(std::move(prefix)), rule_(rule) {
    validate();
  }

  static GapSequence geometric(long long a, long long r, int count) {
    std::vector<long long> v;
    long long x = a;
    for (int k = 0; k < count; ++k, x *= r) v.push_back(x);
    return GapSequence(std::move(v), SequenceRule{SequenceRule::Kind::geometric, a, r});
  }
  static GapSequence arithmetic(long long a, long long d, int count) {
    std::vector<long long> v;
    for (int k = 0; k < count; ++k) v.push_back(a + k * d);
    return GapSequence(std::move(v), SequenceRule{SequenceRule::Kind::arithmetic, a, d});
  }
  static GapSequence factorial(int count) {
    std::vector<long long> v;
    long long x = 1;
    for (int k = 1; k <= count; ++k) { x *= k; v.push_back(x); }
    return GapSequence(std::move(v), SequenceRule{SequenceRule::Kind::factorial});
  }
  static GapSequence doubly_exponential(int count) {  // 2^(2^k), k = 0,1,...
    std::vector<long long> v;
    long long e = 1;
    for (int k = 0; k < count; ++k, e *= 2) v.push_back(1LL << e);
    return GapSequence(std::move(v),
                       SequenceRule{SequenceRule::Kind::doubly_exponential});
  }
  static GapSequence all_naturals(long long up_to) {  // n = N, truncated
    std::vector<long long> v;
    for (long long i = 1; i <= up_to; ++i) v.push_back(i);
    return GapSequence(std::move(v),
                       SequenceRule{SequenceRule::Kind::arithmetic, 1, 1});
  }

  const std::vector<long long>& prefix() const { return prefix_; }
  std::size_t size() const { return prefix_.size(); }
  long long at(int k) const {  // 1-based, matching n_k
    if (k < 1 || k > int(prefix_.size()))
      throw std::out_of_range("GapSequence: k outside prefix");
    return prefix_[std::size_t(k) - 1];
  }
  const std::optional<SequenceRule>& rule() const { return rule_; }

  bool contains(long long n) const {
    return std::binary_search(prefix_.begin(), prefix_.end(), n);
  }
  // Membership beyond the prefix, decided by the generator rule when present.
  bool contains_extended(long long n) const {
    if (n < 1) return false;
    if (n <= prefix_.back()) return contains(n);
    if (!rule_) return false;
    switch (rule_->kind) {
      case SequenceRule::Kind::geometric: {
        long long x = rule_->a;
        while (x < n) x *= rule_->r;
        return x == n;
      }
      case SequenceRule::Kind::arithmetic:
        return n >= rule_->a && (n - rule_->a) % rule_->r == 0;
      case SequenceRule::Kind::factorial: {
        long long x = 1;
        for (long long k = 2; x < n; ++k) x *= k;
        return x == n;
      }
      case SequenceRule::Kind::doubly_exponential: {
        long long e = 1;
        while (true) {
          if (e >= 63) return false;
          long long x = 1LL << e;
          if (x == n) return true;
          if (x > n) return false;
          e *= 2;
        }
      }
    }
    return false;
  }
  // Members of the sequence that fall in [1, cap]. Requires the prefix to
  // reach cap so that no member below cap is missing.
  std::vector<long long> members_up_to(long long cap) const {
    if (prefix_.empty() || prefix_.back() < cap)
      throw std::invalid_argument(
          "GapSequence: prefix does not reach the requested cap");
    std::vector<long long> out;
    for (long long n : prefix_) {
      if (n > cap) break;
      out.push_back(n);
    }
    return out;
  }

 private:
  void validate() const {
    if (prefix_.empty())
      throw std::invalid_argument("GapSequence: empty prefix");
    if (prefix_.front() < 1)
      throw std::invalid_argument("GapSequence: terms must be >= 1");
    for (std::size_t k = 1; k < prefix_.size(); ++k)
      if (prefix_[k] <= prefix_[k - 1])
        throw std::invalid_argument("GapSequence: prefix not strictly increasing");
  }

  std::vector<long long> prefix_;
  std::optional<SequenceRule> rule_;
};

struct GapClassification {
  double max_ratio = 1.0;          // max n_{k+1}/n_k over the prefix
  long long max_additive_gap = 0;  // max n_{k+1}-n_k over the prefix
  // Asymptotic claims, present only when backed by the generator rule.
  std::optional<int> l_bounded_for;
  std::optional<long long> additive_bounded_for;
  bool asymptotics_from_rule = false;
};

inline GapClassification classify(const GapSequence& seq) {
  const auto& n = seq.prefix();
  if (n.size() < 2)
    throw std::invalid_argument("classify: need a prefix of length >= 2");
  GapClassification c;
  for (std::size_t k = 1; k < n.size(); ++k) {
    c.max_ratio = std::max(c.max_ratio, double(n[k]) / double(n[k - 1]));
    c.max_additive_gap = std::max(c.max_additive_gap, n[k] - n[k - 1]);
  }
  if (seq.rule()) {
    c.asymptotics_from_rule = true;
    switch (seq.rule()->kind) {
      case SequenceRule::Kind::geometric:
        c.l_bounded_for = std::max(2, int(std::ceil(c.max_ratio - kRelTol)));
        break;
      case SequenceRule::Kind::arithmetic:
        // ratios decrease toward 1 along an arithmetic progression
        c.l_bounded_for = std::max(2, int(std::ceil(c.max_ratio - kRelTol)));
        c.additive_bounded_for = seq.rule()->r;
        break;
      case SequenceRule::Kind::factorial:
      case SequenceRule::Kind::doubly_exponential:
        break;  // arbitrarily large gaps; nothing bounded
    }
  }
  return c;
}

// Indices k_1 < k_2 < ... with strictly increasing ratios n_{k+1}/n_k.
// Returns the lexicographically earliest such selection of length `count`.
inline std::vector<int> oikhberg_subsequence(const GapSequence& seq, int count) {
  const auto& n = seq.prefix();
  if (n.size() < 2)
    throw std::invalid_argument("oikhberg_subsequence: prefix too short");
  int pairs = int(n.size()) - 1;
  std::vector<double> ratio(pairs);
  for (int k = 0; k < pairs; ++k) ratio[k] = double(n[k + 1]) / double(n[k]);

  // longest strictly increasing run starting at each position
  std::vector<int> best(pairs, 1);
  for (int k = pairs - 2; k >= 0; --k)
    for (int j = k + 1; j < pairs; ++j)
      if (ratio[j] > ratio[k]) best[k] = std::max(best[k], 1 + best[j]);

  std::vector<int> out;
  double last = 0.0;
  int from = 0;
  for (int want = count; want > 0; --want) {
    int pick = -1;
    for (int k = from; k < pairs; ++k) {
      if (ratio[k] > last && best[k] >= want) { pick = k; break; }
    }
    if (pick < 0)
      throw std::invalid_argument(
          "oikhberg_subsequence: prefix cannot supply " + std::to_string(count) +
          " strictly increasing ratios");
    out.push_back(pick + 1);  // 1-based k
    last = ratio[pick];
    from = pick + 1;
  }
  return out;
}

// Greedy earliest selection of k_1 < k_2 < ... with
// n_{k_j + 1} > threshold(j, n_{k_j}).
inline std::vector<int> fast_subsequence(
    const GapSequence& seq, int count,
    const std::function<double(int, long long)>& threshold) {
  const auto& n = seq.prefix();
  std::vector<int> out;
  int k = 1;  // 1-based
  for (int j = 1; j <= count; ++j) {
    int pick = -1;
    for (; k + 1 <= int(n.size()); ++k) {
      if (double(seq.at(k + 1)) > threshold(j, seq.at(k))) { pick = k; break; }
    }
    if (pick < 0)
      throw std::invalid_argument(
          "fast_subsequence: prefix exhausted before selecting k_" +
          std::to_string(j));
    out.push_back(pick);
    ++k;
  }
  return out;
}

// The two threshold rules the counterexamples use.
inline std::function<double(int, long long)> ratio_threshold_rule() {
  return [](int j, long long nk) { return 3.0 * (j + 1) * double(nk); };
}
inline std::function<double(int, long long)> additive_threshold_rule() {
  return [](int j, long long nk) { return double(nk) + 3.0 * std::pow(10.0, j); };
}

}  // namespace tga
