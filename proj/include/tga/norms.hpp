#pragma once

// Computable norms on finitely supported vectors: the l_p baselines plus the
// four counterexample families (block partial-sum norm and its unconditional
// variant, the lacunary partial-sum norm, the mixed head/tail p-q norm, and
// the additive-gap norm with sliding exponents). Each evaluator is structure
// aware: suprema over infinite set families are reduced to largest-entry
// selections, validated elsewhere against brute-force enumeration.

#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include "tga/core.hpp"
#include "tga/sequences.hpp"
#include "tga/util.hpp"

namespace tga {

struct NormInfo {
  double alpha1 = 1.0;  // sup ||e_i||   (reported as a valid upper bound)
  double alpha2 = 1.0;  // sup ||e_i^*||
  std::optional<double> schauder_K;  // basis constant when known
  bool dual_exact = false;           // exact dual norm available
  bool dominates_l2 = false;         // eval(x) >= ||x||_2
  bool sign_invariant = false;       // eval(1_{eps A}) independent of signs
};

class SpaceNorm {
 public:
  virtual ~SpaceNorm() = default;
  virtual double eval(const CoeffVector& x) const = 0;
  double operator()(const CoeffVector& x) const { return eval(x); }
  virtual NormInfo info() const = 0;
  virtual std::string describe() const = 0;
  // Exact dual norm of a finitely supported functional, when the space has one.
  virtual std::optional<double> exact_dual_norm(const CoeffVector&) const {
    return std::nullopt;
  }
  // Upper bound for sup_{|A|<=c, eps} ||1_{eps A}||, when the structure gives one.
  virtual std::optional<double> signed_indicator_upper(long long) const {
    return std::nullopt;
  }
};

using NormPtr = std::shared_ptr<const SpaceNorm>;

// ---------------------------------------------------------------------------
// l_p
// ---------------------------------------------------------------------------

class LpNorm : public SpaceNorm {
 public:
  explicit LpNorm(double p) : p_(p) {
    if (!(p >= 1.0))
      throw std::invalid_argument("LpNorm: p must be in [1, inf]");
  }
  static constexpr double inf = std::numeric_limits<double>::infinity();

  double p() const { return p_; }
  double conjugate() const {
    if (p_ == 1.0) return inf;
    if (std::isinf(p_)) return 1.0;
    return p_ / (p_ - 1.0);
  }

  double eval(const CoeffVector& x) const override {
    if (std::isinf(p_)) return x.max_abs();
    double s = 0.0;
    if (p_ == 1.0) {
      for (auto& [i, a] : x.entries()) s += std::abs(a);
      return s;
    }
    if (p_ == 2.0) {
      for (auto& [i, a] : x.entries()) s += a * a;
      return std::sqrt(s);
    }
    for (auto& [i, a] : x.entries()) s += std::pow(std::abs(a), p_);
    return std::pow(s, 1.0 / p_);
  }

  NormInfo info() const override {
    NormInfo n;
    n.schauder_K = 1.0;
    n.dual_exact = true;
    n.dominates_l2 = (p_ <= 2.0);
    n.sign_invariant = true;
    return n;
  }

  std::optional<double> exact_dual_norm(const CoeffVector& f) const override {
    return LpNorm(conjugate()).eval(f);
  }
  std::optional<double> signed_indicator_upper(long long c) const override {
    if (c <= 0) return 0.0;
    return std::isinf(p_) ? 1.0 : std::pow(double(c), 1.0 / p_);
  }

  std::string describe() const override {
    std::ostringstream os;
    if (std::isinf(p_)) os << "lp(inf)";
    else os << "lp(" << p_ << ")";
    return os.str();
  }

 private:
  double p_;
};

// ---------------------------------------------------------------------------
// Block partial-sum norm (and its absolute-sum unconditional variant):
//   ||x|| = max( ||x||_2 , sup_i (c_i/sqrt(m_i)) max_l |sum of block-i prefix| )
// built from a sequence with ratio gaps via chosen indices k_1 < k_2 < ...
// ---------------------------------------------------------------------------

class OikhbergNorm : public SpaceNorm {
 public:
  struct Block {
    double c;          // (n_{k+1}/n_k)^{1/4}
    long long m;       // floor(sqrt(n_k * n_{k+1}))
    long long offset;  // block spans [offset+1, offset+m]
  };

  OikhbergNorm(GapSequence seq, std::vector<int> k, bool absolute_sums = false)
      : seq_(std::move(seq)), k_(std::move(k)), absolute_(absolute_sums) {
    if (k_.empty()) throw std::invalid_argument("OikhbergNorm: no blocks");
    long long offset = 0;
    double prev_c = 0.0;
    for (std::size_t i = 0; i + 1 < k_.size(); ++i)
      if (k_[i + 1] <= k_[i])
        throw std::invalid_argument("OikhbergNorm: k not strictly increasing");
    for (int kk : k_) {
      long long a = seq_.at(kk), b = seq_.at(kk + 1);
      Block blk;
      blk.c = std::pow(double(b) / double(a), 0.25);
      blk.m = isqrt_floor(a * b);
      blk.offset = offset;
      if (blk.c <= prev_c)
        throw std::invalid_argument(
            "OikhbergNorm: ratios n_{k_i+1}/n_{k_i} must strictly increase");
      prev_c = blk.c;
      offset += blk.m;
      blocks_.push_back(blk);
    }
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  bool absolute_sums() const { return absolute_; }
  long long covered_dim() const {
    return blocks_.back().offset + blocks_.back().m;
  }
  IndexSet block_set(int i) const {  // 1-based block index
    const Block& b = blocks_.at(std::size_t(i) - 1);
    return IndexSet::range(Index(b.offset + 1), Index(b.offset + b.m));
  }

  double eval(const CoeffVector& x) const override {
    if (x.max_support_index() > covered_dim())
      throw std::invalid_argument(
          "OikhbergNorm: support exceeds the configured blocks");
    double l2 = 0.0;
    for (auto& [i, a] : x.entries()) l2 += a * a;
    double best = std::sqrt(l2);
    auto it = x.entries().begin();
    for (const Block& b : blocks_) {
      while (it != x.entries().end() && it->first <= b.offset) ++it;
      double run = 0.0, term = 0.0;
      auto jt = it;
      for (; jt != x.entries().end() && jt->first <= b.offset + b.m; ++jt) {
        if (absolute_) run += std::abs(jt->second);
        else { run += jt->second; term = std::max(term, std::abs(run)); }
      }
      if (absolute_) term = run;
      best = std::max(best, b.c / std::sqrt(double(b.m)) * term);
      it = jt;
    }
    return best;
  }

  NormInfo info() const override {
    NormInfo n;
    double a1 = 1.0;
    for (const Block& b : blocks_)
      a1 = std::max(a1, b.c / std::sqrt(double(b.m)));
    n.alpha1 = a1;
    n.alpha2 = 1.0;  // |x_i| <= ||x||_2 <= ||x||
    n.schauder_K = 1.0;  // monotone basis
    n.dominates_l2 = true;
    n.sign_invariant = absolute_;
    return n;
  }

  std::optional<double> signed_indicator_upper(long long c) const override {
    // Per block, any signed partial (or absolute) sum of a c-set is at most
    // min(c, m_i); the l2 part is sqrt(c).
    double best = std::sqrt(double(c));
    for (const Block& b : blocks_)
      best = std::max(best, b.c / std::sqrt(double(b.m)) *
                                double(std::min(c, b.m)));
    return best;
  }

  std::string describe() const override {
    std::ostringstream os;
    os << (absolute_ ? "oikhberg-unconditional" : "oikhberg") << "[blocks=";
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      os << (i ? "," : "") << "c" << i + 1 << "=" << blocks_[i].c;
    os << "]";
    return os.str();
  }

 private:
  static long long isqrt_floor(long long v) {
    long long r = llround(std::sqrt(double(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  }

  GapSequence seq_;
  std::vector<int> k_;
  std::vector<Block> blocks_;
  bool absolute_;
};

// ---------------------------------------------------------------------------
// Lacunary partial-sum norm:
//   ||x|| = max( ||x||_inf ,
//                sup { sum_{i in S} |a_i| : |S| in n, |S| < S } ,
//                sup_j max_{1<=l<=j n_{k_j}} |sum_{i=1}^l a_{n_{k_j}+i}| )
// with selected k_j satisfying n_{k_j+1} > 3(j+1) n_{k_j}.
// ---------------------------------------------------------------------------

class LacunaryNorm : public SpaceNorm {
 public:
  LacunaryNorm(GapSequence seq, std::vector<int> k)
      : seq_(std::move(seq)), k_(std::move(k)) {
    for (std::size_t j = 0; j < k_.size(); ++j) {
      if (j > 0 && k_[j] <= k_[j - 1])
        throw std::invalid_argument("LacunaryNorm: k not strictly increasing");
      long long nk = seq_.at(k_[j]), nk1 = seq_.at(k_[j] + 1);
      // 1-based j here is j+1: require n_{k_j+1} > 3(j+1) n_{k_j}
      if (!(double(nk1) > 3.0 * double(j + 2) * double(nk)))
        throw std::invalid_argument(
            "LacunaryNorm: n_{k_j+1} > 3(j+1) n_{k_j} violated at j=" +
            std::to_string(j + 1));
    }
  }

  const GapSequence& sequence() const { return seq_; }
  const std::vector<int>& selected() const { return k_; }
  long long window_base(int j) const { return seq_.at(k_.at(std::size_t(j) - 1)); }
  long long window_len(int j) const { return j * window_base(j); }
  // D_j = {n_{k_j}+1, ..., (j+1) n_{k_j}},  E_j = next block of the same span
  IndexSet set_D(int j) const {
    long long b = window_base(j);
    return IndexSet::range(Index(b + 1), Index((j + 1) * b));
  }
  IndexSet set_E(int j) const {
    long long b = window_base(j);
    return IndexSet::range(Index((j + 1) * b + 1), Index(2 * (j + 1) * b));
  }

  double eval(const CoeffVector& x) const override {
    long long ms = x.max_support_index();
    if (ms > seq_.prefix().back())
      throw std::invalid_argument(
          "LacunaryNorm: support exceeds the materialized sequence");
    double best = x.max_abs();

    if (!x.entries().empty()) {
      // admissible-set term: for each size s in the sequence the best S takes
      // the s largest moduli among indices > s
      std::vector<std::pair<double, Index>> by_abs;
      by_abs.reserve(x.support_size());
      for (auto& [i, a] : x.entries()) by_abs.push_back({std::abs(a), i});
      std::sort(by_abs.begin(), by_abs.end(),
                [](auto& u, auto& v) { return u.first > v.first; });
      for (long long s : seq_.prefix()) {
        if (s >= ms) break;
        double sum = 0.0;
        long long taken = 0;
        for (auto& [v, i] : by_abs) {
          if (i <= s) continue;
          sum += v;
          if (++taken == s) break;
        }
        best = std::max(best, sum);
      }
    }

    // partial-sum windows at the selected subsequence
    for (int j = 1; j <= int(k_.size()); ++j) {
      long long base = window_base(j), len = window_len(j);
      if (base + 1 > ms) continue;
      double run = 0.0, term = 0.0;
      for (auto& [i, a] : x.entries()) {
        if (i <= base) continue;
        if (i > base + len) break;
        run += a;
        term = std::max(term, std::abs(run));
      }
      best = std::max(best, term);
    }
    return best;
  }

  NormInfo info() const override {
    NormInfo n;
    n.schauder_K = 1.0;  // monotone basis
    return n;
  }

  std::optional<double> signed_indicator_upper(long long c) const override {
    double best = 1.0;
    for (long long s : seq_.prefix()) best = std::max(best, double(std::min(s, c)));
    for (int j = 1; j <= int(k_.size()); ++j)
      best = std::max(best, double(std::min(window_len(j), c)));
    return best;
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "lacunary[n=(";
    for (std::size_t i = 0; i < seq_.prefix().size(); ++i)
      os << (i ? "," : "") << seq_.prefix()[i];
    os << "),k=(";
    for (std::size_t i = 0; i < k_.size(); ++i) os << (i ? "," : "") << k_[i];
    os << ")]";
    return os.str();
  }

 private:
  GapSequence seq_;
  std::vector<int> k_;
};

// ---------------------------------------------------------------------------
// Mixed head/tail norm:
//   ||x|| = max( |sum_{i<=m} a_i| , ||head||_p , ||tail||_q )
// The defining inequalities (cond1)/(cond3)/(largem) are checked at
// construction and reported as flags; evaluation never requires them.
// ---------------------------------------------------------------------------

class MixedPQNorm : public SpaceNorm {
 public:
  MixedPQNorm(long long m, double p, double q, double eps, double delta)
      : m_(m), p_(p), q_(q), eps_(eps), delta_(delta) {
    if (m < 2 || m % 2 != 0)
      throw std::invalid_argument("MixedPQNorm: m must be a positive even integer");
    if (!(0.0 < eps && eps < 1.0 && 1.0 < q && q < p))
      throw std::invalid_argument("MixedPQNorm: need 0 < eps < 1 < q < p");
    if (!(0.0 < delta && delta < 1.0))
      throw std::invalid_argument("MixedPQNorm: need 0 < delta < 1");
    cond1_ = (1.0 - 1.0 / q_) <= (1.0 / q_ - 1.0 / (p_ + eps_)) + kRelTol;
    cond3_ = (1.0 - 1.0 / p_) >=
             (2.0 - delta_) * (1.0 / q_ - 1.0 / (p_ + eps_)) - kRelTol;
    double lhs = std::pow(double(m_), 1.0 / q_ - 1.0 / (p_ + eps_));
    double rhs = 2.0 + std::pow(2.0, 1.0 / p_) *
                           std::pow(double(m_), 1.0 / q_ - 1.0 / p_);
    largem_ = lhs > rhs;
  }

  long long m() const { return m_; }
  double p() const { return p_; }
  double q() const { return q_; }
  double eps() const { return eps_; }
  double delta() const { return delta_; }
  bool cond1_holds() const { return cond1_; }
  bool cond3_holds() const { return cond3_; }
  bool largem_holds() const { return largem_; }
  // Upper bound for the symmetry-for-largest-coefficients constant, valid
  // when (cond1) and (largem) hold.
  double slc_upper() const {
    return std::pow(double(m_), 1.0 / q_ - 1.0 / (p_ + eps_));
  }

  // n = {m} u N_{> m^q + m}, materialized up to `cap`.
  GapSequence proposition_sequence(long long cap) const {
    std::vector<long long> v{m_};
    long long thr = (long long)std::floor(std::pow(double(m_), q_) + double(m_));
    for (long long i = thr + 1; i <= cap; ++i) v.push_back(i);
    if (v.back() < cap) v.push_back(cap + 1);  // keep members_up_to(cap) legal
    return GapSequence(std::move(v));
  }

  double eval(const CoeffVector& x) const override {
    double head_sum = 0.0, head_p = 0.0, tail_q = 0.0;
    for (auto& [i, a] : x.entries()) {
      if (i <= m_) {
        head_sum += a;
        head_p += std::pow(std::abs(a), p_);
      } else {
        tail_q += std::pow(std::abs(a), q_);
      }
    }
    return std::max({std::abs(head_sum), std::pow(head_p, 1.0 / p_),
                     std::pow(tail_q, 1.0 / q_)});
  }

  NormInfo n_info() const { return info(); }
  NormInfo info() const override {
    NormInfo n;
    n.sign_invariant = false;
    return n;  // basis constant not tracked for this family
  }

  std::optional<double> signed_indicator_upper(long long c) const override {
    double head = double(std::min(c, m_));
    double tail = std::pow(double(c), 1.0 / q_);
    return std::max(head, tail);
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "mixedpq[m=" << m_ << ",p=" << p_ << ",q=" << q_ << ",eps=" << eps_
       << ",delta=" << delta_ << "]";
    return os.str();
  }

 private:
  long long m_;
  double p_, q_, eps_, delta_;
  bool cond1_, cond3_, largem_;
};

// ---------------------------------------------------------------------------
// Additive-gap norm with sliding exponents p_k -> 1:
//   ||x|| = max( ||x||_inf ,
//                sup_k ||p_k-sum over best S: |S|=10^k, n_k < S|| ,
//                sup_j ||p_{k_j+1}-sum over T_j|| ),
//   T_j = { n_{k_j}+1, ..., n_{k_j}+10^j }.
// Summing over all S in S_k diverges for any vector with tail support, so
// the family is aggregated as a sup, the form every per-set comparison uses.
// ---------------------------------------------------------------------------

class AdditiveGapNorm : public SpaceNorm {
 public:
  AdditiveGapNorm(GapSequence seq, std::vector<int> k, std::vector<double> p)
      : seq_(std::move(seq)), k_(std::move(k)), p_(std::move(p)) {
    if (p_.size() != seq_.size())
      throw std::invalid_argument(
          "AdditiveGapNorm: need one exponent per sequence prefix term");
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (!(p_[i] > 1.0))
        throw std::invalid_argument("AdditiveGapNorm: exponents must be > 1");
      if (i > 0 && !(p_[i] < p_[i - 1]))
        throw std::invalid_argument("AdditiveGapNorm: exponents must decrease");
    }
    for (std::size_t j = 0; j < k_.size(); ++j) {
      if (j > 0 && k_[j] <= k_[j - 1])
        throw std::invalid_argument("AdditiveGapNorm: k not strictly increasing");
      long long nk = seq_.at(k_[j]), nk1 = seq_.at(k_[j] + 1);
      if (!(double(nk1) > double(nk) + 3.0 * std::pow(10.0, double(j + 1))))
        throw std::invalid_argument(
            "AdditiveGapNorm: n_{k_j+1} > n_{k_j} + 3*10^j violated at j=" +
            std::to_string(j + 1));
    }
  }

  const GapSequence& sequence() const { return seq_; }
  double exponent(int k) const { return p_.at(std::size_t(k) - 1); }
  double block_exponent(int j) const {  // p_{k_j + 1}
    return exponent(k_.at(std::size_t(j) - 1) + 1);
  }
  IndexSet block_T(int j) const {
    long long base = seq_.at(k_.at(std::size_t(j) - 1));
    long long len = pow10(j);
    return IndexSet::range(Index(base + 1), Index(base + len));
  }
  IndexSet set_D(int j) const {  // the same span right after T_j
    long long base = seq_.at(k_.at(std::size_t(j) - 1));
    long long len = pow10(j);
    return IndexSet::range(Index(base + len + 1), Index(base + 2 * len));
  }
  int selected_count() const { return int(k_.size()); }
  int selected_k(int j) const { return k_.at(std::size_t(j) - 1); }

  double eval(const CoeffVector& x) const override {
    long long ms = x.max_support_index();
    if (ms > seq_.prefix().back())
      throw std::invalid_argument(
          "AdditiveGapNorm: support exceeds the materialized sequence");
    double best = x.max_abs();
    if (x.entries().empty()) return 0.0;

    std::vector<std::pair<double, Index>> by_abs;
    by_abs.reserve(x.support_size());
    for (auto& [i, a] : x.entries()) by_abs.push_back({std::abs(a), i});
    std::sort(by_abs.begin(), by_abs.end(),
              [](auto& u, auto& v) { return u.first > v.first; });

    for (int k = 1; k <= int(seq_.size()); ++k) {
      long long floor_idx = seq_.at(k);
      if (floor_idx >= ms) break;
      long long cap = pow10(k);
      double pk = exponent(k), s = 0.0;
      long long taken = 0;
      for (auto& [v, i] : by_abs) {
        if (i <= floor_idx) continue;
        s += std::pow(v, pk);
        if (++taken == cap) break;
      }
      best = std::max(best, std::pow(s, 1.0 / pk));
    }

    for (int j = 1; j <= int(k_.size()); ++j) {
      long long base = seq_.at(k_[std::size_t(j) - 1]);
      long long len = pow10(j);
      if (base + 1 > ms) continue;
      double pj = block_exponent(j), s = 0.0;
      for (auto& [i, a] : x.entries()) {
        if (i <= base) continue;
        if (i > base + len) break;
        s += std::pow(std::abs(a), pj);
      }
      best = std::max(best, std::pow(s, 1.0 / pj));
    }
    return best;
  }

  NormInfo info() const override {
    NormInfo n;
    n.schauder_K = 1.0;
    n.sign_invariant = true;  // 1-unconditional
    return n;
  }

  std::optional<double> signed_indicator_upper(long long c) const override {
    double best = 1.0;
    for (int k = 1; k <= int(seq_.size()); ++k)
      best = std::max(best, std::pow(double(std::min(pow10(k), c)),
                                     1.0 / exponent(k)));
    for (int j = 1; j <= int(k_.size()); ++j)
      best = std::max(best, std::pow(double(std::min(pow10(j), c)),
                                     1.0 / block_exponent(j)));
    return best;
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "additivegap[n=(";
    for (std::size_t i = 0; i < seq_.prefix().size(); ++i)
      os << (i ? "," : "") << seq_.prefix()[i];
    os << "),p=(";
    for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
    os << ")]";
    return os.str();
  }

  static long long pow10(int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
  }

 private:
  GapSequence seq_;
  std::vector<int> k_;
  std::vector<double> p_;
};

// ---------------------------------------------------------------------------
// Dual-norm estimation: certified lower bound via a candidate family plus
// local ascent; domination upper bounds and exact values where available.
// ---------------------------------------------------------------------------

struct DualEstimate {
  double lower = 0.0;            // sup |<f,x>| / ||x|| over the candidates
  CoeffVector witness;           // primal direction achieving `lower`
  std::optional<double> upper;   // from norm domination (l2 or linf)
  std::optional<double> exact;   // conjugate-exponent value for l_p
};

inline double pairing(const CoeffVector& f, const CoeffVector& x) {
  const CoeffVector& small = f.support_size() <= x.support_size() ? f : x;
  const CoeffVector& large = f.support_size() <= x.support_size() ? x : f;
  double s = 0.0;
  for (auto& [i, a] : small.entries()) s += a * large.at(i);
  return s;
}

inline DualEstimate dual_norm_estimate(const SpaceNorm& norm,
                                       const CoeffVector& f, Rng& rng,
                                       int n_random = 24) {
  if (f.is_zero())
    throw std::invalid_argument("dual_norm_estimate: empty candidate family "
                                "(zero functional)");
  DualEstimate est;
  auto consider = [&](const CoeffVector& x) {
    if (x.is_zero()) return;
    double nx = norm.eval(x);
    if (nx <= 0.0) return;
    double r = std::abs(pairing(f, x)) / nx;
    if (r > est.lower) { est.lower = r; est.witness = x; }
  };

  const Index dim = f.dim();
  std::vector<std::pair<double, Index>> by_abs;
  for (auto& [i, a] : f.entries()) by_abs.push_back({std::abs(a), i});
  std::sort(by_abs.begin(), by_abs.end(),
            [](auto& u, auto& v) { return u.first > v.first; });

  {  // coordinates (capped on huge supports: the leading moduli first)
    std::size_t coord_cap = std::min<std::size_t>(by_abs.size(), 512);
    for (std::size_t j = 0; j < coord_cap; ++j) {
      CoeffVector x(dim);
      x.set(by_abs[j].second, 1.0);
      consider(x);
    }
  }
  {  // sign-matched prefixes of the sorted moduli, on a doubling ladder
    std::vector<std::size_t> lens;
    for (std::size_t len = 1; len <= by_abs.size() && len <= 64; ++len)
      lens.push_back(len);
    for (std::size_t len = 128; len < by_abs.size(); len *= 2)
      lens.push_back(len);
    if (by_abs.size() > 64) lens.push_back(by_abs.size());
    CoeffVector x(dim);
    std::size_t built = 0;
    for (std::size_t len : lens) {
      for (; built < len; ++built) {
        Index i = by_abs[built].second;
        x.set(i, f.at(i) >= 0.0 ? 1.0 : -1.0);
      }
      consider(x);
    }
  }
  for (int r = 0; r < n_random; ++r) {  // random directions on supp(f)
    CoeffVector x(dim);
    for (auto& [i, a] : f.entries()) x.set(i, rng.normal());
    consider(x);
  }

  // local ascent around the best candidate, over the leading coordinates of f
  if (!est.witness.is_zero()) {
    std::vector<Index> ascent_coords;
    for (auto& [v, i] : by_abs) {
      ascent_coords.push_back(i);
      if (ascent_coords.size() >= 40) break;
    }
    double h = 0.5;
    CoeffVector cur = est.witness;
    int rounds = 0;
    while (h > 1e-4 && rounds++ < 60) {
      bool improved = false;
      for (Index i : ascent_coords) {
        for (double d : {h, -h}) {
          CoeffVector trial = cur;
          trial.set(i, trial.at(i) + d);
          double nx = trial.is_zero() ? 0.0 : norm.eval(trial);
          if (nx > 0.0 && std::abs(pairing(f, trial)) / nx > est.lower) {
            est.lower = std::abs(pairing(f, trial)) / nx;
            est.witness = trial;
            cur = trial;
            improved = true;
          }
        }
      }
      if (!improved) h *= 0.5;
    }
  }

  est.exact = norm.exact_dual_norm(f);
  if (est.exact) est.lower = std::max(est.lower, *est.exact);
  NormInfo ni = norm.info();
  if (ni.dominates_l2) est.upper = LpNorm(2.0).eval(f);
  else est.upper = LpNorm(1.0).eval(f);  // all shipped norms dominate l_inf
  if (est.exact) est.upper = *est.exact;
  return est;
}

}  // namespace tga
