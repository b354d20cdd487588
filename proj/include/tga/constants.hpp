#pragma once

// Estimators for the greedy-theoretic constants: quasi-greedy and suppression
// constants, unconditionality for constant coefficients, the UL pair,
// democracy / superdemocracy / conservative / order-conservative families,
// symmetry for largest coefficients, quasi-greediness for largest
// coefficients, bidemocracy, and the (strong) partially greedy constants.
//
// Universally quantified constants are reported as certified LOWER bounds
// with replayable witnesses, upgraded to EXACT when the quantified family was
// fully enumerated. Upper bounds only ever come from structural domination
// (never from a truncated search) and ride along in `upper`.

#include <map>
#include <set>

#include "tga/greedy.hpp"
#include "tga/norms.hpp"
#include "tga/sequences.hpp"

namespace tga {

enum class ConstantKind {
  Cq_t, Csq_t, Cql, Ku_ucc, Ks_suppr, UL_C1, UL_C2,
  Delta_d, Delta_s, Delta_slc, Delta_b, Delta_c, Delta_sc, Delta_oc, Delta_osc,
  Cp_t, Csp_t, phi, phi_star
};

inline const char* kind_name(ConstantKind k) {
  switch (k) {
    case ConstantKind::Cq_t: return "C_q";
    case ConstantKind::Csq_t: return "C_sq";
    case ConstantKind::Cql: return "C_ql";
    case ConstantKind::Ku_ucc: return "K_u";
    case ConstantKind::Ks_suppr: return "K_s";
    case ConstantKind::UL_C1: return "C_1";
    case ConstantKind::UL_C2: return "C_2";
    case ConstantKind::Delta_d: return "Delta_d";
    case ConstantKind::Delta_s: return "Delta_s";
    case ConstantKind::Delta_slc: return "Delta";
    case ConstantKind::Delta_b: return "Delta_b";
    case ConstantKind::Delta_c: return "Delta_c";
    case ConstantKind::Delta_sc: return "Delta_sc";
    case ConstantKind::Delta_oc: return "Delta_oc";
    case ConstantKind::Delta_osc: return "Delta_osc";
    case ConstantKind::Cp_t: return "C_p";
    case ConstantKind::Csp_t: return "C_sp";
    case ConstantKind::phi: return "phi";
    case ConstantKind::phi_star: return "phi_star";
  }
  return "?";
}

struct Witness {
  CoeffVector x;     // sample / background / primal direction, kind-dependent
  IndexSet A, B;
  SignPattern epsA, epsB;
  int n = 0;         // order (m for phi / phi*, n for greedy rounds)
  double t = 1.0;
  std::string note;
};

struct ConstantEstimate {
  ConstantKind kind = ConstantKind::phi;
  double value = 0.0;
  BoundDirection direction = BoundDirection::lower;
  Witness witness;
  std::string search_spec;
  std::optional<double> upper;  // companion structural upper bound

  // Recomputes the reported value from the witness alone.
  double replay(const SpaceNorm& norm) const {
    auto ind = [&](const IndexSet& s, const SignPattern& eps) {
      return signed_indicator(s, eps, dim_hint());
    };
    switch (kind) {
      case ConstantKind::phi:
        return norm.eval(ind(witness.A, witness.epsA));
      case ConstantKind::phi_star: {
        CoeffVector f = ind(witness.B, witness.epsB);
        return std::abs(pairing(f, witness.x)) / norm.eval(witness.x);
      }
      case ConstantKind::Cq_t:
        return norm.eval(project(witness.x, witness.A)) / norm.eval(witness.x);
      case ConstantKind::Csq_t:
        return norm.eval(witness.x - project(witness.x, witness.A)) /
               norm.eval(witness.x);
      case ConstantKind::Cql: {
        CoeffVector u = ind(witness.A, witness.epsA);
        return norm.eval(u) / norm.eval(u + witness.x);
      }
      case ConstantKind::Ku_ucc:
        return norm.eval(ind(witness.A, witness.epsA)) /
               norm.eval(ind(witness.A, witness.epsB));
      case ConstantKind::Ks_suppr:
        return norm.eval(project(witness.x, witness.A)) / norm.eval(witness.x);
      case ConstantKind::UL_C1: {
        double mn = std::numeric_limits<double>::infinity();
        for (auto& [i, a] : witness.x.entries()) mn = std::min(mn, std::abs(a));
        return mn * norm.eval(indicator(witness.A, dim_hint())) /
               norm.eval(witness.x);
      }
      case ConstantKind::UL_C2: {
        double mx = witness.x.max_abs();
        return norm.eval(witness.x) /
               (mx * norm.eval(indicator(witness.A, dim_hint())));
      }
      case ConstantKind::Delta_d:
      case ConstantKind::Delta_s:
      case ConstantKind::Delta_c:
      case ConstantKind::Delta_sc:
      case ConstantKind::Delta_oc:
      case ConstantKind::Delta_osc:
        return norm.eval(ind(witness.A, witness.epsA)) /
               norm.eval(ind(witness.B, witness.epsB));
      case ConstantKind::Delta_slc:
        return norm.eval(witness.x + ind(witness.A, witness.epsA)) /
               norm.eval(witness.x + ind(witness.B, witness.epsB));
      case ConstantKind::Delta_b: {
        double phi_part = norm.eval(ind(witness.A, witness.epsA));
        CoeffVector f = ind(witness.B, witness.epsB);
        double dual_part = std::abs(pairing(f, witness.x)) / norm.eval(witness.x);
        return phi_part * dual_part / double(witness.n);
      }
      case ConstantKind::Cp_t: {
        const SpaceNorm& nm = norm;
        return nm.eval(witness.x - project(witness.x, witness.A)) /
               nm.eval(witness.x - partial_sum(witness.x, witness.n));
      }
      case ConstantKind::Csp_t: {
        double den = best_tail_error(norm, witness.x, witness.n);
        return norm.eval(witness.x - project(witness.x, witness.A)) / den;
      }
    }
    return 0.0;
  }

 private:
  Index dim_hint() const {
    Index d = witness.x.dim();
    if (!witness.A.empty()) d = std::max(d, witness.A.max());
    if (!witness.B.empty()) d = std::max(d, witness.B.max());
    return d;
  }
};

// ---------------------------------------------------------------------------
// Structured families
// ---------------------------------------------------------------------------

inline std::vector<IndexSet> structured_sets(const SpaceNorm& norm, int c,
                                             int lo, int hi, Rng& rng,
                                             int n_random = 16) {
  std::vector<IndexSet> out;
  std::set<std::vector<Index>> seen;
  const int span = hi - lo + 1;
  if (c <= 0 || c > span) return out;
  auto push = [&](std::vector<Index> v) {
    if (int(v.size()) != c) return;
    for (Index i : v)
      if (i < lo || i > hi) return;
    IndexSet s(std::move(v));
    if (int(s.size()) == c && seen.insert(s.values()).second)
      out.push_back(std::move(s));
  };
  auto run_from = [&](int start) {
    std::vector<Index> v;
    for (int i = start; i < start + c; ++i) v.push_back(i);
    push(std::move(v));
  };
  run_from(lo);                  // prefix
  run_from(hi - c + 1);          // suffix
  if (lo + 1 + c - 1 <= hi) run_from(lo + 1);
  {  // arithmetic spread
    int step = std::max(1, span / c);
    std::vector<Index> v;
    for (int i = lo; int(v.size()) < c && i <= hi; i += step) v.push_back(i);
    push(std::move(v));
  }
  if (auto* ok = dynamic_cast<const OikhbergNorm*>(&norm)) {
    for (std::size_t b = 0; b < ok->blocks().size(); ++b) {
      long long start = ok->blocks()[b].offset + 1;
      if (start >= lo && start + c - 1 <= hi) run_from(int(start));
    }
  }
  if (auto* lac = dynamic_cast<const LacunaryNorm*>(&norm)) {
    for (int j = 1; j <= int(lac->selected().size()); ++j) {
      long long start = lac->window_base(j) + 1;
      if (start >= lo && start + c - 1 <= hi) run_from(int(start));
      long long after = lac->window_base(j) + lac->window_len(j) + 1;
      if (after >= lo && after + c - 1 <= hi) run_from(int(after));
    }
  }
  if (auto* ag = dynamic_cast<const AdditiveGapNorm*>(&norm)) {
    for (int j = 1; j <= ag->selected_count(); ++j) {
      IndexSet t = ag->block_T(j);
      if (t.min() >= lo && t.min() + c - 1 <= hi) run_from(int(t.min()));
      long long after = t.max() + 1;
      if (after >= lo && after + c - 1 <= hi) run_from(int(after));
    }
  }
  for (int r = 0; r < n_random; ++r) {
    auto pick = rng.sample_without_replacement(lo, hi, c);
    push(std::vector<Index>(pick.begin(), pick.end()));
  }
  return out;
}

inline std::vector<std::uint64_t> structured_sign_masks(int c, Rng& rng,
                                                        int n_random = 8) {
  std::vector<std::uint64_t> masks{0};  // all +1
  if (c >= 2) {
    const std::uint64_t full = c >= 64 ? ~0ull : (1ull << c) - 1;
    std::uint64_t alt = 0;
    for (int j = 1; j < c && j < 64; j += 2) alt |= (1ull << j);
    masks.push_back(alt);           // + - + - ...
    masks.push_back(~alt & full);   // - + - + ...
    if (c <= 64)                    // minus tail (only representable to 64)
      masks.push_back(((1ull << (c / 2)) - 1) << (c - c / 2));
  }
  for (int r = 0; r < n_random && c < 63; ++r)
    masks.push_back(std::uint64_t(rng.uniform() * double(1ull << c)));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

// ---------------------------------------------------------------------------
// Signed-indicator scans with split-point buckets (shared by the
// democracy-like estimators)
// ---------------------------------------------------------------------------

namespace detail {

struct ScanEntry {
  double v = 0.0;
  IndexSet set;
  std::uint64_t mask = 0;
  bool valid = false;
};

struct IndicatorScan {
  bool exhaustive = false;
  int lo = 1, hi = 0, c = 0;
  ScanEntry best_max, best_min;
  // best_max_upto[s]: best max over sets with max(A) <= s;
  // best_min_after[s]: best min over sets with min(B) > s. Indexed 0..hi.
  std::vector<ScanEntry> best_max_upto, best_min_after;
};

inline IndicatorScan scan_signed_indicators(const SpaceNorm& norm, int c,
                                            int lo, int hi, bool with_signs,
                                            long long budget, Rng& rng) {
  IndicatorScan sc;
  sc.lo = lo;
  sc.hi = hi;
  sc.c = c;
  sc.best_min.v = std::numeric_limits<double>::infinity();
  if (c <= 0 || c > hi - lo + 1) return sc;
  const bool sign_invariant = norm.info().sign_invariant;
  const bool use_signs = with_signs && !sign_invariant && c >= 2;
  // global flip symmetry: fix the first sign to +1
  const double sign_count = use_signs ? std::pow(2.0, c - 1) : 1.0;
  const Index dim = hi;

  std::vector<ScanEntry> raw_max(std::size_t(hi) + 1),
      raw_min(std::size_t(hi) + 1);
  for (auto& e : raw_min) e.v = std::numeric_limits<double>::infinity();

  auto visit = [&](const IndexSet& a, std::uint64_t mask) {
    double v = norm.eval(signed_indicator(a, SignPattern::from_mask(a, mask), dim));
    auto upd_max = [&](ScanEntry& e) {
      if (!e.valid || v > e.v) { e.v = v; e.set = a; e.mask = mask; e.valid = true; }
    };
    auto upd_min = [&](ScanEntry& e) {
      if (!e.valid || v < e.v) { e.v = v; e.set = a; e.mask = mask; e.valid = true; }
    };
    upd_max(raw_max[std::size_t(a.max())]);
    upd_min(raw_min[std::size_t(a.min())]);
    upd_max(sc.best_max);
    upd_min(sc.best_min);
  };

  auto visit_all_signs = [&](const IndexSet& a) {
    if (!use_signs) {
      visit(a, 0);
      return;
    }
    for (std::uint64_t mask = 0; mask < (1ull << (c - 1)); ++mask)
      visit(a, mask << 1);  // first element keeps sign +1
  };

  double total = binomial(hi - lo + 1, c) * sign_count;
  if (total <= double(budget)) {
    sc.exhaustive = true;
    std::vector<int> pool;
    for (int i = lo; i <= hi; ++i) pool.push_back(i);
    for_each_subset(pool, c, [&](const std::vector<int>& pick) {
      visit_all_signs(IndexSet(std::vector<Index>(pick.begin(), pick.end())));
      return true;
    });
  } else {
    for (const IndexSet& a : structured_sets(norm, c, lo, hi, rng)) {
      if (use_signs)
        for (std::uint64_t m : structured_sign_masks(c, rng)) visit(a, m);
      else
        visit(a, 0);
    }
  }

  sc.best_max_upto.assign(std::size_t(hi) + 1, ScanEntry{});
  sc.best_min_after.assign(std::size_t(hi) + 1, ScanEntry{});
  sc.best_min_after.back().v = std::numeric_limits<double>::infinity();
  ScanEntry run;
  for (int s = lo; s <= hi; ++s) {
    const ScanEntry& e = raw_max[std::size_t(s)];
    if (e.valid && (!run.valid || e.v > run.v)) run = e;
    sc.best_max_upto[std::size_t(s)] = run;
  }
  ScanEntry run2;
  run2.v = std::numeric_limits<double>::infinity();
  for (int s = hi; s >= lo; --s) {
    const ScanEntry& e = raw_min[std::size_t(s)];
    if (e.valid && (!run2.valid || e.v < run2.v)) run2 = e;
    sc.best_min_after[std::size_t(s) - 1] = run2;
  }
  return sc;
}

inline SignPattern pattern_of(const ScanEntry& e) {
  return SignPattern::from_mask(e.set, e.mask);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fundamental functions
// ---------------------------------------------------------------------------

inline ConstantEstimate fundamental_function(const SpaceNorm& norm, int N,
                                             int m, long long budget,
                                             Rng& rng) {
  if (m > N) throw std::invalid_argument("fundamental_function: m > N");
  ConstantEstimate est;
  est.kind = ConstantKind::phi;
  est.witness.n = m;
  bool exhaustive = true;
  // at large m only a geometric ladder of cardinalities is probed; the sup
  // is then a lower bound regardless, and the domination hook decides exact
  std::vector<int> cards;
  if (m <= 64) {
    for (int c = 1; c <= m; ++c) cards.push_back(c);
  } else {
    for (int c = 1; c <= 64; ++c) cards.push_back(c);
    for (int c = 128; c < m; c *= 2) cards.push_back(c);
    cards.push_back(m);
    exhaustive = false;
  }
  for (int c : cards) {
    auto sc = detail::scan_signed_indicators(norm, c, 1, N, true,
                                             budget / std::max(1, int(cards.size())),
                                             rng);
    exhaustive = exhaustive && sc.exhaustive;
    if (sc.best_max.valid && sc.best_max.v > est.value) {
      est.value = sc.best_max.v;
      est.witness.A = sc.best_max.set;
      est.witness.epsA = detail::pattern_of(sc.best_max);
    }
  }
  est.direction = exhaustive ? BoundDirection::exact : BoundDirection::lower;
  if (auto up = norm.signed_indicator_upper(m)) {
    est.upper = up;
    if (approx_equal(est.value, *up)) est.direction = BoundDirection::exact;
  }
  est.search_spec = "sup ||1_{eps A}|| over |A| <= " + std::to_string(m) +
                    ", A in [1," + std::to_string(N) + "]" +
                    (exhaustive ? " (exhaustive sets+signs)" : " (structured)");
  return est;
}

inline ConstantEstimate fundamental_function_dual(const SpaceNorm& norm, int N,
                                                  int m, long long budget,
                                                  Rng& rng) {
  if (m > N) throw std::invalid_argument("fundamental_function_dual: m > N");
  ConstantEstimate est;
  est.kind = ConstantKind::phi_star;
  est.witness.n = m;
  NormInfo info = norm.info();

  // candidate dual atoms 1*_{eps A}
  std::vector<std::pair<IndexSet, std::uint64_t>> atoms;
  atoms.push_back({IndexSet::range(1, m), 0});
  for (int c = 1; c <= m && int(atoms.size()) <= 64; c = c < 64 ? c + 1 : 2 * c) {
    for (const IndexSet& a : structured_sets(norm, std::min(c, m), 1, N, rng, 4)) {
      atoms.push_back({a, 0});
      if (c >= 2 && c <= 62 && !info.sign_invariant) {
        for (std::uint64_t mask : structured_sign_masks(c, rng, 2))
          atoms.push_back({a, mask});
      }
      if (int(atoms.size()) > 64) break;
    }
  }

  double global_upper = 0.0;
  for (auto& [a, mask] : atoms) {
    CoeffVector f = signed_indicator(a, SignPattern::from_mask(a, mask), N);
    DualEstimate de = dual_norm_estimate(norm, f, rng);
    if (de.lower > est.value) {
      est.value = de.lower;
      est.witness.B = a;
      est.witness.epsB = SignPattern::from_mask(a, mask);
      est.witness.x = de.witness;
    }
  }
  if (info.dual_exact) {
    est.direction = BoundDirection::exact;
    est.upper = est.value;
  } else {
    est.direction = BoundDirection::lower;
    // ||x|| >= ||x||_2 gives ||f||* <= ||f||_2 <= sqrt(m); otherwise the
    // sup-norm domination gives ||f||* <= ||f||_1 <= m.
    global_upper = info.dominates_l2 ? std::sqrt(double(m)) : double(m);
    est.upper = global_upper;
    if (approx_equal(est.value, global_upper))
      est.direction = BoundDirection::exact;
  }
  est.search_spec =
      "sup ||1*_{eps A}|| over |A| <= " + std::to_string(m) +
      " via pairing lower bounds" +
      (info.dual_exact ? " (exact conjugate norm)" : " (bracketed)");
  (void)budget;
  return est;
}

// ---------------------------------------------------------------------------
// Democracy-like constants
// ---------------------------------------------------------------------------

struct DemocracyOptions {
  int max_cardinality = 12;       // cap on |A| = |B| for the order-* kinds
  int range_cap = 64;             // denominator window (n, n+range_cap]
  bool equal_cardinality = false; // restrict |A| = |B| (chain-test families)
  int set_range = 0;              // 0 = use N
};

inline ConstantEstimate democracy_like_constant(ConstantKind kind,
                                                const SpaceNorm& norm,
                                                const GapSequence& seq, int N,
                                                long long budget, Rng& rng,
                                                DemocracyOptions opt = {}) {
  const bool with_signs = kind == ConstantKind::Delta_s ||
                          kind == ConstantKind::Delta_sc ||
                          kind == ConstantKind::Delta_osc;
  const bool order_kind =
      kind == ConstantKind::Delta_oc || kind == ConstantKind::Delta_osc;
  const bool before_kind =
      kind == ConstantKind::Delta_c || kind == ConstantKind::Delta_sc;
  const int range = opt.set_range > 0 ? opt.set_range : N;

  ConstantEstimate est;
  est.kind = kind;
  est.value = 0.0;
  bool exhaustive = true;
  bool any = false;

  auto consider = [&](const detail::ScanEntry& num, const detail::ScanEntry& den,
                      int order_n) {
    if (!num.valid || !den.valid || !(den.v > 0.0)) return;
    double r = num.v / den.v;
    any = true;
    if (r > est.value) {
      est.value = r;
      est.witness.A = num.set;
      est.witness.epsA = detail::pattern_of(num);
      est.witness.B = den.set;
      est.witness.epsB = detail::pattern_of(den);
      est.witness.n = order_n;
    }
  };

  if (order_kind) {
    // |A| = |B| arbitrary; A <= n < B for some sequence member n
    auto members = seq.members_up_to(std::min<long long>(range, seq.prefix().back()));
    for (long long n : members) {
      if (n >= range) continue;
      int den_hi = int(std::min<long long>(range, n + opt.range_cap));
      for (int c = 1; c <= opt.max_cardinality; ++c) {
        if (c > n || c > den_hi - n) continue;
        auto num = detail::scan_signed_indicators(norm, c, 1, int(n),
                                                  with_signs, budget, rng);
        auto den = detail::scan_signed_indicators(norm, c, int(n) + 1, den_hi,
                                                  with_signs, budget, rng);
        exhaustive = exhaustive && num.exhaustive && den.exhaustive;
        consider(num.best_max, den.best_min, int(n));
      }
    }
    est.search_spec = "pairs |A|=|B|<=" + std::to_string(opt.max_cardinality) +
                      ", A<=n<B, n in sequence, B within (n, n+" +
                      std::to_string(opt.range_cap) + "]";
  } else {
    auto members = seq.members_up_to(std::min<long long>(range, seq.prefix().back()));
    std::map<int, detail::IndicatorScan> scans;
    auto scan_of = [&](int c) -> detail::IndicatorScan& {
      auto it = scans.find(c);
      if (it == scans.end())
        it = scans.emplace(c, detail::scan_signed_indicators(
                                  norm, c, 1, range, with_signs, budget, rng))
                 .first;
      return it->second;
    };
    for (long long ca : members) {
      if (ca > opt.max_cardinality || ca > range) continue;
      for (long long cb : members) {
        if (cb < ca || cb > opt.max_cardinality || cb > range) continue;
        if (opt.equal_cardinality && cb != ca) continue;
        auto& num = scan_of(int(ca));
        auto& den = scan_of(int(cb));
        exhaustive = exhaustive && num.exhaustive && den.exhaustive;
        if (before_kind) {
          for (int s = 1; s < range; ++s)
            consider(num.best_max_upto[std::size_t(s)],
                     den.best_min_after[std::size_t(s)], 0);
        } else {
          consider(num.best_max, den.best_min, 0);
        }
      }
    }
    est.search_spec = std::string("pairs |A|") +
                      (opt.equal_cardinality ? "=" : "<=") +
                      "|B| in sequence, cardinality <= " +
                      std::to_string(opt.max_cardinality) +
                      (before_kind ? ", A<B" : "") + ", sets in [1," +
                      std::to_string(range) + "]";
  }
  if (!any) throw std::invalid_argument(
      "democracy_like_constant: no admissible pair in range");
  est.direction = exhaustive ? BoundDirection::exact : BoundDirection::lower;
  est.search_spec += exhaustive ? " (exhaustive)" : " (structured families)";
  return est;
}

// ---------------------------------------------------------------------------
// Unconditionality for constant coefficients
// ---------------------------------------------------------------------------

inline ConstantEstimate ucc_constant(const SpaceNorm& norm,
                                     const GapSequence& seq, int N,
                                     long long budget, Rng& rng,
                                     int max_cardinality = 64) {
  ConstantEstimate est;
  est.kind = ConstantKind::Ku_ucc;
  est.value = 0.0;
  bool exhaustive = true;
  const Index dim = N;
  auto members = seq.members_up_to(std::min<long long>(N, seq.prefix().back()));

  auto visit_set = [&](const IndexSet& a,
                       const std::vector<std::uint64_t>& masks) {
    double vmax = 0.0, vmin = std::numeric_limits<double>::infinity();
    std::uint64_t amax = 0, amin = 0;
    for (std::uint64_t m : masks) {
      double v = norm.eval(signed_indicator(a, SignPattern::from_mask(a, m), dim));
      if (v > vmax) { vmax = v; amax = m; }
      if (v < vmin) { vmin = v; amin = m; }
    }
    if (vmin > 0.0 && vmax / vmin > est.value) {
      est.value = vmax / vmin;
      est.witness.A = a;
      est.witness.epsA = SignPattern::from_mask(a, amax);
      est.witness.epsB = SignPattern::from_mask(a, amin);
    }
  };

  for (long long cl : members) {
    if (cl > N || cl > max_cardinality) continue;  // outside the stated family
    int c = int(cl);
    if (norm.info().sign_invariant || c == 1) {
      // the ratio is identically 1; record a trivial witness
      IndexSet a = IndexSet::range(1, c);
      visit_set(a, {0});
      continue;
    }
    double total = binomial(N, c) * std::pow(2.0, std::max(0, c - 1));
    if (total <= double(budget) && c <= 24) {
      std::vector<std::uint64_t> masks;
      for (std::uint64_t m = 0; m < (1ull << std::max(0, c - 1)); ++m)
        masks.push_back(m << 1);
      std::vector<int> pool;
      for (int i = 1; i <= N; ++i) pool.push_back(i);
      for_each_subset(pool, c, [&](const std::vector<int>& pick) {
        visit_set(IndexSet(std::vector<Index>(pick.begin(), pick.end())), masks);
        return true;
      });
    } else {
      exhaustive = false;
      auto masks = structured_sign_masks(std::min(c, 64), rng);
      for (const IndexSet& a : structured_sets(norm, c, 1, N, rng))
        visit_set(a, masks);
    }
  }
  if (est.value == 0.0)
    throw std::invalid_argument("ucc_constant: no admissible set in range");
  est.direction = exhaustive ? BoundDirection::exact : BoundDirection::lower;
  est.search_spec = "sup over |A| in sequence (cardinality <= " +
                    std::to_string(max_cardinality) + "), sign pairs" +
                    std::string(exhaustive ? " (exhaustive)" : " (structured)");
  return est;
}

// ---------------------------------------------------------------------------
// UL property constants
// ---------------------------------------------------------------------------

inline std::pair<ConstantEstimate, ConstantEstimate> ul_constants(
    const SpaceNorm& norm, const GapSequence& seq, int N, long long budget,
    Rng& rng, std::vector<double> grid = {1.0, -1.0, 0.5, -0.5, 0.25, -0.25},
    int n_random = 32) {
  ConstantEstimate c1, c2;
  c1.kind = ConstantKind::UL_C1;
  c2.kind = ConstantKind::UL_C2;
  c1.value = c2.value = 0.0;
  c1.direction = c2.direction = BoundDirection::lower;
  const Index dim = N;
  auto members = seq.members_up_to(std::min<long long>(N, seq.prefix().back()));

  auto visit = [&](const IndexSet& a, const std::vector<double>& coef) {
    CoeffVector x(dim);
    std::size_t j = 0;
    double mn = std::numeric_limits<double>::infinity(), mx = 0.0;
    for (Index i : a) {
      double v = coef[j++];
      x.set(i, v);
      mn = std::min(mn, std::abs(v));
      mx = std::max(mx, std::abs(v));
    }
    if (x.is_zero()) return;
    double nx = norm.eval(x);
    double ni = norm.eval(indicator(a, dim));
    double r1 = mn * ni / nx;
    double r2 = nx / (mx * ni);
    if (r1 > c1.value) { c1.value = r1; c1.witness.x = x; c1.witness.A = a; }
    if (r2 > c2.value) { c2.value = r2; c2.witness.x = x; c2.witness.A = a; }
  };

  for (long long cl : members) {
    if (cl > N) continue;
    int c = int(cl);
    std::vector<IndexSet> sets = structured_sets(norm, c, 1, N, rng, 8);
    for (const IndexSet& a : sets) {
      // grid assignments, exhaustively when small
      if (std::pow(double(grid.size()), c) * double(sets.size()) <=
          double(budget)) {
        std::vector<std::size_t> digit(std::size_t(c), 0);
        while (true) {
          std::vector<double> coef(std::size_t(c), 0.0);
          for (int j = 0; j < c; ++j) coef[std::size_t(j)] = grid[digit[std::size_t(j)]];
          visit(a, coef);
          int j = 0;
          while (j < c && ++digit[std::size_t(j)] == grid.size()) {
            digit[std::size_t(j)] = 0;
            ++j;
          }
          if (j == c) break;
        }
      } else {
        visit(a, std::vector<double>(std::size_t(c), 1.0));
        for (int r = 0; r < n_random; ++r) {
          std::vector<double> coef(std::size_t(c), 0.0);
          for (double& v : coef)
            v = grid[std::size_t(rng.uniform_int(0, int(grid.size()) - 1))];
          visit(a, coef);
        }
      }
    }
  }
  std::string spec = "sets |A| in sequence, coefficients from the grid";
  c1.search_spec = c2.search_spec = spec;
  return {c1, c2};
}

// ---------------------------------------------------------------------------
// Sample families for the greedy-sum constants
// ---------------------------------------------------------------------------

struct TaggedSample {
  CoeffVector x;
  std::vector<IndexSet> forced_sets;  // candidate greedy sets to try as-is
};

struct SampleSpec {
  int random_count = 200;
  int max_support = 24;
  bool include_combs = true;
  int indicator_cardinality_cap = 64;
};

inline std::vector<TaggedSample> sample_vectors(const SpaceNorm& norm,
                                                const GapSequence& seq, int N,
                                                const SampleSpec& spec,
                                                Rng& rng) {
  std::vector<TaggedSample> out;
  const Index dim = N;

  // signed indicators over structured sets
  std::vector<long long> cards;
  for (long long n : seq.prefix()) {
    if (n > std::min<long long>(N, spec.indicator_cardinality_cap)) break;
    cards.push_back(n);
  }
  if (cards.empty() || cards.front() != 1) cards.insert(cards.begin(), 1);
  for (long long cl : cards) {
    int c = int(cl);
    for (const IndexSet& a : structured_sets(norm, c, 1, N, rng, 2)) {
      out.push_back({indicator(a, dim), {}});
      if (c >= 2)
        out.push_back(
            {signed_indicator(a, SignPattern::alternating(a), dim), {}});
    }
  }

  // geometric decays (distinct moduli: unique greedy sets)
  for (double r : {0.5, 0.9}) {
    CoeffVector x(dim);
    double v = 1.0;
    for (Index i = 1; i <= std::min(N, 20); ++i, v *= r) x.set(i, v);
    out.push_back({x, {}});
  }

  // two-block combs: a dense constant run next to an alternating run, the
  // extremal shape for every counterexample family
  if (spec.include_combs) {
    auto add_comb = [&](Index base, long long half, Index comb_dim) {
      if (half < 1) return;
      CoeffVector x(comb_dim);
      std::vector<Index> plus;
      for (long long j = 0; j < 2 * half; ++j) {
        Index i = base + Index(j) + 1;
        if (i > comb_dim) return;
        x.set(i, j % 2 == 0 ? 1.0 : -1.0);
        if (j % 2 == 0) plus.push_back(i);
      }
      TaggedSample s{x, {IndexSet(plus)}};
      out.push_back(std::move(s));
    };
    if (auto* ok = dynamic_cast<const OikhbergNorm*>(&norm)) {
      for (auto& b : ok->blocks())
        add_comb(Index(b.offset), std::min<long long>(b.m / 2, 12500),
                 Index(ok->covered_dim()));
    } else if (auto* lac = dynamic_cast<const LacunaryNorm*>(&norm)) {
      for (int j = 1; j <= int(lac->selected().size()); ++j)
        add_comb(Index(lac->window_base(j)),
                 std::min<long long>(lac->window_len(j) / 2, 256), dim);
    } else {
      add_comb(0, std::min<long long>(N / 2, 16), dim);
      add_comb(N / 2, std::min<long long>(N / 4, 8), dim);
    }
    // constant head + slightly smaller alternating tail
    for (long long n : cards) {
      if (2 * n + n > N) break;
      CoeffVector x(dim);
      for (Index i = 1; i <= Index(n); ++i) x.set(i, 1.0);
      for (Index j = 0; j < Index(2 * n) && Index(n) + j + 1 <= N; ++j)
        x.set(Index(n) + j + 1, (j % 2 == 0 ? 0.75 : -0.75));
      out.push_back({x, {}});
    }
  }

  // random vectors: gaussian coefficients on random supports
  for (int r = 0; r < spec.random_count; ++r) {
    int s = rng.uniform_int(1, std::min(N, spec.max_support));
    auto pick = rng.sample_without_replacement(1, N, s);
    CoeffVector x(dim);
    for (int i : pick) {
      double v = rng.normal();
      if (v == 0.0) v = 0.5;
      x.set(i, v);
    }
    if (!x.is_zero()) out.push_back({x, {}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quasi-greedy and partially greedy constants (sampled lower bounds)
// ---------------------------------------------------------------------------

namespace detail {

// admissible greedy orders to test for a given sample
inline std::vector<int> orders_for(const GapSequence& seq, const CoeffVector& x,
                                   int order_cap) {
  std::vector<int> orders;
  long long cap =
      std::min<long long>({static_cast<long long>(x.dim()),
                           seq.prefix().back(),
                           static_cast<long long>(order_cap)});
  for (long long n : seq.prefix()) {
    if (n > cap) break;
    orders.push_back(int(n));
  }
  return orders;
}

}  // namespace detail

struct QuasiGreedyResult {
  ConstantEstimate cq, csq;
};

inline QuasiGreedyResult quasi_greedy_constant(const SpaceNorm& norm,
                                               const GapSequence& seq, int N,
                                               double t, const SampleSpec& spec,
                                               Rng& rng, int order_cap = 64,
                                               std::size_t set_budget = 48) {
  QuasiGreedyResult res;
  res.cq.kind = ConstantKind::Cq_t;
  res.csq.kind = ConstantKind::Csq_t;
  res.cq.witness.t = res.csq.witness.t = t;

  auto samples = sample_vectors(norm, seq, N, spec, rng);
  for (const TaggedSample& smp : samples) {
    const CoeffVector& x = smp.x;
    double nx = norm.eval(x);
    if (!(nx > 0.0)) continue;
    std::vector<std::pair<int, IndexSet>> tries;
    for (const IndexSet& f : smp.forced_sets)
      if (seq.contains_extended(static_cast<long long>(f.size())))
        tries.push_back({int(f.size()), f});
    for (int n : detail::orders_for(seq, x, order_cap)) {
      std::size_t budget = x.support_size() > 512 ? 8 : set_budget;
      for (IndexSet& a : greedy_set_candidates(x, n, t, budget))
        tries.push_back({n, std::move(a)});
    }
    for (auto& [n, a] : tries) {
      if (!is_t_greedy_set(x, a, t)) continue;
      CoeffVector g = project(x, a);
      double rq = norm.eval(g) / nx;
      double rsq = norm.eval(x - g) / nx;
      if (rq > res.cq.value) {
        res.cq.value = rq;
        res.cq.witness.x = x;
        res.cq.witness.A = a;
        res.cq.witness.n = n;
      }
      if (rsq > res.csq.value) {
        res.csq.value = rsq;
        res.csq.witness.x = x;
        res.csq.witness.A = a;
        res.csq.witness.n = n;
      }
    }
  }
  res.cq.direction = res.csq.direction = BoundDirection::lower;
  res.cq.search_spec = res.csq.search_spec =
      "structured + comb + random samples, all admissible greedy sets "
      "(budgeted), orders in the sequence";
  return res;
}

struct PartiallyGreedyResult {
  ConstantEstimate cp, csp;
  bool unbounded_witness = false;  // nonzero numerator over zero denominator
};

inline PartiallyGreedyResult partially_greedy_constants(
    const SpaceNorm& norm, const GapSequence& seq, int N, double t,
    const SampleSpec& spec, Rng& rng, int order_cap = 64,
    std::size_t set_budget = 48) {
  PartiallyGreedyResult res;
  res.cp.kind = ConstantKind::Cp_t;
  res.csp.kind = ConstantKind::Csp_t;
  res.cp.witness.t = res.csp.witness.t = t;

  auto samples = sample_vectors(norm, seq, N, spec, rng);

  // order-conservative witnesses x = 1_{eps A} + 1_D + 1_{eps' B} with
  // D = [1,n] \ A and B beyond n; the set B u D is an n-greedy set and the
  // ratio reproduces ||1_{eps A}|| / ||1_{eps' B}|| exactly.
  for (long long n : detail::orders_for(seq, CoeffVector(N), order_cap)) {
    for (int c = 1; c <= int(std::min<long long>({n, 6, N - n})); ++c) {
      auto as = structured_sets(norm, c, 1, int(n), rng, 2);
      auto bs = structured_sets(norm, c, int(n) + 1, N, rng, 2);
      for (std::size_t ia = 0; ia < as.size(); ++ia)
        for (std::size_t ib = 0; ib < bs.size(); ++ib) {
          for (bool alt : {false, true}) {
            const IndexSet& A = as[ia];
            const IndexSet& B = bs[ib];
            SignPattern ea = alt ? SignPattern::alternating(A)
                                 : SignPattern::constant(A);
            SignPattern eb = alt ? SignPattern::alternating(B)
                                 : SignPattern::constant(B);
            CoeffVector x = signed_indicator(A, ea, N);
            IndexSet D = IndexSet::range(1, int(n)).minus(A);
            x += indicator(D, N);
            x += signed_indicator(B, eb, N);
            samples.push_back({x, {B.unite(D)}});
          }
        }
    }
  }

  for (const TaggedSample& smp : samples) {
    const CoeffVector& x = smp.x;
    std::vector<std::pair<int, IndexSet>> tries;
    for (const IndexSet& f : smp.forced_sets)
      if (seq.contains_extended(static_cast<long long>(f.size())))
        tries.push_back({int(f.size()), f});
    for (int n : detail::orders_for(seq, x, order_cap)) {
      std::size_t budget = x.support_size() > 512 ? 8 : set_budget;
      for (IndexSet& a : greedy_set_candidates(x, n, t, budget))
        tries.push_back({n, std::move(a)});
    }
    for (auto& [n, a] : tries) {
      if (n > x.dim() || !is_t_greedy_set(x, a, t)) continue;
      double num = norm.eval(x - project(x, a));
      double tail = tail_error(norm, x, n);
      double btail = best_tail_error(norm, x, n);
      if (tail <= 0.0 || btail <= 0.0) {
        if (num > 1e-12) res.unbounded_witness = true;
        continue;  // 0/0 skipped
      }
      if (num / tail > res.cp.value) {
        res.cp.value = num / tail;
        res.cp.witness.x = x;
        res.cp.witness.A = a;
        res.cp.witness.n = n;
      }
      if (num / btail > res.csp.value) {
        res.csp.value = num / btail;
        res.csp.witness.x = x;
        res.csp.witness.A = a;
        res.csp.witness.n = n;
      }
    }
  }
  res.cp.direction = res.csp.direction = BoundDirection::lower;
  res.cp.search_spec = res.csp.search_spec =
      "samples + order-conservative witnesses, all admissible greedy sets "
      "(budgeted), orders in the sequence";
  return res;
}

// ---------------------------------------------------------------------------
// Suppression unconditionality
// ---------------------------------------------------------------------------

inline ConstantEstimate suppression_unconditionality_constant(
    const SpaceNorm& norm, const GapSequence& seq, int N,
    const SampleSpec& spec, Rng& rng, long long subset_budget = 4096) {
  ConstantEstimate est;
  est.kind = ConstantKind::Ks_suppr;
  est.value = 0.0;
  auto samples = sample_vectors(norm, seq, N, spec, rng);
  auto members = seq.members_up_to(std::min<long long>(N, seq.prefix().back()));

  for (const TaggedSample& smp : samples) {
    const CoeffVector& x = smp.x;
    double nx = norm.eval(x);
    if (!(nx > 0.0)) continue;
    const auto supp = x.support();
    const int s = int(supp.size());
    const long long free = static_cast<long long>(x.dim()) - s;
    // padding cardinalities may use the full dimension of the sample, which
    // for the comb vectors extends past N
    auto sample_members = seq.members_up_to(
        std::min<long long>(x.dim(), seq.prefix().back()));

    auto feasible = [&](int size) {  // can pad to some member cardinality?
      for (long long n : sample_members)
        if (n >= size && n - size <= free && n <= x.dim()) return true;
      return seq.contains_extended(size) && size <= x.dim();
    };
    auto consider = [&](const IndexSet& a) {
      if (a.empty() || !feasible(int(a.size()))) return;
      double r = norm.eval(project(x, a)) / nx;
      if (r > est.value) {
        est.value = r;
        est.witness.x = x;
        est.witness.A = a;
      }
    };

    // structured support subsets
    consider(supp);
    {
      std::vector<Index> plus, minus, half1, half2, evens;
      int j = 0;
      for (auto& [i, v] : x.entries()) {
        (v > 0 ? plus : minus).push_back(i);
        (j < s / 2 ? half1 : half2).push_back(i);
        if (j % 2 == 0) evens.push_back(i);
        ++j;
      }
      for (auto& v : {plus, minus, half1, half2, evens})
        consider(IndexSet(std::vector<Index>(v)));
    }
    // exhaustive over small supports
    double total = std::pow(2.0, s);
    if (total <= double(subset_budget)) {
      const auto& sv = supp.values();
      for (std::uint64_t mask = 1; mask < (1ull << s); ++mask) {
        std::vector<Index> v;
        for (int b = 0; b < s; ++b)
          if (mask & (1ull << b)) v.push_back(sv[std::size_t(b)]);
        consider(IndexSet(std::move(v)));
      }
    } else {
      for (int r = 0; r < 24; ++r) {
        int k = rng.uniform_int(1, s);
        auto pick = rng.sample_without_replacement(0, s - 1, k);
        std::vector<Index> v;
        for (int p : pick) v.push_back(supp.values()[std::size_t(p)]);
        consider(IndexSet(std::move(v)));
      }
    }
  }
  est.direction = BoundDirection::lower;
  est.search_spec =
      "samples x, subsets A of supp(x) paddable to a sequence cardinality";
  return est;
}

// ---------------------------------------------------------------------------
// Quasi-greediness for largest coefficients, and symmetry for largest
// coefficients, over explicit perturbation grids
// ---------------------------------------------------------------------------

struct PerturbationGrid {
  std::vector<double> values{-1.0, -0.5, 0.0, 0.5, 1.0};
  int indices = 4;  // perturbations live on the lowest free indices
  long long budget = 2000000;
};

namespace detail {

// Enumerates grid backgrounds on the `g.indices` lowest indices of [1,N]
// outside `excluded`, ordered by the number of nonzero entries.
inline std::vector<CoeffVector> grid_backgrounds(const PerturbationGrid& g,
                                                 const IndexSet& excluded,
                                                 Index dim, long long cap) {
  std::vector<Index> free;
  for (Index i = 1; i <= dim && int(free.size()) < g.indices; ++i)
    if (!excluded.contains(i)) free.push_back(i);
  std::vector<CoeffVector> out;
  const int k = int(free.size());
  std::vector<std::size_t> digit(std::size_t(k), 0);
  std::vector<std::pair<int, CoeffVector>> staged;
  while (true) {
    CoeffVector x(dim);
    int nnz = 0;
    for (int j = 0; j < k; ++j) {
      double v = g.values[digit[std::size_t(j)]];
      if (v != 0.0) { x.set(free[std::size_t(j)], v); ++nnz; }
    }
    staged.push_back({nnz, x});
    int j = 0;
    while (j < k && ++digit[std::size_t(j)] == g.values.size()) {
      digit[std::size_t(j)] = 0;
      ++j;
    }
    if (j == k) break;
  }
  std::stable_sort(staged.begin(), staged.end(),
                   [](auto& u, auto& v) { return u.first < v.first; });
  for (auto& [nnz, x] : staged) {
    out.push_back(std::move(x));
    if (static_cast<long long>(out.size()) >= cap) break;
  }
  return out;
}

}  // namespace detail

inline ConstantEstimate qglc_constant(const SpaceNorm& norm,
                                      const GapSequence& seq, int N,
                                      long long budget, Rng& rng,
                                      PerturbationGrid grid = {},
                                      int max_cardinality = 12,
                                      int set_range = 0) {
  ConstantEstimate est;
  est.kind = ConstantKind::Cql;
  est.value = 0.0;
  const int range = set_range > 0 ? set_range : N;
  const Index dim = N;
  bool exhaustive = true;
  auto members = seq.members_up_to(std::min<long long>(range, seq.prefix().back()));
  long long used = 0;

  const double bg_count = std::min(
      std::pow(double(grid.values.size()), grid.indices), double(grid.budget));
  for (long long cl : members) {
    if (cl > max_cardinality || cl > range) continue;  // outside the family
    int c = int(cl);
    double set_count = binomial(range, c) * std::pow(2.0, std::max(0, c - 1));
    std::vector<IndexSet> sets;
    bool sets_exhaustive = set_count * bg_count <= double(budget);
    if (sets_exhaustive) {
      std::vector<int> pool;
      for (int i = 1; i <= range; ++i) pool.push_back(i);
      for_each_subset(pool, c, [&](const std::vector<int>& pick) {
        sets.push_back(IndexSet(std::vector<Index>(pick.begin(), pick.end())));
        return true;
      });
    } else {
      sets = structured_sets(norm, c, 1, range, rng);
      exhaustive = false;
    }
    for (const IndexSet& a : sets) {
      auto bgs = detail::grid_backgrounds(grid, a, dim,
                                          std::max<long long>(1, grid.budget));
      std::uint64_t mask_hi = c >= 2 ? (1ull << (c - 1)) : 1;
      for (std::uint64_t mask = 0; mask < mask_hi; ++mask) {
        CoeffVector u = signed_indicator(a, SignPattern::from_mask(a, mask << 1), dim);
        double nu = norm.eval(u);
        for (const CoeffVector& x : bgs) {
          ++used;
          double r = nu / norm.eval(u + x);
          if (r > est.value) {
            est.value = r;
            est.witness.A = a;
            est.witness.epsA = SignPattern::from_mask(a, mask << 1);
            est.witness.x = x;
          }
          if (used > budget) { exhaustive = false; break; }
        }
        if (used > budget) break;
      }
      if (used > budget) break;
    }
  }
  if (est.value == 0.0)
    throw std::invalid_argument("qglc_constant: no admissible set in range");
  est.direction = exhaustive ? BoundDirection::exact : BoundDirection::lower;
  est.search_spec = "|A| in sequence (<= " + std::to_string(max_cardinality) +
                    "), sets in [1," + std::to_string(range) +
                    "], grid perturbations on the lowest " +
                    std::to_string(grid.indices) + " free indices";
  return est;
}

inline ConstantEstimate slc_constant(const SpaceNorm& norm,
                                     const GapSequence& seq, int N,
                                     long long budget, Rng& rng,
                                     PerturbationGrid grid = {},
                                     int max_cardinality = 8,
                                     int set_range = 0) {
  ConstantEstimate est;
  est.kind = ConstantKind::Delta_slc;
  est.value = 0.0;
  const int range = set_range > 0 ? set_range : N;
  const Index dim = N;
  bool exhaustive = true;
  long long used = 0;
  auto members = seq.members_up_to(std::min<long long>(range, seq.prefix().back()));

  const double bg_count = std::min(
      std::pow(double(grid.values.size()), grid.indices), double(grid.budget));
  for (long long cl : members) {
    if (2 * cl > range) break;
    if (cl > max_cardinality) continue;  // outside the stated family
    int c = int(cl);
    double pair_count = binomial(range, c) * binomial(range - c, c) *
                        std::pow(4.0, c);
    std::vector<std::pair<IndexSet, IndexSet>> pairs;
    if (pair_count * bg_count <= double(budget)) {
      std::vector<int> pool;
      for (int i = 1; i <= range; ++i) pool.push_back(i);
      for_each_subset(pool, c, [&](const std::vector<int>& pa) {
        IndexSet A(std::vector<Index>(pa.begin(), pa.end()));
        std::vector<int> rest;
        for (int i = 1; i <= range; ++i)
          if (!A.contains(i)) rest.push_back(i);
        for_each_subset(rest, c, [&](const std::vector<int>& pb) {
          pairs.push_back({A, IndexSet(std::vector<Index>(pb.begin(), pb.end()))});
          return true;
        });
        return true;
      });
    } else {
      exhaustive = false;
      auto sa = structured_sets(norm, c, 1, range, rng, 8);
      for (std::size_t i = 0; i < sa.size(); ++i)
        for (std::size_t j = 0; j < sa.size(); ++j)
          if (i != j && sa[i].disjoint_from(sa[j]))
            pairs.push_back({sa[i], sa[j]});
    }
    for (auto& [A, B] : pairs) {
      auto bgs = detail::grid_backgrounds(grid, A.unite(B), dim,
                                          std::max<long long>(1, grid.budget));
      std::uint64_t hiA = c >= 1 ? (1ull << c) : 1, hiB = hiA;
      for (std::uint64_t ma = 0; ma < hiA; ++ma) {
        CoeffVector ua = signed_indicator(A, SignPattern::from_mask(A, ma), dim);
        for (std::uint64_t mb = 0; mb < hiB; ++mb) {
          CoeffVector ub = signed_indicator(B, SignPattern::from_mask(B, mb), dim);
          for (const CoeffVector& x : bgs) {
            ++used;
            double r = norm.eval(x + ua) / norm.eval(x + ub);
            if (r > est.value) {
              est.value = r;
              est.witness.A = A;
              est.witness.epsA = SignPattern::from_mask(A, ma);
              est.witness.B = B;
              est.witness.epsB = SignPattern::from_mask(B, mb);
              est.witness.x = x;
            }
            if (used > budget) { exhaustive = false; break; }
          }
          if (used > budget) break;
        }
        if (used > budget) break;
      }
      if (used > budget) break;
    }
  }
  if (est.value == 0.0)
    throw std::invalid_argument("slc_constant: no admissible pair in range");
  est.direction = exhaustive ? BoundDirection::exact : BoundDirection::lower;
  est.search_spec =
      "disjoint |A|=|B| in sequence (<= " + std::to_string(max_cardinality) +
      "), sets in [1," + std::to_string(range) +
      "], signs both sides, grid backgrounds on the lowest " +
      std::to_string(grid.indices) + " free indices";
  return est;
}

// ---------------------------------------------------------------------------
// Bidemocracy
// ---------------------------------------------------------------------------

inline ConstantEstimate bidemocracy_constant(const SpaceNorm& norm,
                                             const GapSequence& seq, int N,
                                             long long budget, Rng& rng) {
  ConstantEstimate est;
  est.kind = ConstantKind::Delta_b;
  est.value = 0.0;
  bool all_exact = true;
  bool have_upper = true;
  double upper = 0.0;
  auto members = seq.members_up_to(std::min<long long>(N, seq.prefix().back()));
  for (long long n : members) {
    ConstantEstimate phi = fundamental_function(norm, N, int(n), budget, rng);
    ConstantEstimate phis = fundamental_function_dual(norm, N, int(n), budget, rng);
    double lower = phi.value * phis.value / double(n);
    if (lower > est.value) {
      est.value = lower;
      est.witness.A = phi.witness.A;
      est.witness.epsA = phi.witness.epsA;
      est.witness.B = phis.witness.B;
      est.witness.epsB = phis.witness.epsB;
      est.witness.x = phis.witness.x;
      est.witness.n = int(n);
    }
    all_exact = all_exact && phi.direction == BoundDirection::exact &&
                phis.direction == BoundDirection::exact;
    if (phi.upper && phis.upper)
      upper = std::max(upper, *phi.upper * *phis.upper / double(n));
    else if (phi.direction == BoundDirection::exact && phis.upper)
      upper = std::max(upper, phi.value * *phis.upper / double(n));
    else
      have_upper = false;
  }
  est.direction = all_exact ? BoundDirection::exact : BoundDirection::lower;
  if (have_upper) est.upper = upper;
  if (est.direction == BoundDirection::lower && est.upper &&
      approx_equal(est.value, *est.upper))
    est.direction = BoundDirection::exact;
  est.search_spec = "max over sequence members n of phi(n) phi*(n) / n";
  return est;
}

}  // namespace tga
