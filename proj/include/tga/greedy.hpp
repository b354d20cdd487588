#pragma once

// Weak thresholding greedy machinery: enumeration of t-greedy sets, greedy
// sums and residuals, and the approximation errors they are measured against
// (best n-term error, projection error, tail errors, semi-greedy error).
// Constants quantify over every admissible greedy set, so no tie-break is
// baked in anywhere; enumeration is exact when feasible and budgeted with
// structured tie-breaks otherwise.

#include <cstdint>
#include <set>

#include "tga/core.hpp"
#include "tga/norms.hpp"
#include "tga/util.hpp"

namespace tga {

namespace detail {

// Indices of [1,N] ordered by |coefficient| descending (ties by index),
// zero coordinates last.
inline std::vector<Index> rank_order(const CoeffVector& x) {
  std::vector<Index> order;
  order.reserve(std::size_t(x.dim()));
  std::vector<Index> zeros;
  std::vector<std::pair<double, Index>> nz;
  for (auto& [i, a] : x.entries()) nz.push_back({std::abs(a), i});
  std::stable_sort(nz.begin(), nz.end(), [](auto& u, auto& v) {
    return u.first > v.first || (u.first == v.first && u.second < v.second);
  });
  auto supp = x.support();
  for (Index i = 1; i <= x.dim(); ++i)
    if (!supp.contains(i)) zeros.push_back(i);
  for (auto& [v, i] : nz) order.push_back(i);
  for (Index i : zeros) order.push_back(i);
  return order;
}

}  // namespace detail

inline bool is_t_greedy_set(const CoeffVector& x, const IndexSet& a, double t) {
  double min_in = std::numeric_limits<double>::infinity();
  for (Index i : a) min_in = std::min(min_in, std::abs(x.at(i)));
  double max_out = 0.0;
  for (auto& [i, v] : x.entries())
    if (!a.contains(i)) max_out = std::max(max_out, std::abs(v));
  return min_in >= t * max_out - 1e-15;
}

// Every A of cardinality m with min_{i in A}|x_i| >= t max_{i not in A}|x_i|,
// stopping at `cap` results; `complete` reports whether the family was
// exhausted. Ties over zero coordinates can make it combinatorially large.
inline std::vector<IndexSet> t_greedy_sets_capped(const CoeffVector& x, int m,
                                                  double t, std::size_t cap,
                                                  bool* complete = nullptr) {
  if (!(t > 0.0 && t <= 1.0))
    throw std::invalid_argument("t_greedy_sets: t must be in (0,1]");
  if (m > x.dim() || m < 0)
    throw std::invalid_argument("t_greedy_sets: m outside [0, dim]");
  if (complete) *complete = true;
  std::vector<IndexSet> out;
  if (m == 0) {
    // min over the empty set is +inf, so the empty set is always greedy
    out.push_back(IndexSet{});
    return out;
  }

  std::vector<Index> order = detail::rank_order(x);
  const int n = int(order.size());
  if (m == n) {  // the full index set, the only set missing no rank
    out.push_back(IndexSet(order));
    return out;
  }
  auto value = [&](int rank) { return std::abs(x.at(order[std::size_t(rank)])); };

  // A valid set of ranks R: let s-1 be the first rank (0-based) missing from
  // R. Then R contains ranks [0, s-1) and m-s+1 further ranks r > s-1 with
  // v_r >= t * v_{s-1}; by sortedness those form a contiguous pool.
  bool truncated = false;
  for (int s = 1; s <= m + 1 && !truncated; ++s) {
    int missing = s - 1;
    if (missing >= n) break;
    double vcut = t * value(missing);
    int hi = missing;
    while (hi + 1 < n && value(hi + 1) >= vcut - 1e-15) ++hi;
    int need = m - (s - 1);
    if (hi - missing < need) continue;
    std::vector<int> pool;
    for (int r = missing + 1; r <= hi; ++r) pool.push_back(r);
    truncated = !for_each_subset(pool, need, [&](const std::vector<int>& pick) {
      std::vector<Index> elems;
      elems.reserve(std::size_t(m));
      for (int r = 0; r < s - 1; ++r) elems.push_back(order[std::size_t(r)]);
      for (int r : pick) elems.push_back(order[std::size_t(r)]);
      out.push_back(IndexSet(std::move(elems)));
      return out.size() < cap;
    });
  }
  if (truncated && complete) *complete = false;
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.values() < b.values();
  });
  return out;
}

// The full family; throws instead of silently truncating.
inline std::vector<IndexSet> all_t_greedy_sets(const CoeffVector& x, int m,
                                               double t,
                                               std::size_t max_results = 200000) {
  bool complete = true;
  auto out = t_greedy_sets_capped(x, m, t, max_results, &complete);
  if (!complete)
    throw std::runtime_error("all_t_greedy_sets: family larger than max_results");
  return out;
}

struct GreedyOutcome {
  IndexSet set;
  CoeffVector sum;       // G_m^t(x) for this choice of greedy set
  CoeffVector residual;  // x - G_m^t(x)
};

inline std::vector<GreedyOutcome> greedy_outcomes(const CoeffVector& x, int m,
                                                  double t,
                                                  std::size_t max_results = 200000) {
  std::vector<GreedyOutcome> out;
  for (IndexSet& a : all_t_greedy_sets(x, m, t, max_results)) {
    GreedyOutcome g;
    g.sum = project(x, a);
    g.residual = x - g.sum;
    g.set = std::move(a);
    out.push_back(std::move(g));
  }
  return out;
}

// Budgeted candidate family of t-greedy sets: structured tie-breaks first
// (always valid), then exhaustive enumeration deduplicated by the projection
// A ∩ supp(x) that the constants actually depend on.
inline std::vector<IndexSet> greedy_set_candidates(const CoeffVector& x, int m,
                                                   double t,
                                                   std::size_t budget = 64) {
  std::vector<IndexSet> out;
  std::set<std::vector<Index>> seen;  // keyed by A ∩ supp(x)
  auto push = [&](const IndexSet& a) {
    if (int(a.size()) != m || !is_t_greedy_set(x, a, t)) return;
    auto key = a.intersect(x.support()).values();
    if (seen.insert(key).second) out.push_back(a);
  };

  // structured tie-breaks over the sorted moduli
  struct KeyFn {
    const CoeffVector* x;
    int mode;
    bool operator()(Index i, Index j) const {
      double vi = std::abs(x->at(i)), vj = std::abs(x->at(j));
      if (vi != vj) return vi > vj;
      double si = x->at(i) >= 0 ? 1 : -1, sj = x->at(j) >= 0 ? 1 : -1;
      switch (mode) {
        case 0: return i < j;
        case 1: return i > j;
        case 2: return si != sj ? si > sj : i < j;   // positives first
        default: return si != sj ? si < sj : i < j;  // negatives first
      }
    }
  };
  std::vector<Index> all;
  for (Index i = 1; i <= x.dim(); ++i) all.push_back(i);
  for (int mode = 0; mode < 4; ++mode) {
    std::vector<Index> ord = all;
    std::stable_sort(ord.begin(), ord.end(), KeyFn{&x, mode});
    if (int(ord.size()) >= m)
      push(IndexSet(std::vector<Index>(ord.begin(), ord.begin() + m)));
  }

  // exhaustive pass, stopping at the budget
  for (IndexSet& a : t_greedy_sets_capped(x, m, t, budget * 4)) {
    if (out.size() >= budget) break;
    push(a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximation errors
// ---------------------------------------------------------------------------

struct ApproxError {
  double value = 0.0;
  BoundDirection dir = BoundDirection::upper;
  bool exhaustive = false;  // candidate-support family fully enumerated
  IndexSet support;         // argmin support
  CoeffVector minimizer;    // argmin z (for the inner problems)
  std::string method;
};

// min over z supported in A of ||x - z||, by multi-start Nelder-Mead with a
// coordinate polish. Convex objective, so restarts are belt and braces.
inline double inner_min(const SpaceNorm& norm, const CoeffVector& x,
                        const IndexSet& a, CoeffVector* argmin = nullptr) {
  const std::vector<Index> idx(a.values().begin(), a.values().end());
  const int d = int(idx.size());
  CoeffVector pax = project(x, a);
  if (d == 0) {
    if (argmin) *argmin = CoeffVector(x.dim());
    return norm.eval(x);
  }

  auto embed = [&](const std::vector<double>& z) {
    CoeffVector v = x;
    for (int j = 0; j < d; ++j) v.set(idx[std::size_t(j)],
                                      x.at(idx[std::size_t(j)]) - z[std::size_t(j)]);
    return v;  // x - z
  };
  auto g = [&](const std::vector<double>& z) { return norm.eval(embed(z)); };

  std::vector<double> z0(std::size_t(d), 0.0);
  for (int j = 0; j < d; ++j) z0[std::size_t(j)] = x.at(idx[std::size_t(j)]);
  double scale = std::max(1.0, x.max_abs());

  std::vector<std::vector<double>> starts{z0, std::vector<double>(std::size_t(d), 0.0)};
  for (double f : {0.5, 1.5}) {
    auto zs = z0;
    for (double& v : zs) v *= f;
    starts.push_back(zs);
  }
  {
    auto zs = z0;
    for (int j = 0; j < d; ++j)
      zs[std::size_t(j)] += (j % 2 ? -0.25 : 0.25) * scale;
    starts.push_back(zs);
  }

  double best = g(z0);
  std::vector<double> bestz = z0;

  auto nelder_mead = [&](std::vector<double> start) {
    std::vector<std::vector<double>> simplex{start};
    for (int j = 0; j < d; ++j) {
      auto v = start;
      v[std::size_t(j)] += 0.35 * scale;
      simplex.push_back(v);
    }
    std::vector<double> fv;
    for (auto& v : simplex) fv.push_back(g(v));
    for (int iter = 0; iter < 500 * d; ++iter) {
      std::vector<std::size_t> ord(simplex.size());
      for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
      std::sort(ord.begin(), ord.end(),
                [&](std::size_t u, std::size_t v) { return fv[u] < fv[v]; });
      double diam = 0.0;
      for (int j = 0; j < d; ++j)
        diam = std::max(diam, std::abs(simplex[ord.back()][std::size_t(j)] -
                                       simplex[ord.front()][std::size_t(j)]));
      if (diam < 1e-7 * scale) break;
      std::vector<double> centroid(std::size_t(d), 0.0);
      for (std::size_t r = 0; r + 1 < ord.size(); ++r)
        for (int j = 0; j < d; ++j)
          centroid[std::size_t(j)] += simplex[ord[r]][std::size_t(j)] / double(d);
      auto& worst = simplex[ord.back()];
      auto mix = [&](double c) {
        std::vector<double> v(std::size_t(d), 0.0);
        for (int j = 0; j < d; ++j)
          v[std::size_t(j)] = centroid[std::size_t(j)] +
                              c * (worst[std::size_t(j)] - centroid[std::size_t(j)]);
        return v;
      };
      auto refl = mix(-1.0);
      double fr = g(refl);
      if (fr < fv[ord.front()]) {
        auto exp_ = mix(-2.0);
        double fe = g(exp_);
        if (fe < fr) { worst = exp_; fv[ord.back()] = fe; }
        else { worst = refl; fv[ord.back()] = fr; }
      } else if (fr < fv[ord[ord.size() - 2]]) {
        worst = refl;
        fv[ord.back()] = fr;
      } else {
        auto con = mix(0.5);
        double fc = g(con);
        if (fc < fv[ord.back()]) { worst = con; fv[ord.back()] = fc; }
        else {
          for (std::size_t r = 1; r < ord.size(); ++r) {
            for (int j = 0; j < d; ++j)
              simplex[ord[r]][std::size_t(j)] =
                  0.5 * (simplex[ord[r]][std::size_t(j)] +
                         simplex[ord[0]][std::size_t(j)]);
            fv[ord[r]] = g(simplex[ord[r]]);
          }
        }
      }
    }
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (fv[i] < best) { best = fv[i]; bestz = simplex[i]; }
  };
  for (auto& s : starts) nelder_mead(s);

  // coordinate polish across the nonsmooth ridges
  double h = 0.1 * scale;
  while (h > 1e-9 * scale) {
    bool improved = false;
    for (int j = 0; j < d; ++j) {
      for (double dlt : {h, -h}) {
        auto zt = bestz;
        zt[std::size_t(j)] += dlt;
        double f = g(zt);
        if (f < best - 1e-15) { best = f; bestz = zt; improved = true; }
      }
    }
    if (!improved) h *= 0.5;
  }

  if (argmin) {
    CoeffVector z(x.dim());
    for (int j = 0; j < d; ++j) z.set(idx[std::size_t(j)], bestz[std::size_t(j)]);
    *argmin = z;
  }
  return best;
}

// Exhaustive multilevel grid search for the same inner problem; intended as
// an oracle for |A| <= 4.
inline double inner_min_grid(const SpaceNorm& norm, const CoeffVector& x,
                             const IndexSet& a, int points_per_axis = 13,
                             int levels = 8) {
  const std::vector<Index> idx(a.values().begin(), a.values().end());
  const int d = int(idx.size());
  if (d == 0) return norm.eval(x);
  if (d > 6)
    throw std::invalid_argument("inner_min_grid: dimension too large for a grid");

  auto g = [&](const std::vector<double>& z) {
    CoeffVector v = x;
    for (int j = 0; j < d; ++j)
      v.set(idx[std::size_t(j)], x.at(idx[std::size_t(j)]) - z[std::size_t(j)]);
    return norm.eval(v);
  };

  std::vector<double> center(std::size_t(d), 0.0);
  for (int j = 0; j < d; ++j) center[std::size_t(j)] = x.at(idx[std::size_t(j)]);
  // every shipped norm dominates the sup norm, so the optimum stays within
  // g(center) of each coordinate of x
  double radius = 1.05 * g(center) + 1e-9;

  double best = g(center);
  std::vector<double> bestz = center;
  for (int lvl = 0; lvl < levels; ++lvl) {
    std::vector<int> digit(std::size_t(d), 0);
    while (true) {
      std::vector<double> z(std::size_t(d), 0.0);
      for (int j = 0; j < d; ++j)
        z[std::size_t(j)] = bestz[std::size_t(j)] +
                            radius * (2.0 * digit[std::size_t(j)] /
                                          double(points_per_axis - 1) -
                                      1.0);
      double f = g(z);
      if (f < best) { best = f; bestz = z; }
      int j = 0;
      while (j < d && ++digit[std::size_t(j)] == points_per_axis) {
        digit[std::size_t(j)] = 0;
        ++j;
      }
      if (j == d) break;
    }
    radius /= 3.0;
  }
  return best;
}

namespace detail {

// Candidate supports of size exactly k in [1,N]: exhaustive if the count fits
// the budget, otherwise structured + seeded random picks.
inline std::pair<std::vector<IndexSet>, bool> candidate_supports(
    const CoeffVector& x, int k, long long budget, Rng& rng) {
  const int n = x.dim();
  std::vector<IndexSet> fams;
  if (k == 0) return {{IndexSet{}}, true};
  if (binomial(n, k) <= double(budget)) {
    std::vector<int> pool;
    for (int i = 1; i <= n; ++i) pool.push_back(i);
    for_each_subset(pool, k, [&](const std::vector<int>& pick) {
      fams.push_back(IndexSet(std::vector<Index>(pick.begin(), pick.end())));
      return true;
    });
    return {fams, true};
  }
  // heuristics: largest coefficients, prefix, support-aligned, random
  std::vector<std::pair<double, Index>> by_abs;
  for (auto& [i, a] : x.entries()) by_abs.push_back({std::abs(a), i});
  std::sort(by_abs.begin(), by_abs.end(),
            [](auto& u, auto& v) { return u.first > v.first; });
  auto pad_to_k = [&](std::vector<Index> v) {
    std::set<Index> s(v.begin(), v.end());
    for (Index i = 1; int(s.size()) < k && i <= n; ++i) s.insert(i);
    return IndexSet(std::vector<Index>(s.begin(), s.end()));
  };
  {
    std::vector<Index> top;
    for (auto& [v, i] : by_abs) {
      top.push_back(i);
      if (int(top.size()) == k) break;
    }
    fams.push_back(pad_to_k(top));
  }
  fams.push_back(IndexSet::range(1, k));
  {
    std::vector<Index> sp;
    for (auto& [i, a] : x.entries()) {
      sp.push_back(i);
      if (int(sp.size()) == k) break;
    }
    fams.push_back(pad_to_k(sp));
  }
  for (int r = 0; r < 24; ++r) {
    auto pick = rng.sample_without_replacement(1, n, k);
    fams.push_back(IndexSet(std::vector<Index>(pick.begin(), pick.end())));
  }
  return {fams, false};
}

}  // namespace detail

// inf over |A| <= n of ||x - P_A(x)||. Only A ∩ supp(x) matters, so the
// family is exhausted over subsets of the support whenever it fits; the
// fallback is deterministic so that sigma_n can reuse the exact same family.
inline ApproxError projection_error(const SpaceNorm& norm, const CoeffVector& x,
                                    int n, long long budget) {
  ApproxError out;
  out.method = "projection over support subsets";
  const auto supp = x.support().values();
  const int s = int(supp.size());
  const int kmax = std::min(n, s);
  out.value = std::numeric_limits<double>::infinity();
  auto consider = [&](const IndexSet& a) {
    double v = norm.eval(x - project(x, a));
    if (v < out.value) { out.value = v; out.support = a; }
  };
  double total = 0.0;
  for (int k = 0; k <= kmax; ++k) total += binomial(s, k);
  if (total <= double(budget)) {
    out.exhaustive = true;
    std::vector<int> pool(supp.begin(), supp.end());
    for (int k = 0; k <= kmax; ++k)
      for_each_subset(pool, k, [&](const std::vector<int>& pick) {
        consider(IndexSet(std::vector<Index>(pick.begin(), pick.end())));
        return true;
      });
  } else {
    out.exhaustive = false;
    std::vector<std::pair<double, Index>> by_abs;
    for (auto& [i, a] : x.entries()) by_abs.push_back({std::abs(a), i});
    std::stable_sort(by_abs.begin(), by_abs.end(),
                     [](auto& u, auto& v) { return u.first > v.first; });
    consider(IndexSet{});
    for (int k = 1; k <= kmax; ++k) {
      std::vector<Index> top, low, head, tail;
      for (auto& [v, i] : by_abs) {
        if (int(top.size()) < k) top.push_back(i);
      }
      for (auto it = by_abs.rbegin(); it != by_abs.rend(); ++it)
        if (int(low.size()) < k) low.push_back(it->second);
      for (int j = 0; j < k; ++j) head.push_back(supp[std::size_t(j)]);
      for (int j = 0; j < k; ++j)
        tail.push_back(supp[std::size_t(s - 1 - j)]);
      consider(IndexSet(std::move(top)));
      consider(IndexSet(std::move(low)));
      consider(IndexSet(std::move(head)));
      consider(IndexSet(std::move(tail)));
    }
  }
  out.minimizer = project(x, out.support);
  out.dir = out.exhaustive ? BoundDirection::exact : BoundDirection::upper;
  return out;
}

// sigma_n(x): inf over |supp(y)| <= n of ||x - y||. Upper bound from the
// candidate-support search, exact for l_p under full enumeration (there the
// inner problem is the coordinate projection). Always bounded by the
// projection error over the identical support family, so the hierarchy
// sigma_n <= projection_error <= tail_error holds measurement-wise.
inline ApproxError sigma_n(const SpaceNorm& norm, const CoeffVector& x, int n,
                           long long budget, Rng& rng) {
  if (n > x.dim()) throw std::invalid_argument("sigma_n: n exceeds dimension");
  ApproxError out;
  out.method = "support-enumeration + nelder-mead inner solve";
  if (n >= int(x.support_size())) {
    out.value = 0.0;
    out.dir = BoundDirection::exact;
    out.exhaustive = true;
    out.support = x.support();
    out.minimizer = x;
    return out;
  }
  const bool is_lp = dynamic_cast<const LpNorm*>(&norm) != nullptr;
  ApproxError pe = projection_error(norm, x, n, budget);
  double best = pe.value;
  out.support = pe.support;
  out.minimizer = pe.minimizer;

  auto [supports, exhaustive] = detail::candidate_supports(x, n, budget, rng);
  supports.push_back(pe.support);
  out.exhaustive = exhaustive;
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t s = 0; s < supports.size(); ++s) {
    double v;
    CoeffVector z;
    if (is_lp) {
      z = project(x, supports[s]);
      v = norm.eval(x - z);
    } else {
      v = inner_min(norm, x, supports[s], &z);
    }
    ranked.push_back({v, s});
    if (v < best) {
      best = v;
      out.support = supports[s];
      out.minimizer = z;
    }
  }
  // grid-oracle refinement of the leading candidates in low dimension
  if (!is_lp && n <= 4) {
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t r = 0; r < std::min<std::size_t>(3, ranked.size()); ++r) {
      const IndexSet& a = supports[ranked[r].second];
      double v = inner_min_grid(norm, x, a);
      if (v < best) { best = v; out.support = a; out.minimizer = project(x, a); }
    }
  }
  out.value = best;
  out.dir = (exhaustive && is_lp) ? BoundDirection::exact : BoundDirection::upper;
  return out;
}

inline double tail_error(const SpaceNorm& norm, const CoeffVector& x, int n) {
  return norm.eval(x - partial_sum(x, n));
}

// inf over 0 <= k <= n of ||x - S_k(x)||; the residual only changes at
// support indices, so those are the only prefixes evaluated.
inline double best_tail_error(const SpaceNorm& norm, const CoeffVector& x,
                              int n) {
  double best = norm.eval(x);  // k = 0
  for (auto& [i, a] : x.entries()) {
    if (i > n) break;
    best = std::min(best, norm.eval(x - partial_sum(x, i)));
  }
  if (n >= 0) best = std::min(best, norm.eval(x - partial_sum(x, n)));
  return best;
}

// Chebyshev-style error of the semi-greedy step: min over supp(z) ⊆ A.
inline ApproxError semi_greedy_error(const SpaceNorm& norm,
                                     const CoeffVector& x, const IndexSet& a) {
  ApproxError out;
  out.method = "inner solve on the given greedy support";
  out.support = a;
  const bool is_lp = dynamic_cast<const LpNorm*>(&norm) != nullptr;
  if (is_lp) {
    out.minimizer = project(x, a);
    out.value = norm.eval(x - out.minimizer);
    out.dir = BoundDirection::exact;
    out.exhaustive = true;
    return out;
  }
  out.value = inner_min(norm, x, a, &out.minimizer);
  if (a.size() <= 4)
    out.value = std::min(out.value, inner_min_grid(norm, x, a));
  out.dir = BoundDirection::upper;
  return out;
}

}  // namespace tga
