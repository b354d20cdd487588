#pragma once

// Finitely supported coefficient vectors over a real seminormalized basis,
// index sets, sign patterns, and the coordinate projections built from them.
// Indices are 1-based throughout; every vector carries an explicit dimension
// hint N and all statements are instantiated on the span of e_1..e_N.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tga {

using Index = int;

inline constexpr double kRelTol = 1e-9;

inline bool approx_equal(double a, double b, double rtol = kRelTol) {
  return std::abs(a - b) <= rtol * std::max({1.0, std::abs(a), std::abs(b)});
}

// What a finite search certifies about a supremum/infimum it reports.
enum class BoundDirection { lower, upper, exact };

inline const char* to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::lower: return "lower";
    case BoundDirection::upper: return "upper";
    case BoundDirection::exact: return "exact";
  }
  return "?";
}

// Sorted, duplicate-free set of positive integers.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<Index> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() < 1)
      throw std::invalid_argument("IndexSet: indices must be >= 1");
  }
  IndexSet(std::initializer_list<Index> elems)
      : IndexSet(std::vector<Index>(elems)) {}

  static IndexSet range(Index lo, Index hi) {  // {lo, lo+1, ..., hi}
    std::vector<Index> v;
    for (Index i = lo; i <= hi; ++i) v.push_back(i);
    return IndexSet(std::move(v));
  }

  const std::vector<Index>& values() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  Index min() const { return elems_.front(); }
  Index max() const { return elems_.back(); }
  bool contains(Index i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
  }

  IndexSet unite(const IndexSet& other) const {
    std::vector<Index> v;
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                   other.elems_.end(), std::back_inserter(v));
    return IndexSet(std::move(v));
  }
  IndexSet intersect(const IndexSet& other) const {
    std::vector<Index> v;
    std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                          other.elems_.end(), std::back_inserter(v));
    return IndexSet(std::move(v));
  }
  IndexSet minus(const IndexSet& other) const {
    std::vector<Index> v;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(v));
    return IndexSet(std::move(v));
  }
  bool disjoint_from(const IndexSet& other) const {
    return intersect(other).empty();
  }

  bool operator==(const IndexSet& other) const = default;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

 private:
  std::vector<Index> elems_;
};

// A < B in the sense max A < min B; empty sets compare true vacuously.
inline bool strictly_before(const IndexSet& a, const IndexSet& b) {
  if (a.empty() || b.empty()) return true;
  return a.max() < b.min();
}

// Signs in {+1,-1} over an index domain (real scalars only).
class SignPattern {
 public:
  SignPattern() = default;
  SignPattern(const IndexSet& domain, std::vector<int> signs) {
    if (domain.size() != signs.size())
      throw std::invalid_argument("SignPattern: domain/sign size mismatch");
    entries_.reserve(signs.size());
    std::size_t j = 0;
    for (Index i : domain) {
      int s = signs[j++];
      if (s != 1 && s != -1)
        throw std::invalid_argument("SignPattern: signs must be +1 or -1");
      entries_.emplace_back(i, s);
    }
  }

  static SignPattern constant(const IndexSet& domain, int sign = 1) {
    return SignPattern(domain, std::vector<int>(domain.size(), sign));
  }
  static SignPattern alternating(const IndexSet& domain, int first = 1) {
    std::vector<int> s(domain.size());
    for (std::size_t j = 0; j < s.size(); ++j)
      s[j] = (j % 2 == 0) ? first : -first;
    return SignPattern(domain, std::move(s));
  }
  // Bit b of `mask` flips the sign of the b-th smallest domain element.
  static SignPattern from_mask(const IndexSet& domain, std::uint64_t mask) {
    std::vector<int> s(domain.size());
    for (std::size_t j = 0; j < s.size(); ++j)
      s[j] = (mask >> j) & 1u ? -1 : 1;
    return SignPattern(domain, std::move(s));
  }

  IndexSet domain() const {
    std::vector<Index> v;
    v.reserve(entries_.size());
    for (auto& [i, s] : entries_) v.push_back(i);
    return IndexSet(std::move(v));
  }
  int at(Index i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](auto& e, Index k) { return e.first < k; });
    if (it == entries_.end() || it->first != i)
      throw std::out_of_range("SignPattern: index not in domain");
    return it->second;
  }
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<Index, int>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<Index, int>> entries_;  // sorted by index
};

// x = sum_i a_i e_i with finite support; zero entries are never stored.
class CoeffVector {
 public:
  CoeffVector() : dim_(0) {}
  explicit CoeffVector(Index dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("CoeffVector: negative dim");
  }

  static CoeffVector from_entries(std::vector<std::pair<Index, double>> e,
                                  Index dim) {
    CoeffVector x(dim);
    for (auto& [i, v] : e) x.set(i, v);
    return x;
  }

  Index dim() const { return dim_; }

  double at(Index i) const {
    auto it = find(i);
    return it == entries_.end() ? 0.0 : it->second;
  }

  void set(Index i, double v) {
    if (i < 1 || i > dim_)
      throw std::out_of_range("CoeffVector: index outside [1, dim]");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](auto& e, Index k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) {
      if (v == 0.0) entries_.erase(it);
      else it->second = v;
    } else if (v != 0.0) {
      entries_.insert(it, {i, v});
    }
  }

  const std::vector<std::pair<Index, double>>& entries() const {
    return entries_;
  }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  Index max_support_index() const {
    return entries_.empty() ? 0 : entries_.back().first;
  }

  IndexSet support() const {
    std::vector<Index> v;
    v.reserve(entries_.size());
    for (auto& [i, a] : entries_) v.push_back(i);
    return IndexSet(std::move(v));
  }

  double max_abs() const {
    double m = 0.0;
    for (auto& [i, a] : entries_) m = std::max(m, std::abs(a));
    return m;
  }

  CoeffVector& operator+=(const CoeffVector& y) {
    *this = *this + y;
    return *this;
  }
  friend CoeffVector operator+(const CoeffVector& x, const CoeffVector& y) {
    CoeffVector z(std::max(x.dim_, y.dim_));
    auto ix = x.entries_.begin(), iy = y.entries_.begin();
    while (ix != x.entries_.end() || iy != y.entries_.end()) {
      if (iy == y.entries_.end() ||
          (ix != x.entries_.end() && ix->first < iy->first)) {
        z.entries_.push_back(*ix++);
      } else if (ix == x.entries_.end() || iy->first < ix->first) {
        z.entries_.push_back(*iy++);
      } else {
        double s = ix->second + iy->second;
        if (s != 0.0) z.entries_.push_back({ix->first, s});
        ++ix, ++iy;
      }
    }
    return z;
  }
  friend CoeffVector operator-(const CoeffVector& x, const CoeffVector& y) {
    return x + (y * -1.0);
  }
  friend CoeffVector operator*(const CoeffVector& x, double c) {
    CoeffVector z(x.dim_);
    if (c == 0.0) return z;
    z.entries_ = x.entries_;
    for (auto& [i, a] : z.entries_) a *= c;
    return z;
  }
  friend CoeffVector operator*(double c, const CoeffVector& x) { return x * c; }

  bool approx(const CoeffVector& y, double rtol = kRelTol) const {
    auto ix = entries_.begin(), iy = y.entries_.begin();
    while (ix != entries_.end() && iy != y.entries_.end()) {
      if (ix->first != iy->first) return false;
      if (!approx_equal(ix->second, iy->second, rtol)) return false;
      ++ix, ++iy;
    }
    return ix == entries_.end() && iy == y.entries_.end();
  }

 private:
  std::vector<std::pair<Index, double>>::const_iterator find(Index i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](auto& e, Index k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it;
    return entries_.end();
  }

  std::vector<std::pair<Index, double>> entries_;  // sorted by index, nonzero
  Index dim_;
};

// P_A(x): keep the coordinates of x indexed by A.
inline CoeffVector project(const CoeffVector& x, const IndexSet& a) {
  CoeffVector z(x.dim());
  for (auto& [i, v] : x.entries())
    if (a.contains(i)) z.set(i, v);
  return z;
}

// S_m(x) = P_{[1,m]}(x); S_0 = 0.
inline CoeffVector partial_sum(const CoeffVector& x, Index m) {
  CoeffVector z(x.dim());
  for (auto& [i, v] : x.entries()) {
    if (i > m) break;
    z.set(i, v);
  }
  return z;
}

// 1_{eps A} = sum_{i in A} eps_i e_i; the pattern domain must equal A.
inline CoeffVector signed_indicator(const IndexSet& a, const SignPattern& eps,
                                    Index dim) {
  if (!(eps.domain() == a))
    throw std::invalid_argument("signed_indicator: sign domain != index set");
  CoeffVector z(dim);
  for (auto& [i, s] : eps.entries()) z.set(i, double(s));
  return z;
}

inline CoeffVector indicator(const IndexSet& a, Index dim) {
  return signed_indicator(a, SignPattern::constant(a), dim);
}

}  // namespace tga
