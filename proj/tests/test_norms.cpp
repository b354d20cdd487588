#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tga/norms.hpp"
#include "tga/presets.hpp"
#include "tga/util.hpp"

using namespace tga;

namespace {

CoeffVector vec(std::initializer_list<std::pair<Index, double>> e, Index dim) {
  return CoeffVector::from_entries(std::vector<std::pair<Index, double>>(e), dim);
}

// Literal enumeration over every admissible set S (padding with indices
// beyond the truncation is free, so subsets of size <= s are equivalent).
double naive_lacunary(const LacunaryNorm& nm, const CoeffVector& x, int N) {
  double best = x.max_abs();
  for (long long s : nm.sequence().prefix()) {
    std::vector<Index> tail;
    for (Index i = Index(s) + 1; i <= N; ++i) tail.push_back(i);
    const int n = int(tail.size());
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      if (int(std::popcount(mask)) > s) continue;
      double sum = 0.0;
      for (int b = 0; b < n; ++b)
        if (mask & (1ull << b)) sum += std::abs(x.at(tail[std::size_t(b)]));
      best = std::max(best, sum);
    }
  }
  for (int j = 1; j <= int(nm.selected().size()); ++j) {
    long long base = nm.window_base(j);
    for (long long l = 1; l <= nm.window_len(j); ++l) {
      double run = 0.0;
      for (long long i = 1; i <= l; ++i)
        if (base + i <= N) run += x.at(Index(base + i));
      best = std::max(best, std::abs(run));
    }
  }
  return best;
}

double naive_additivegap(const AdditiveGapNorm& nm, const CoeffVector& x, int N) {
  double best = x.max_abs();
  const auto& seq = nm.sequence();
  for (int k = 1; k <= int(seq.size()); ++k) {
    long long floor_idx = seq.at(k);
    long long cap = AdditiveGapNorm::pow10(k);
    std::vector<Index> tail;
    for (Index i = Index(floor_idx) + 1; i <= N; ++i) tail.push_back(i);
    const int n = int(tail.size());
    double pk = nm.exponent(k);
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      if (static_cast<long long>(std::popcount(mask)) > cap) continue;
      double sum = 0.0;
      for (int b = 0; b < n; ++b)
        if (mask & (1ull << b))
          sum += std::pow(std::abs(x.at(tail[std::size_t(b)])), pk);
      best = std::max(best, std::pow(sum, 1.0 / pk));
    }
  }
  for (int j = 1; j <= nm.selected_count(); ++j) {
    double pj = nm.block_exponent(j), sum = 0.0;
    for (Index i : nm.block_T(j))
      if (i <= N) sum += std::pow(std::abs(x.at(i)), pj);
    best = std::max(best, std::pow(sum, 1.0 / pj));
  }
  return best;
}

CoeffVector random_vector(Rng& rng, int N, double zero_prob = 0.4) {
  CoeffVector x(N);
  for (Index i = 1; i <= N; ++i)
    if (rng.uniform() > zero_prob) x.set(i, rng.normal());
  return x;
}

}  // namespace

TEST_CASE("lp evaluation and duals") {
  LpNorm l2(2.0), l1(1.0), linf(LpNorm::inf);
  CoeffVector x = vec({{1, 3.0}, {2, 4.0}}, 4);
  CHECK(l2.eval(x) == doctest::Approx(5.0));
  CHECK(l1.eval(x) == doctest::Approx(7.0));
  CHECK(linf.eval(x) == doctest::Approx(4.0));
  CHECK(*l2.exact_dual_norm(x) == doctest::Approx(5.0));
  CHECK(*l1.exact_dual_norm(x) == doctest::Approx(4.0));
  CHECK_THROWS_AS(LpNorm(0.5), std::invalid_argument);
}

TEST_CASE("block partial-sum norm evaluation") {
  PresetInstance p = make_preset("oikhberg-small");
  auto* ok = dynamic_cast<const OikhbergNorm*>(p.norm.get());
  REQUIRE(ok != nullptr);
  REQUIRE(ok->blocks().size() == 3);
  CHECK(ok->blocks()[0].c == doctest::Approx(2.0));
  CHECK(ok->blocks()[0].m == 4);
  CHECK(ok->blocks()[1].c == doctest::Approx(3.0));
  CHECK(ok->blocks()[1].m == 153);
  CHECK(ok->blocks()[2].c == doctest::Approx(5.0));
  CHECK(ok->blocks()[2].m == 34450);

  const Index dim = Index(ok->covered_dim());
  IndexSet b1 = ok->block_set(1);
  CHECK(ok->eval(indicator(b1, dim)) == doctest::Approx(4.0));
  CHECK(ok->eval(signed_indicator(b1, SignPattern::alternating(b1), dim)) ==
        doctest::Approx(2.0));
  CHECK(ok->eval(vec({{1, 1.0}}, dim)) == doctest::Approx(1.0));

  // support beyond the configured blocks is an error
  CoeffVector too_far(dim + 10);
  too_far.set(dim + 1, 1.0);
  CHECK_THROWS_AS(ok->eval(too_far), std::invalid_argument);
}

TEST_CASE("unconditional variant ignores signs") {
  PresetInstance p = make_preset("oikhberg-unconditional");
  auto* ok = dynamic_cast<const OikhbergNorm*>(p.norm.get());
  REQUIRE(ok != nullptr);
  const Index dim = Index(ok->covered_dim());
  IndexSet b1 = ok->block_set(1);
  CHECK(ok->eval(indicator(b1, dim)) == doctest::Approx(4.0));
  CHECK(ok->eval(signed_indicator(b1, SignPattern::alternating(b1), dim)) ==
        doctest::Approx(4.0));
  CHECK(ok->info().sign_invariant);
}

TEST_CASE("lacunary norm evaluation") {
  PresetInstance p = make_preset("lacunary-small");
  auto* lac = dynamic_cast<const LacunaryNorm*>(p.norm.get());
  REQUIRE(lac != nullptr);
  // brute-force over all admissible S and window partial sums
  CoeffVector x = indicator(IndexSet::range(8, 14), 64);
  CHECK(lac->eval(x) == doctest::Approx(7.0));
  CHECK(naive_lacunary(*lac, x, 14) == doctest::Approx(7.0));
  CHECK(lac->eval(vec({{2, 1.0}}, 64)) == doctest::Approx(1.0));
  CHECK(lac->eval(vec({{3, -5.0}}, 64)) == doctest::Approx(5.0));
}

TEST_CASE("mixed p-q norm evaluation and parameter flags") {
  MixedPQNorm m4(4, 3.5, 1.6, 0.5, 0.5);
  CHECK(m4.cond1_holds());
  CHECK(m4.cond3_holds());
  CHECK_FALSE(m4.largem_holds());
  IndexSet b4 = IndexSet::range(1, 4);
  CHECK(m4.eval(indicator(b4, 8)) == doctest::Approx(4.0));
  CHECK(m4.eval(signed_indicator(b4, SignPattern::alternating(b4), 8)) ==
        doctest::Approx(std::pow(4.0, 1.0 / 3.5)));

  // tail behaves like l_q; with q = 2 the example (3,4) has norm 5
  MixedPQNorm mq2(4, 3.5, 2.0, 0.5, 0.5);
  CHECK_FALSE(mq2.cond1_holds());  // q = 2 cannot satisfy it
  CHECK(mq2.eval(vec({{5, 3.0}, {6, 4.0}}, 8)) == doctest::Approx(5.0));

  CHECK_THROWS_AS(MixedPQNorm(5, 3.5, 1.6, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MixedPQNorm(4, 1.2, 1.6, 0.5, 0.5), std::invalid_argument);

  MixedPQNorm paper(10000, 3.5, 1.6, 0.5, 0.5);
  CHECK(paper.largem_holds());
  MixedPQNorm small(2000, 3.5, 1.6, 0.5, 0.5);
  CHECK_FALSE(small.largem_holds());
}

TEST_CASE("additive-gap norm evaluation") {
  PresetInstance p = make_preset("additivegap-small");
  auto* ag = dynamic_cast<const AdditiveGapNorm*>(p.norm.get());
  REQUIRE(ag != nullptr);
  const Index dim = 332;
  for (int j = 1; j <= 2; ++j) {
    double pj1 = ag->block_exponent(j);
    double pj = ag->exponent(ag->selected_k(j));
    CHECK(ag->eval(indicator(ag->block_T(j), dim)) ==
          doctest::Approx(std::pow(10.0, double(j) / pj1)));
    CHECK(ag->eval(indicator(ag->set_D(j), dim)) ==
          doctest::Approx(std::pow(10.0, double(j) / pj)));
  }
  CHECK(ag->eval(vec({{5, 1.0}}, dim)) == doctest::Approx(1.0));
}

TEST_CASE("structure-aware evaluation equals naive enumeration at small N") {
  Rng rng(2024);
  GapSequence lseq({1, 7, 64});
  LacunaryNorm lac(lseq, {1, 2});
  GapSequence aseq({1, 32, 3200});
  AdditiveGapNorm ag(aseq, {1, 2}, {2.0, 1.5, 4.0 / 3.0});
  for (int trial = 0; trial < 60; ++trial) {
    int N = rng.uniform_int(6, 12);
    CoeffVector x = random_vector(rng, N);
    CoeffVector lifted(64);
    for (auto& [i, v] : x.entries()) lifted.set(i, v);
    CHECK(lac.eval(lifted) ==
          doctest::Approx(naive_lacunary(lac, x, N)).epsilon(1e-12));
    CoeffVector lifted2(332);
    for (auto& [i, v] : x.entries()) lifted2.set(i, v);
    CHECK(ag.eval(lifted2) ==
          doctest::Approx(naive_additivegap(ag, x, N)).epsilon(1e-12));
  }
}

TEST_CASE("norm axioms on random triples") {
  Rng rng(5);
  std::vector<NormPtr> norms{
      std::make_shared<LpNorm>(1.5), make_preset("lacunary-small").norm,
      make_preset("mixedpq-m4").norm, make_preset("additivegap-small").norm,
      make_preset("oikhberg-small").norm};
  for (const NormPtr& nm : norms) {
    for (int trial = 0; trial < 40; ++trial) {
      CoeffVector x = random_vector(rng, 20), y = random_vector(rng, 20);
      double lambda = rng.normal();
      CHECK(nm->eval(x * lambda) ==
            doctest::Approx(std::abs(lambda) * nm->eval(x)).epsilon(1e-9));
      CHECK(nm->eval(x + y) <= nm->eval(x) + nm->eval(y) + 1e-9);
      if (!x.is_zero()) CHECK(nm->eval(x) > 0.0);
    }
    CHECK(nm->eval(CoeffVector(20)) == doctest::Approx(0.0));
  }
}

TEST_CASE("basis vectors are seminormalized within the reported bounds") {
  for (const std::string& name : preset_names()) {
    PresetInstance p = make_preset(name);
    NormInfo info = p.norm->info();
    int dim = p.default_N;
    for (Index i = 1; i <= dim; i += std::max(1, dim / 37)) {
      CoeffVector e(dim);
      e.set(i, 1.0);
      double v = p.norm->eval(e);
      CHECK(v <= info.alpha1 + 1e-9);
      CHECK(v >= 1.0 / info.alpha2 - 1e-9);
    }
  }
}

TEST_CASE("monotone basis property for the partial-sum norms") {
  Rng rng(6);
  auto ok = make_preset("oikhberg-small").norm;
  auto lac = make_preset("lacunary-small").norm;
  for (int trial = 0; trial < 40; ++trial) {
    CoeffVector x = random_vector(rng, 24);
    for (int m = 0; m <= 24; ++m) {
      CHECK(ok->eval(partial_sum(x, m)) <= ok->eval(x) + 1e-12);
      CHECK(lac->eval(partial_sum(x, m)) <= lac->eval(x) + 1e-12);
    }
  }
}

TEST_CASE("domination of the baseline norms") {
  Rng rng(8);
  auto ok = make_preset("oikhberg-small").norm;
  auto lac = make_preset("lacunary-small").norm;
  LpNorm l2(2.0), linf(LpNorm::inf);
  for (int trial = 0; trial < 60; ++trial) {
    CoeffVector x = random_vector(rng, 30);
    CHECK(ok->eval(x) >= l2.eval(x) - 1e-12);
    CHECK(lac->eval(x) >= linf.eval(x) - 1e-12);
  }
}

TEST_CASE("constructor validation of the counterexample parameters") {
  // ratio gap too small for the selection rule
  CHECK_THROWS_AS(LacunaryNorm(GapSequence({1, 5, 64}), {1, 2}),
                  std::invalid_argument);
  // second block ratio must exceed the first
  CHECK_THROWS_AS(OikhbergNorm(GapSequence({1, 16, 17, 34}), {1, 3}),
                  std::invalid_argument);
  // additive gap too small
  CHECK_THROWS_AS(
      AdditiveGapNorm(GapSequence({1, 20, 3200}), {1, 2}, {2.0, 1.5, 4.0 / 3.0}),
      std::invalid_argument);
  // exponents must strictly decrease toward 1
  CHECK_THROWS_AS(
      AdditiveGapNorm(GapSequence({1, 32, 3200}), {1, 2}, {2.0, 2.0, 1.5}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      AdditiveGapNorm(GapSequence({1, 32, 3200}), {1, 2}, {2.0, 1.5, 0.9}),
      std::invalid_argument);
}

TEST_CASE("dual norm estimation") {
  Rng rng(11);
  LpNorm l2(2.0), l1(1.0);
  CoeffVector f = indicator(IndexSet::range(1, 4), 8);
  DualEstimate d2 = dual_norm_estimate(l2, f, rng);
  REQUIRE(d2.exact.has_value());
  CHECK(*d2.exact == doctest::Approx(2.0));
  CHECK(d2.lower == doctest::Approx(2.0));

  DualEstimate d1 = dual_norm_estimate(l1, f, rng);
  CHECK(*d1.exact == doctest::Approx(1.0));

  auto ok = make_preset("oikhberg-small").norm;
  CoeffVector g(Index(40));
  for (Index i = 1; i <= 9; ++i) g.set(i, i % 2 ? 1.0 : -0.5);
  DualEstimate dk = dual_norm_estimate(*ok, g, rng);
  REQUIRE(dk.upper.has_value());
  CHECK(*dk.upper == doctest::Approx(LpNorm(2.0).eval(g)));
  CHECK(dk.lower <= *dk.upper + 1e-9);
  CHECK(dk.lower > 0.0);
  // the witness certifies the lower bound
  CHECK(std::abs(pairing(g, dk.witness)) / ok->eval(dk.witness) ==
        doctest::Approx(dk.lower));

  CHECK_THROWS_AS(dual_norm_estimate(l2, CoeffVector(5), rng),
                  std::invalid_argument);
}

TEST_CASE("presets build and report their structure") {
  for (const std::string& name : preset_names()) {
    PresetInstance p = make_preset(name);
    CHECK(p.norm != nullptr);
    CHECK(p.default_N >= 1);
    CHECK(!p.norm->describe().empty());
  }
  CHECK_THROWS_AS(make_preset("nope"), std::invalid_argument);
}
