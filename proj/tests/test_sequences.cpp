#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tga/sequences.hpp"
#include "tga/util.hpp"

using namespace tga;

TEST_CASE("classification of the standard generators") {
  auto pow2 = classify(GapSequence::geometric(2, 2, 10));
  CHECK(pow2.max_ratio == doctest::Approx(2.0));
  REQUIRE(pow2.l_bounded_for.has_value());
  CHECK(*pow2.l_bounded_for == 2);

  auto fact = classify(GapSequence::factorial(8));
  CHECK(fact.max_ratio == doctest::Approx(8.0));  // ratio k+1 grows
  CHECK_FALSE(fact.l_bounded_for.has_value());
  CHECK_FALSE(fact.additive_bounded_for.has_value());

  auto arith = classify(GapSequence::arithmetic(3, 3, 10));
  CHECK(arith.max_additive_gap == 3);
  REQUIRE(arith.additive_bounded_for.has_value());
  CHECK(*arith.additive_bounded_for == 3);

  CHECK_THROWS_AS(classify(GapSequence({5})), std::invalid_argument);
}

TEST_CASE("classification is monotone under prefix extension") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long long> prefix{1};
    for (int k = 0; k < 6; ++k)
      prefix.push_back(prefix.back() + rng.uniform_int(1, 40));
    auto shorter = classify(GapSequence(
        std::vector<long long>(prefix.begin(), prefix.end() - 2)));
    auto longer = classify(GapSequence(prefix));
    CHECK(longer.max_ratio >= shorter.max_ratio - 1e-12);
    CHECK(longer.max_additive_gap >= shorter.max_additive_gap);
  }
}

TEST_CASE("l-bounded prefixes satisfy n_{k+1} <= l n_k pairwise") {
  GapSequence s = GapSequence::geometric(1, 2, 12);
  auto cls = classify(s);
  REQUIRE(cls.l_bounded_for.has_value());
  for (std::size_t k = 1; k < s.prefix().size(); ++k)
    CHECK(s.prefix()[k] <= *cls.l_bounded_for * s.prefix()[k - 1]);
}

TEST_CASE("subsequence selection with strictly increasing ratios") {
  // ratio scan oracle: ratios 16, 17/16, 81, ... -> picks (1, 3)
  GapSequence s({1, 16, 17, 1377, 1378});
  auto k = oikhberg_subsequence(s, 2);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == 1);
  CHECK(k[1] == 3);

  // constant ratios cannot supply increasing ones
  CHECK_THROWS_AS(oikhberg_subsequence(GapSequence::geometric(1, 2, 10), 3),
                  std::invalid_argument);

  // ratios 4, 1.25, 9, ~1.02, 15 -> picks (1, 3, 5)
  GapSequence s2({1, 4, 5, 45, 46, 690});
  auto k2 = oikhberg_subsequence(s2, 3);
  REQUIRE(k2.size() == 3);
  CHECK(k2 == std::vector<int>{1, 3, 5});

  // a large early ratio must not trap the selection
  GapSequence s3({1, 100, 200, 600});
  auto k3 = oikhberg_subsequence(s3, 2);
  CHECK(k3 == std::vector<int>{2, 3});
}

TEST_CASE("fast subsequence selection against the threshold rules") {
  GapSequence lac({1, 7, 64});
  auto k = fast_subsequence(lac, 2, ratio_threshold_rule());
  CHECK(k == std::vector<int>{1, 2});  // 7 > 6*1 and 64 > 9*7

  CHECK_THROWS_AS(fast_subsequence(GapSequence::geometric(1, 2, 12), 1,
                                   ratio_threshold_rule()),
                  std::invalid_argument);

  GapSequence add({1, 32, 3200});
  auto ka = fast_subsequence(add, 2, additive_threshold_rule());
  CHECK(ka == std::vector<int>{1, 2});  // 32 > 1+30 and 3200 > 32+300
}

TEST_CASE("membership beyond the prefix follows the rule") {
  GapSequence g = GapSequence::geometric(1, 2, 6);  // up to 32
  CHECK(g.contains_extended(64));
  CHECK_FALSE(g.contains_extended(65));
  GapSequence nat = GapSequence::all_naturals(10);
  CHECK(nat.contains_extended(12500));
  GapSequence ex({1, 5, 9});  // no rule: nothing beyond the prefix
  CHECK_FALSE(ex.contains_extended(13));
  CHECK(ex.contains_extended(5));
}

TEST_CASE("members_up_to requires a materialized prefix") {
  GapSequence s({1, 7, 64});
  auto m = s.members_up_to(64);
  CHECK(m == std::vector<long long>{1, 7, 64});
  CHECK_THROWS_AS(s.members_up_to(100), std::invalid_argument);
}
