#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tga/verify.hpp"

using namespace tga;

TEST_CASE("verdict logic of make_check") {
  using D = BoundDirection;
  // rigorous pass: capped lhs below floored rhs
  auto c = make_check("a", "", 1.0, D::exact, 2.0, D::lower, "");
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.mode == CheckMode::proved);
  // lower vs lower is undecided even when the numbers agree
  c = make_check("b", "", 1.0, D::lower, 2.0, D::lower, "");
  CHECK(c.verdict == Verdict::inconclusive);
  // a witness above an exact bound refutes
  c = make_check("c", "", 3.0, D::lower, 2.0, D::exact, "");
  CHECK(c.verdict == Verdict::fail);
  // an upper bound exceeding the rhs proves nothing
  c = make_check("d", "", 3.0, D::upper, 2.0, D::exact, "");
  CHECK(c.verdict == Verdict::inconclusive);
  // measured lower below a theorem bound: consistency pass
  c = make_check("e", "", 1.5, D::lower, 2.0, D::exact, "");
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.mode == CheckMode::consistency);

  auto b = make_bracket_check("f", "", 1.0, 1.2, 1.5, "");
  CHECK(b.verdict == Verdict::pass);
  b = make_bracket_check("g", "", 1.3, 1.2, 1.5, "");
  CHECK(b.verdict == Verdict::inconclusive);
  b = make_bracket_check("h", "", 1.7, 1.2, 1.5, "");
  CHECK(b.verdict == Verdict::fail);
}

TEST_CASE("direction audit: no proved pass from unsound directions") {
  std::vector<Instance> insts;
  insts.push_back({std::make_shared<LpNorm>(2.0),
                   GapSequence::geometric(2, 2, 4), 16, 2000000, 77, "l2"});
  insts.push_back({make_preset("mixedpq-m4").norm,
                   make_preset("mixedpq-m4").seq, 24, 300000, 78, "mixedpq-m4"});
  for (const Instance& inst : insts) {
    VerdictReport rep = run_ledger(inst, {1.0});
    for (const LemmaCheck& c : rep.checks) {
      if (c.verdict == Verdict::pass && c.mode == CheckMode::proved) {
        CHECK(c.lhs_dir != BoundDirection::lower);
        CHECK(c.rhs_dir != BoundDirection::upper);
      }
      if (c.verdict == Verdict::fail && c.mode == CheckMode::proved) {
        CHECK(c.lhs_dir != BoundDirection::upper);
        CHECK(c.rhs_dir != BoundDirection::lower);
      }
    }
  }
}

TEST_CASE("l_p baseline ledger passes outright") {
  for (double p : {2.0, 1.0}) {
    Instance inst{std::make_shared<LpNorm>(p), GapSequence::geometric(2, 2, 4),
                  16, 20000000, 42, "lp-baseline"};
    VerdictReport rep = run_ledger(inst, {1.0, 0.5});
    CHECK(rep.all_pass());
    int inconclusive = 0;
    for (auto& c : rep.checks) inconclusive += c.verdict == Verdict::inconclusive;
    CHECK(inconclusive == 0);
    for (auto& c : rep.checks) CHECK(c.margin >= -1e-9);
  }
}

TEST_CASE("mixed p-q separation battery") {
  MixedPQNorm paper(10000, 3.5, 1.6, 0.5, 0.5);
  auto checks = check_mixedpq_separation(paper);
  for (auto& c : checks) CHECK(c.verdict == Verdict::pass);

  // the small-m instance fails the large-m inequality, and the battery says so
  MixedPQNorm small(2000, 3.5, 1.6, 0.5, 0.5);
  auto small_checks = check_mixedpq_separation(small);
  bool largem_failed = false;
  for (auto& c : small_checks)
    if (c.id == "mixedpq-largem") largem_failed = c.verdict == Verdict::fail;
  CHECK(largem_failed);
}

TEST_CASE("duality pairing bound on l_p") {
  for (double p : {2.0, 1.5}) {
    LpNorm lp(p);
    for (double t : {1.0, 0.5}) {
      LemmaCheck c = check_duality_pairing(lp, 16, t, 80, 99);
      CHECK(c.verdict == Verdict::pass);
      CHECK(c.lhs <= 1.0 + 1e-9);
    }
  }
  // degenerate probe: a single-coordinate functional with B = its support
  LpNorm l2(2.0);
  CoeffVector xs(8);
  xs.set(3, 2.0);
  CoeffVector x(8);
  x.set(3, 1.0);
  x.set(4, 1.0);
  CoeffVector res = xs - project(xs, IndexSet{3});
  CHECK(std::abs(pairing(res, project(x, IndexSet{3, 4}))) ==
        doctest::Approx(0.0));
}

TEST_CASE("example batteries pass for every preset") {
  struct Cfg { const char* name; int N; long long budget; };
  for (Cfg cfg : std::initializer_list<Cfg>{
           {"oikhberg-small", 40, 400000},
           {"oikhberg-unconditional", 40, 400000},
           {"lacunary-small", 64, 2000000},
           {"additivegap-small", 332, 2000000},
           {"mixedpq-paper", 10000, 100000}}) {
    VerdictReport rep = check_example_claims(cfg.name, cfg.N, cfg.budget, 7);
    INFO(cfg.name);
    CHECK(rep.all_pass());
    for (auto& c : rep.checks) {
      INFO(c.id, " lhs=", c.lhs, " rhs=", c.rhs);
      CHECK(c.verdict != Verdict::fail);
    }
  }
}

TEST_CASE("reports are reproducible for a fixed seed") {
  Instance inst{make_preset("lacunary-small").norm,
                make_preset("lacunary-small").seq, 64, 200000, 4321,
                "lacunary-small"};
  VerdictReport a = run_ledger(inst, {0.5});
  VerdictReport b = run_ledger(inst, {0.5});
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].lhs == b.checks[i].lhs);
    CHECK(a.checks[i].rhs == b.checks[i].rhs);
    CHECK(a.checks[i].verdict == b.checks[i].verdict);
  }
}

TEST_CASE("growth tables reproduce the counterexample ratios") {
  auto lac = growth_table("lacunary-small", 1, 2);
  double de1 = 0, de2 = 0, ucc2 = 0;
  for (auto& r : lac) {
    if (r.kind == "DE_ratio" && r.index == 1) de1 = r.value;
    if (r.kind == "DE_ratio" && r.index == 2) de2 = r.value;
    if (r.kind == "ucc_ratio" && r.index == 2) ucc2 = r.value;
  }
  CHECK(de1 >= 1.0 - 1e-9);
  CHECK(de2 >= 2.0 - 1e-9);
  CHECK(ucc2 >= 2.0 - 1e-9);

  auto ok = growth_table("oikhberg-small", 1, 2);
  double u1 = 0, u2 = 0, d1 = 0, d2 = 0;
  for (auto& r : ok) {
    if (r.kind == "ucc_ratio" && r.index == 1) u1 = r.value;
    if (r.kind == "ucc_ratio" && r.index == 2) u2 = r.value;
    if (r.kind == "democracy_ratio" && r.index == 1) d1 = r.value;
    if (r.kind == "democracy_ratio" && r.index == 2) d2 = r.value;
  }
  CHECK(u1 == doctest::Approx(2.0));
  CHECK(u2 == doctest::Approx(3.0));
  CHECK(d1 == doctest::Approx(2.0));
  CHECK(d2 == doctest::Approx(3.0));

  auto ag = growth_table("additivegap-small", 1, 2);
  for (auto& r : ag)
    if (r.kind == "TD_ratio")
      CHECK(r.value == doctest::Approx(std::pow(10.0, 1.0 / 6.0)));
}

TEST_CASE("bounded-gaps transfer checks on arithmetic sequences") {
  // (3k): additive gap 3, ratio bound 2
  Instance inst{std::make_shared<LpNorm>(1.0), GapSequence::arithmetic(3, 3, 6),
                18, 500000, 31, "l1-arith"};
  LemmaCheck ucc = check_ucc_bounded_gaps(inst);
  CHECK(ucc.verdict == Verdict::pass);
  for (auto& c : check_ul_bounded_gaps(inst))
    CHECK(c.verdict == Verdict::pass);
}

TEST_CASE("growth on a symmetric space is constant 1") {
  PresetInstance p;
  p.name = "lp";
  p.norm = std::make_shared<LpNorm>(2.0);
  p.seq = GapSequence::geometric(2, 2, 4);
  p.default_N = 16;
  for (auto& r : growth_table(p, 1, 4))
    CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("corrupted preset parameters surface as constructor errors") {
  CHECK_THROWS_AS(LacunaryNorm(GapSequence({1, 6, 64}), {1, 2}),
                  std::invalid_argument);
}
