#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tga/constants.hpp"
#include "tga/presets.hpp"

using namespace tga;

namespace {
const GapSequence kPow2 = GapSequence::geometric(2, 2, 8);  // 2,4,...,256
}

TEST_CASE("fundamental function") {
  Rng rng(1);
  LpNorm l1(1.0), l2(2.0);
  ConstantEstimate f1 = fundamental_function(l1, 12, 3, 1000000, rng);
  CHECK(f1.value == doctest::Approx(3.0));
  CHECK(f1.direction == BoundDirection::exact);
  ConstantEstimate f2 = fundamental_function(l2, 12, 4, 1000000, rng);
  CHECK(f2.value == doctest::Approx(2.0));

  auto ok = make_preset("oikhberg-small").norm;
  ConstantEstimate fo = fundamental_function(*ok, 20, 4, 1000000, rng);
  CHECK(fo.value == doctest::Approx(4.0));
  CHECK(fo.direction == BoundDirection::exact);
  CHECK(fo.witness.A == IndexSet::range(1, 4));

  // monotone in m, bounded by m * alpha1
  double prev = 0.0;
  for (int m = 1; m <= 6; ++m) {
    ConstantEstimate f = fundamental_function(*ok, 20, m, 200000, rng);
    CHECK(f.value >= prev - 1e-12);
    CHECK(f.value <= m * ok->info().alpha1 + 1e-9);
    prev = f.value;
  }
}

TEST_CASE("dual fundamental function") {
  Rng rng(2);
  for (double p : {1.0, 1.5, 2.0}) {
    LpNorm lp(p);
    ConstantEstimate f = fundamental_function_dual(lp, 12, 4, 100000, rng);
    double want = std::isinf(lp.conjugate())
                      ? 1.0
                      : std::pow(4.0, 1.0 / lp.conjugate());
    CHECK(f.value == doctest::Approx(want));
    CHECK(f.direction == BoundDirection::exact);
  }
  auto ok = make_preset("oikhberg-small").norm;
  for (int m : {1, 4, 16}) {
    ConstantEstimate f = fundamental_function_dual(*ok, 40, m, 100000, rng);
    REQUIRE(f.upper.has_value());
    CHECK(*f.upper == doctest::Approx(std::sqrt(double(m))));
    CHECK(f.value <= *f.upper + 1e-9);
  }
}

TEST_CASE("democracy-like constants are 1 on symmetric spaces") {
  Rng rng(3);
  for (double p : {1.0, 2.0}) {
    LpNorm lp(p);
    for (ConstantKind k : {ConstantKind::Delta_d, ConstantKind::Delta_s,
                           ConstantKind::Delta_c, ConstantKind::Delta_sc,
                           ConstantKind::Delta_oc, ConstantKind::Delta_osc}) {
      ConstantEstimate e =
          democracy_like_constant(k, lp, kPow2, 16, 2000000, rng);
      CHECK(e.value == doctest::Approx(1.0));
      CHECK(e.direction == BoundDirection::exact);
      CHECK(e.replay(lp) == doctest::Approx(e.value));
    }
  }
}

TEST_CASE("superdemocracy of the block norm stays within sqrt(2)") {
  Rng rng(4);
  PresetInstance p = make_preset("oikhberg-small");
  DemocracyOptions opt;
  opt.max_cardinality = 16;
  ConstantEstimate ds = democracy_like_constant(
      ConstantKind::Delta_s, *p.norm, p.seq, 40, 1000000, rng, opt);
  CHECK(ds.value <= std::sqrt(2.0) + 1e-9);
  CHECK(ds.replay(*p.norm) == doctest::Approx(ds.value));
}

TEST_CASE("order-superconservativity of the lacunary norm is exactly 1") {
  Rng rng(5);
  PresetInstance p = make_preset("lacunary-small");
  DemocracyOptions opt;
  opt.max_cardinality = 5;
  opt.range_cap = 16;
  ConstantEstimate osc = democracy_like_constant(
      ConstantKind::Delta_osc, *p.norm, p.seq, 64, 4000000, rng, opt);
  CHECK(osc.value == doctest::Approx(1.0));
  CHECK(osc.direction == BoundDirection::exact);
}

TEST_CASE("unconditionality for constant coefficients") {
  Rng rng(6);
  LpNorm l2(2.0);
  ConstantEstimate ku = ucc_constant(l2, kPow2, 12, 500000, rng);
  CHECK(ku.value == doctest::Approx(1.0));

  // the non-unconditionality witness lives at |A| = 4, outside the preset's
  // sequence: the unrestricted constant sees it
  PresetInstance ok = make_preset("oikhberg-small");
  ConstantEstimate ko =
      ucc_constant(*ok.norm, GapSequence::all_naturals(20), 20, 500000, rng, 8);
  CHECK(ko.value >= 2.0 - 1e-9);  // block 1 with constant vs alternating signs
  CHECK(ko.replay(*ok.norm) == doctest::Approx(ko.value));

  PresetInstance lac = make_preset("lacunary-small");
  ConstantEstimate kl = ucc_constant(*lac.norm, lac.seq, 64, 500000, rng);
  CHECK(kl.value >= 2.0 - 1e-9);  // the alternating-prefix witness at j=2
}

TEST_CASE("UL constants on the grid") {
  Rng rng(7);
  LpNorm l2(2.0);
  auto [c1, c2] = ul_constants(l2, kPow2, 12, 500000, rng);
  CHECK(c1.value == doctest::Approx(1.0));
  CHECK(c2.value == doctest::Approx(1.0));
  CHECK(c1.replay(l2) == doctest::Approx(c1.value));
  CHECK(c2.replay(l2) == doctest::Approx(c2.value));

  PresetInstance ok = make_preset("oikhberg-small");
  auto [o1, o2] = ul_constants(*ok.norm, ok.seq, 20, 200000, rng);
  CHECK(o2.value >= 1.0 - 1e-9);
  // singletons force ratio 1 exactly
  GapSequence ones({1, 40});
  auto [s1, s2] = ul_constants(*ok.norm, ones, 40, 1000, rng);
  CHECK(s1.value == doctest::Approx(1.0));
  CHECK(s2.value == doctest::Approx(1.0));
}

TEST_CASE("quasi-greedy constants") {
  Rng rng(8);
  SampleSpec spec;
  spec.random_count = 60;
  LpNorm l2(2.0);
  auto qg = quasi_greedy_constant(l2, kPow2, 16, 1.0, spec, rng);
  CHECK(qg.cq.value == doctest::Approx(1.0));  // attained, never exceeded
  CHECK(qg.cq.replay(l2) == doctest::Approx(qg.cq.value));
  CHECK(qg.csq.value <= 1.0 + 1e-9);
  CHECK(qg.csq.replay(l2) == doctest::Approx(qg.csq.value));

  // restricted to its own sequence the block norm stays within 2
  PresetInstance ok = make_preset("oikhberg-small");
  Rng rng2(9);
  auto qo = quasi_greedy_constant(*ok.norm, ok.seq, 40, 1.0, spec, rng2);
  CHECK(qo.cq.value <= 2.0 + 1e-6);
  CHECK(qo.cq.replay(*ok.norm) == doctest::Approx(qo.cq.value));

  // over all orders the alternating-block comb pushes past 2
  Rng rng3(10);
  auto qn = quasi_greedy_constant(*ok.norm, GapSequence::all_naturals(40), 40,
                                  1.0, spec, rng3);
  CHECK(qn.cq.value > 2.0);
  CHECK(qn.cq.replay(*ok.norm) == doctest::Approx(qn.cq.value));
}

TEST_CASE("partially greedy constants") {
  Rng rng(11);
  SampleSpec spec;
  spec.random_count = 60;
  for (double p : {1.0, 2.0}) {
    LpNorm lp(p);
    auto pg = partially_greedy_constants(lp, kPow2, 16, 1.0, spec, rng);
    CHECK(pg.cp.value == doctest::Approx(1.0));
    CHECK(pg.csp.value == doctest::Approx(1.0));
    CHECK_FALSE(pg.unbounded_witness);
    CHECK(pg.cp.replay(lp) == doctest::Approx(pg.cp.value));
    CHECK(pg.csp.replay(lp) == doctest::Approx(pg.csp.value));
  }
  PresetInstance lac = make_preset("lacunary-small");
  for (double t : {1.0, 0.5}) {
    Rng rng2(12);
    auto pg = partially_greedy_constants(*lac.norm, lac.seq, 64, t, spec, rng2);
    CHECK(pg.csp.value <= std::max(1.0 / t, 2.0) + 1e-6);
    CHECK(pg.csp.replay(*lac.norm) == doctest::Approx(pg.csp.value));
  }
}

TEST_CASE("suppression unconditionality") {
  Rng rng(13);
  SampleSpec spec;
  spec.random_count = 40;
  LpNorm l2(2.0);
  ConstantEstimate ks = suppression_unconditionality_constant(l2, kPow2, 16,
                                                              spec, rng);
  CHECK(ks.value == doctest::Approx(1.0));

  PresetInstance oku = make_preset("oikhberg-unconditional");
  Rng rng2(14);
  ConstantEstimate ku = suppression_unconditionality_constant(
      *oku.norm, oku.seq, 40, spec, rng2);
  CHECK(ku.value <= 1.0 + 1e-9);
  CHECK(ku.value == doctest::Approx(1.0));

  PresetInstance ok = make_preset("oikhberg-small");
  Rng rng3(15);
  ConstantEstimate kp = suppression_unconditionality_constant(
      *ok.norm, ok.seq, 40, spec, rng3);
  CHECK(kp.value > 1.0 + 1e-6);  // the comb witnesses break suppression
  CHECK(kp.replay(*ok.norm) == doctest::Approx(kp.value));
}

TEST_CASE("quasi-greediness for largest coefficients") {
  Rng rng(16);
  LpNorm l2(2.0);
  ConstantEstimate ql = qglc_constant(l2, kPow2, 12, 500000, rng);
  CHECK(ql.value == doctest::Approx(1.0));  // disjoint support only grows l_p
  CHECK(ql.replay(l2) == doctest::Approx(ql.value));

  // a QGLC witness is itself a greedy-sum witness: same ratio, valid set
  PresetInstance pq = make_preset("mixedpq-m4");
  Rng rng2(17);
  ConstantEstimate qm = qglc_constant(*pq.norm, pq.seq, 20, 400000, rng2, {}, 4);
  CoeffVector u = signed_indicator(qm.witness.A, qm.witness.epsA, 20);
  CoeffVector y = u + qm.witness.x;
  CHECK(is_t_greedy_set(y, qm.witness.A, 1.0));
  CHECK(pq.norm->eval(project(y, qm.witness.A)) / pq.norm->eval(y) ==
        doctest::Approx(qm.value));
}

TEST_CASE("symmetry for largest coefficients") {
  Rng rng(18);
  LpNorm l2(2.0);
  PerturbationGrid grid;
  grid.indices = 2;
  ConstantEstimate slc = slc_constant(l2, kPow2, 10, 20000000, rng, grid, 2);
  CHECK(slc.value == doctest::Approx(1.0));
  CHECK(slc.direction == BoundDirection::exact);
  CHECK(slc.replay(l2) == doctest::Approx(slc.value));

  PresetInstance ok = make_preset("oikhberg-small");
  Rng rng2(19);
  ConstantEstimate so = slc_constant(*ok.norm, ok.seq, 24, 300000, rng2, grid, 1);
  CHECK(so.value <= 1.0 + 2.0 * std::sqrt(2.0) + 1e-9);
  CHECK(so.replay(*ok.norm) == doctest::Approx(so.value));
}

TEST_CASE("bidemocracy") {
  Rng rng(20);
  LpNorm l2(2.0), l1(1.0);
  ConstantEstimate b2 = bidemocracy_constant(l2, kPow2, 16, 500000, rng);
  CHECK(b2.value == doctest::Approx(1.0));
  CHECK(b2.direction == BoundDirection::exact);
  CHECK(b2.replay(l2) == doctest::Approx(b2.value));
  ConstantEstimate b1 = bidemocracy_constant(l1, kPow2, 16, 500000, rng);
  CHECK(b1.value == doctest::Approx(1.0));

  PresetInstance ok = make_preset("oikhberg-small");
  Rng rng2(21);
  ConstantEstimate bo = bidemocracy_constant(*ok.norm, ok.seq, 40, 500000, rng2);
  REQUIRE(bo.upper.has_value());
  CHECK(*bo.upper <= std::sqrt(2.0) + 1e-9);
  CHECK(bo.value <= *bo.upper + 1e-9);
}

TEST_CASE("ordering chains on exhaustively enumerated families") {
  Rng rng(22);
  LpNorm l2(2.0);
  DemocracyOptions eq;
  eq.max_cardinality = 4;
  eq.equal_cardinality = true;
  eq.set_range = 12;
  ConstantEstimate dd = democracy_like_constant(ConstantKind::Delta_d, l2,
                                                kPow2, 16, 2000000, rng, eq);
  ConstantEstimate ds = democracy_like_constant(ConstantKind::Delta_s, l2,
                                                kPow2, 16, 2000000, rng, eq);
  DemocracyOptions ord;
  ord.max_cardinality = 4;
  ConstantEstimate dc = democracy_like_constant(ConstantKind::Delta_c, l2,
                                                kPow2, 16, 2000000, rng, ord);
  ConstantEstimate doc = democracy_like_constant(ConstantKind::Delta_oc, l2,
                                                 kPow2, 16, 2000000, rng, ord);
  ConstantEstimate dosc = democracy_like_constant(ConstantKind::Delta_osc, l2,
                                                  kPow2, 16, 2000000, rng, ord);
  PerturbationGrid grid;
  grid.indices = 2;
  ConstantEstimate slc = slc_constant(l2, kPow2, 16, 50000000, rng, grid, 2);
  ConstantEstimate ddc = democracy_like_constant(ConstantKind::Delta_d, l2,
                                                 kPow2, 16, 2000000, rng, ord);
  CHECK(dd.value <= ds.value + 1e-9);
  CHECK(ds.value <= slc.value * slc.value + 1e-9);
  CHECK(dc.value <= ddc.value + 1e-9);
  CHECK(doc.value <= dosc.value + 1e-9);
}

TEST_CASE("witness replay across a battery of estimates") {
  Rng rng(23);
  PresetInstance lac = make_preset("lacunary-small");
  SampleSpec spec;
  spec.random_count = 30;
  std::vector<ConstantEstimate> ests;
  ests.push_back(ucc_constant(*lac.norm, lac.seq, 64, 100000, rng));
  DemocracyOptions opt;
  opt.max_cardinality = 3;
  ests.push_back(democracy_like_constant(ConstantKind::Delta_osc, *lac.norm,
                                         lac.seq, 64, 100000, rng, opt));
  auto qg = quasi_greedy_constant(*lac.norm, lac.seq, 64, 0.5, spec, rng);
  ests.push_back(qg.cq);
  ests.push_back(qg.csq);
  auto pg = partially_greedy_constants(*lac.norm, lac.seq, 64, 0.5, spec, rng);
  ests.push_back(pg.cp);
  ests.push_back(pg.csp);
  for (const ConstantEstimate& e : ests)
    CHECK(e.replay(*lac.norm) == doctest::Approx(e.value).epsilon(1e-9));
}
