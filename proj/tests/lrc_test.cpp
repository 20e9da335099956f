#include "doctest.h"
#include "lrcc/construct.hpp"
#include "lrcc/lrc.hpp"
#include "test_util.hpp"

#include <random>

using namespace lrcc;
using lrcc::testing::gf49;

namespace {

// [4, 2, 3] MDS code over GF(7): 2x4 Vandermonde parity check.
BuiltCode small_mds() {
  auto F7 = FieldTower::make_auto(7, 1);
  MatrixGF H(F7, 2, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    H.set(0, j, 1);
    H.set(1, j, static_cast<elem_t>(j + 1));
  }
  BuiltCode bc;
  bc.code = LinearCode(H);
  bc.part = LocalityPartition::contiguous(1, 4, 2, 3);
  return bc;
}

}  // namespace

TEST_CASE("locality verification") {
  auto initial = build_base_a(lrcc::testing::ex1_initial_spec());
  LocalityReport rep = verify_locality(initial.code, initial.part);
  CHECK(rep.pass);
  for (const auto& g : rep.groups) {
    CHECK(g.size == 3);
    CHECK(g.dim <= 2);
    CHECK(g.distance >= 2);
  }

  // an MDS code is an optimal LRC with (k, n-k+1) locality on one group
  BuiltCode mds = small_mds();
  CHECK(verify_locality(mds.code, mds.part).pass);

  // demanding delta one larger than the group distance fails at group 0
  LocalityPartition too_much = mds.part;
  too_much.delta = 4;
  LocalityReport bad = verify_locality(mds.code, too_much);
  CHECK_FALSE(bad.pass);
  CHECK(*bad.first_failing_group == 0);
}

TEST_CASE("singleton bound values") {
  CHECK(singleton_bound(9, 4, 2, 2, true) == 4);
  CHECK(singleton_bound(51, 32, 2, 2, true) == 4);
  // r = k removes the locality deduction entirely
  CHECK(singleton_bound(14, 6, 6, 3, false) == 14 - 6 + 1);
  // infeasible parameters flag as non-positive
  CHECK(singleton_bound(6, 5, 1, 4, true) <= 0);
}

TEST_CASE("optimality checks") {
  auto initial = build_base_a(lrcc::testing::ex1_initial_spec());
  CHECK(is_optimal_lrc(initial.code, initial.part, PhiRegime::improved));

  auto mr = build_base_b(lrcc::testing::ex2_spec());
  CHECK(is_optimal_lrc(mr.code, mr.part, PhiRegime::classic));

  // dropping a global parity row leaves a [9, 5, 3] code that misses the
  // improved-regime bound
  std::vector<std::size_t> keep_rows{0, 1, 2, 3};
  LinearCode damaged(initial.code.H().rows_subset(keep_rows));
  CHECK(damaged.k() == 5);
  CHECK(min_distance(damaged) == 3);
  CHECK_FALSE(is_optimal_lrc(damaged, initial.part, PhiRegime::improved));
}

TEST_CASE("maximal recoverability") {
  auto mr = build_base_b(lrcc::testing::ex2_spec());
  MrReport rep = is_mr(mr.code, mr.part);
  CHECK(rep.mr);
  CHECK(rep.patterns_checked == 243);
  CHECK(rep.patterns_total == 243);

  BuiltCode mds = small_mds();
  CHECK(is_mr(mds.code, mds.part).mr);

  // the 17-group merged family is not maximally recoverable: the very
  // first deletion pattern (keep the first two coordinates of each group)
  // already fails (regression value)
  auto family = build_base_a(lrcc::testing::ex1_family_spec());
  MrReport fam = is_mr(family.code, family.part);
  CHECK_FALSE(fam.mr);
  CHECK(fam.patterns_checked == 0);
  REQUIRE(fam.witness_kept.has_value());
  CHECK((*fam.witness_kept)[0] == 0);
  CHECK((*fam.witness_kept)[1] == 1);
  CHECK((*fam.witness_kept)[2] == 3);
}

TEST_CASE("access bounds on the worked instances") {
  // merged-family instance: t=8, h=1, r=2, delta=2
  BoundInputs ex1{51, 4, 8, 2, 2, 4, 9, PhiRegime::improved};
  AccessBound nb = access_lb_new(ex1);
  CHECK(nb.rho_w == 3);
  CHECK(nb.rho_r == 16);

  // linearized instance: t=2, h=1, r=2, delta=2
  BoundInputs ex2{15, 4, 2, 2, 2, 5, 9, PhiRegime::classic};
  AccessBound nb2 = access_lb_new(ex2);
  CHECK(nb2.rho_w == 3);
  CHECK(nb2.rho_r == 4);
}

TEST_CASE("general-family bounds evaluate to h(r+delta-1) and thr") {
  for (long long h = 0; h <= 2; ++h) {
    long long ell = 6, t = 2, r = 3, delta = 3, w = r + delta - 1, s = ell / t;
    long long g = ell + 2;
    BoundInputs bi{(ell + h) * w, s * r, t, r, delta, delta + h * w,
                   (s + (g - ell)) * w, PhiRegime::classic};
    AccessBound nb = access_lb_new(bi);
    CHECK(nb.rho_w == h * w);
    CHECK(nb.rho_r == t * h * r);
  }
  for (long long h = 0; h <= 2; ++h) {
    long long ell = 9, t = 3, r = 2, delta = 2, w = r + delta - 1, s = ell / t;
    BoundInputs bi{(ell + h) * w, s * r, t, r, delta, h * w + 1, (s + h) * w,
                   PhiRegime::improved};
    AccessBound nb = access_lb_new(bi);
    CHECK(nb.rho_w == h * w);
    CHECK(nb.rho_r == t * h * r);
  }
}

TEST_CASE("old and new bounds coincide for delta = 2") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    BoundInputs b;
    b.t = 2 + rng() % 6;
    b.k = 2 + rng() % 40;
    b.r = 1 + rng() % 10;
    b.delta = 2;
    b.d = 2 + rng() % 30;
    b.n_I = b.k + b.d + rng() % 40;
    b.n_F = b.t * b.k + b.d + rng() % 60;
    b.regime = PhiRegime::classic;
    AccessBound nb = access_lb_new(b), ob = access_lb_old(b);
    CHECK(nb.rho_w == ob.rho_w);
    CHECK(nb.rho_r == ob.rho_r);
  }
}

TEST_CASE("new read bound dominates on the structured scenarios") {
  // scenario 1: Delta a positive multiple of r+delta-1, delta > 2
  std::mt19937_64 rng(32);
  int produced = 0;
  while (produced < 300) {
    long long r = 1 + rng() % 6, delta = 3 + rng() % 4;
    long long t = 2 + rng() % 4, k = r * (1 + rng() % 8);
    long long d = 2 + rng() % 25;
    long long phi_v = phi((t - 1) * k, r, delta, PhiRegime::classic);
    long long j = 1 + rng() % 5;
    long long n_F = 2 * d + (t - 1) * k - 2 + phi_v + j * (r + delta - 1);
    long long n_I = k + d - 1 + rng() % 20;  // keeps d <= n_I - k + 1
    BoundInputs b{n_F, k, t, r, delta, d, n_I, PhiRegime::classic};
    AccessBound nb = access_lb_new(b), ob = access_lb_old(b);
    REQUIRE(nb.delta_term == j * (r + delta - 1));
    CHECK(nb.rho_r >= ob.rho_r);
    CHECK(nb.rho_w >= ob.rho_w);
    ++produced;
  }
  // scenario 2: k_I = kr, n_F = (tk+m)(r+delta-1), optimal final distance
  produced = 0;
  while (produced < 300) {
    long long r = 1 + rng() % 6, delta = 3 + rng() % 4;
    long long t = 2 + rng() % 4, k = 3 + rng() % 8;
    long long m = 1 + rng() % (t * k - 2);
    if (t * k - m < 2) continue;
    long long w = r + delta - 1;
    long long n_F = (t * k + m) * w;
    long long d = m * w + delta;
    long long k_I = k * r;
    long long n_I = k_I + d - 1 + rng() % 20;
    BoundInputs b{n_F, k_I, t, r, delta, d, n_I, PhiRegime::classic};
    AccessBound nb = access_lb_new(b), ob = access_lb_old(b);
    CHECK(nb.rho_r >= ob.rho_r);
    CHECK(nb.rho_w >= ob.rho_w);
    ++produced;
  }
}

TEST_CASE("comparison-grid regression rows") {
  auto row = [](long long nF, long long delta) {
    BoundInputs b{nF, 40, 3, 10, delta, 15, 80, PhiRegime::classic};
    return std::pair<long long, long long>(access_lb_old(b).rho_r,
                                           access_lb_new(b).rho_r);
  };
  CHECK(row(141, 3) == std::pair<long long, long long>(48, 69));
  CHECK(row(133, 4) == std::pair<long long, long long>(69, 108));
  CHECK(row(150, 5) == std::pair<long long, long long>(24, 90));

  // non-positive slack falls back to reading everything
  BoundInputs small{100, 40, 3, 10, 3, 15, 80, PhiRegime::classic};
  CHECK(access_lb_old(small).delta_term <= 0);
  CHECK(access_lb_old(small).rho_r == 120);
}

TEST_CASE("greedy B-set construction") {
  LocalityPartition part = LocalityPartition::contiguous(5, 4, 2, 3);

  BSetResult empty = find_B_set(part, {});
  CHECK(empty.B.empty());
  CHECK(empty.blocks.empty());

  std::vector<std::size_t> one_group{0, 1, 2, 3};
  BSetResult full = find_B_set(part, one_group);
  CHECK(full.B.size() == 2);  // delta-1 elements of the single group
  CHECK(full.blocks.size() == 1);

  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t m = 2 + rng() % 5;
    std::size_t r = 1 + rng() % 4, delta = 2 + rng() % 3;
    LocalityPartition p = LocalityPartition::contiguous(m, r + delta - 1, r, delta);
    std::size_t n = p.n();
    std::vector<std::size_t> V;
    for (std::size_t c = 0; c < n; ++c)
      if (rng() & 1) V.push_back(c);
    BSetResult res = find_B_set(p, V);
    CHECK(res.B.size() == (delta - 1) * (V.size() / (r + delta - 1)));
    auto owner = p.group_of_coordinate(n);
    for (std::size_t b1 = 0; b1 < res.blocks.size(); ++b1) {
      CHECK(res.blocks[b1].size() <= delta - 1);
      for (std::size_t c : res.blocks[b1]) {
        CHECK(owner[c] == res.repair_sets[b1]);  // one repair set per block
        CHECK(std::find(V.begin(), V.end(), c) != V.end());
      }
      // never touches an earlier block's repair set
      for (std::size_t b2 = 0; b2 < b1; ++b2)
        CHECK(res.repair_sets[b1] != res.repair_sets[b2]);
    }
  }
}

TEST_CASE("length ceiling formula") {
  // d = 2delta+1, r = delta+1, r | k: the even branch collapses to
  // 2delta/(delta+1) * q^{delta+1} / (q-1)
  for (long long q : {8LL, 16LL, 49LL}) {
    for (long long delta : {2LL, 3LL}) {
      long long r = delta + 1, d = 2 * delta + 1, w = r + delta - 1;
      long long u = 2, v = 0, wpar = u + 1;
      double got = superlinear_length_bound(wpar * w, u * r, d, r, delta, q, wpar, u, v);
      double expect = (2.0 * delta / (delta + 1)) * std::pow(double(q), delta + 1) /
                      (q - 1);
      CHECK(got == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  // frozen instance at field size 49, (r, delta, d) = (2, 2, 5)
  CHECK(superlinear_length_bound(9, 4, 5, 2, 2, 49, 3, 2, 0) ==
        doctest::Approx(75.03125).epsilon(1e-12));

  // t = floor((d-1)/delta) too small
  CHECK_THROWS_WITH_AS(superlinear_length_bound(9, 4, 4, 2, 2, 49, 3, 2, 0),
                       doctest::Contains("PreconditionViolated"), Error);

  // odd-t branch exercised: d = 3 delta + 1 gives t = 3
  long long delta = 2, r = 3, width = r + delta - 1;
  long long blocks = 5, u = 2, v = 0;
  double val = superlinear_length_bound(blocks * width, u * r, 7, r, delta, 11,
                                        blocks, u, v);
  double expo = (2.0 * (blocks - u) * r - 2.0 * v - 2.0) / (3 - 1);
  double expect = (double(width) / r) * ((3 - 1) / (2.0 * 10) * std::pow(11.0, expo) + 1);
  CHECK(val == doctest::Approx(expect).epsilon(1e-12));
}
