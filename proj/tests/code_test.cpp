#include "doctest.h"
#include "lrcc/code.hpp"
#include "lrcc/construct.hpp"
#include "test_util.hpp"

#include <random>
#include <set>

using namespace lrcc;
using lrcc::testing::gf49;

TEST_CASE("distances of the worked examples") {
  auto initial = build_base_a(lrcc::testing::ex1_initial_spec());
  CHECK(initial.code.n() == 9);
  CHECK(initial.code.k() == 4);
  CHECK(min_distance(initial.code) == 4);

  auto mr = build_base_b(lrcc::testing::ex2_spec());
  CHECK(mr.code.n() == 15);
  CHECK(mr.code.k() == 8);
  CHECK(min_distance(mr.code) == 5);  // (floor(h/r)+1)(delta-1) + h + 1
}

TEST_CASE("zero code has no distance") {
  LinearCode C(MatrixGF::identity(gf49(), 5));
  CHECK(C.k() == 0);
  CHECK_THROWS_WITH_AS(min_distance(C), doctest::Contains("ZeroCode"), Error);
}

TEST_CASE("enumeration and column search agree") {
  std::mt19937_64 rng(21);
  auto F3 = FieldTower::make_auto(3, 1);
  auto F4 = FieldTower::make_auto(2, 2);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    TowerPtr F = trial % 2 ? F3 : F4;
    MatrixGF H = lrcc::testing::random_matrix(F, 3, 8, rng);
    LinearCode C(H);
    if (C.k() == 0 || C.k() > 6) continue;
    CHECK(distance_by_enumeration(C) == distance_by_column_search(C));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("puncture") {
  auto initial = build_base_a(lrcc::testing::ex1_initial_spec());
  std::vector<std::size_t> all(9);
  for (std::size_t i = 0; i < 9; ++i) all[i] = i;
  LinearCode whole = puncture(initial.code, all);
  CHECK(whole.n() == 9);
  CHECK(whole.k() == 4);

  CHECK_THROWS_WITH_AS(puncture(initial.code, {}), doctest::Contains("EmptySupport"),
                       Error);

  // punctured codewords are restrictions of codewords
  std::mt19937_64 rng(22);
  std::vector<std::size_t> S{0, 2, 3, 4, 6, 7, 8};
  LinearCode punc = puncture(initial.code, S);
  for (int i = 0; i < 30; ++i) {
    auto cw = lrcc::testing::random_codeword(initial.code, rng);
    std::vector<elem_t> restricted;
    for (auto c : S) restricted.push_back(cw[c]);
    CHECK(is_codeword(punc, restricted));
  }
}

TEST_CASE("dimension is preserved when few coordinates are deleted") {
  // n - |S| < d keeps the dimension
  std::mt19937_64 rng(23);
  auto F5 = FieldTower::make_auto(5, 1);
  int runs = 0;
  while (runs < 40) {
    MatrixGF H = lrcc::testing::random_matrix(F5, 3, 9, rng);
    LinearCode C(H);
    if (C.k() == 0) continue;
    int d = min_distance(C);
    if (d < 2) continue;
    ++runs;
    std::size_t del = 1 + rng() % (d - 1);
    std::vector<std::size_t> keep;
    for (std::size_t c = del; c < C.n(); ++c) keep.push_back(c);
    CHECK(puncture(C, keep).k() == C.k());
  }
}

TEST_CASE("mds checks") {
  // local group codes are MDS
  auto mr = build_base_b(lrcc::testing::ex2_spec());
  LinearCode local(mr.blocks.A[0]);
  CHECK(local.n() == 3);
  CHECK(local.k() == 2);
  CHECK(is_mds(local));

  // repetition code [3,1,3] over GF(7)
  auto F7 = FieldTower::make_auto(7, 1);
  MatrixGF H(F7, 2, 3);
  H.set(0, 0, 1); H.set(0, 1, 6);
  H.set(1, 1, 1); H.set(1, 2, 6);
  LinearCode rep(H);
  CHECK(rep.k() == 1);
  CHECK(min_distance(rep) == 3);
  CHECK(is_mds(rep));

  auto initial = build_base_a(lrcc::testing::ex1_initial_spec());
  CHECK_FALSE(is_mds(initial.code));  // 4 != 9-4+1
}

TEST_CASE("encode") {
  auto initial = build_base_a(lrcc::testing::ex1_initial_spec());
  const LinearCode& C = initial.code;

  std::vector<elem_t> zero(C.k(), 0);
  auto zcw = encode(C, zero);
  CHECK(std::all_of(zcw.begin(), zcw.end(), [](elem_t v) { return v == 0; }));

  std::vector<elem_t> e1(C.k(), 0);
  e1[0] = 1;
  MatrixGF G = generator_matrix(C);
  auto first = encode(C, e1);
  for (std::size_t j = 0; j < C.n(); ++j) CHECK(first[j] == G.at(0, j));

  std::mt19937_64 rng(24);
  std::set<std::vector<elem_t>> seen;
  for (int i = 0; i < 40; ++i) {
    std::vector<elem_t> msg(C.k());
    for (auto& m : msg) m = static_cast<elem_t>(rng() % 49);
    auto cw = encode(C, msg);
    CHECK(is_codeword(C, cw));
    seen.insert(cw);
  }
  CHECK(seen.size() >= 35);  // distinct messages give distinct codewords

  CHECK_THROWS_WITH_AS(encode(C, {1, 2}), doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("work ceiling reports partial progress") {
  auto family = build_base_a(lrcc::testing::ex1_family_spec());
  Config tiny;
  tiny.distance_work_ceiling = 100;
  try {
    distance_by_column_search(family.code, tiny);
    FAIL("expected a ceiling error");
  } catch (const WorkCeilingError& e) {
    CHECK(e.partial_lower_bound() >= 0);
    CHECK(e.progress() > 0);
  }
}
