#include "doctest.h"
#include "lrcc/json_io.hpp"
#include "test_util.hpp"

#include <random>

using namespace lrcc;
using lrcc::testing::gf49;

TEST_CASE("tower round trip") {
  auto F = gf49();
  ojson j = tower_to_json(*F);
  CHECK(j["p"] == 7);
  CHECK(j["modulus"] == ojson::array({4, 0, 1}));
  TowerPtr back = tower_from_json(j);
  CHECK(back->same_field(*F));
  CHECK(back->base_degree() == 1);
}

TEST_CASE("element coefficient serialization") {
  auto F = gf49();
  // 1 + b <-> [1, 1], little-endian in the polynomial basis
  CHECK(element_coeffs_json(*F, 8) == ojson::array({1, 1}));
  CHECK(element_from_coeffs_json(*F, ojson::array({1, 1})) == 8);
}

TEST_CASE("matrix round trip and csv") {
  std::mt19937_64 rng(61);
  MatrixGF M = lrcc::testing::random_matrix(gf49(), 3, 5, rng);
  MatrixGF back = matrix_from_json(matrix_to_json(M), gf49());
  CHECK(back == M);

  MatrixGF small(gf49(), 1, 3);
  small.set(0, 0, 0);
  small.set(0, 1, 8);
  small.set(0, 2, 3);
  CHECK(matrix_to_csv(small) == "0,1+b,3\n");
}

TEST_CASE("built code round trip") {
  BuiltCode bc = build_base_b(lrcc::testing::ex2_spec());
  ojson j = built_code_to_json(bc);
  BuiltCode back = built_code_from_json(j);
  CHECK(back.code.H() == bc.code.H());
  CHECK(back.code.k() == 8);
  CHECK(back.blocks.g() == 5);
  CHECK(back.regime == PhiRegime::classic);
  CHECK(back.part.groups == bc.part.groups);
}

TEST_CASE("spec round trips") {
  BaseCodeASpec a = lrcc::testing::ex1_initial_spec();
  BaseCodeASpec a2 = base_a_spec_from_json(base_a_spec_to_json(a));
  CHECK(a2.G == a.G);
  CHECK(a2.d == a.d);

  BaseCodeBSpec b = lrcc::testing::ex2_spec();
  BaseCodeBSpec b2 = base_b_spec_from_json(base_b_spec_to_json(b));
  CHECK(b2.alphas == b.alphas);
  CHECK(b2.tower->same_field(*b.tower));
  CHECK(b2.tower->base_degree() == 1);
}

TEST_CASE("plan round trip rebuilds the same plan") {
  BuiltCode base = build_base_b(lrcc::testing::ex2_spec());
  ConversionPlan plan = make_plan(base, 2, 1, plan_scalings_base_b(lrcc::testing::ex2_spec(), 2));
  ojson j = plan_to_json(plan);
  ConversionPlan back = plan_from_json(j);
  CHECK(back.HF == plan.HF);
  CHECK(back.t == 2);
  CHECK(back.scalings.has_value());

  // tampered final matrix is rejected
  j["HF"]["entries"][0][0] = 5;
  CHECK_THROWS_WITH_AS(plan_from_json(j), doctest::Contains("disagrees"), Error);
}

TEST_CASE("deterministic serialization") {
  BuiltCode bc = build_base_a(lrcc::testing::ex1_initial_spec());
  CHECK(built_code_to_json(bc).dump() == built_code_to_json(bc).dump());
}
