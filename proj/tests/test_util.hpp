#pragma once

#include <random>

#include "lrcc/convert.hpp"

namespace lrcc::testing {

// GF(49) = F_7[x]/(x^2 - 3) with the prime subfield marked; beta = index 7,
// beta^2 = 3.
inline TowerPtr gf49() {
  static TowerPtr t = FieldTower::make(7, 2, {4, 0, 1}, 1);
  return t;
}

inline constexpr elem_t kBeta = 7;  // index of b in GF(49)

// Initial code of the first worked family: three generating sets over
// GF(49), (r, delta, d) = (2, 2, 4).
inline BaseCodeASpec ex1_initial_spec() {
  BaseCodeASpec s;
  s.tower = gf49();
  s.m = 3;
  s.r = 2;
  s.delta = 2;
  s.d = 4;
  s.G = {{5, 6, 0}, {1, 2, 3}, {3, 4, 5}};
  return s;
}

// Coset leaders 1, b, 1+b, ..., 6+b.
inline std::vector<elem_t> ex1_leaders() {
  std::vector<elem_t> L{1};
  for (elem_t i = 0; i < 7; ++i) L.push_back(kBeta + i);
  return L;
}

// 17-block merged family: scaled copies of sets 1 and 2 per leader, the
// shared set 0 last.
inline BaseCodeASpec ex1_family_spec() {
  return merged_family_spec_a(ex1_initial_spec(), 0, ex1_leaders());
}

// Linearized family over GF(49): q=7, h=2, r=2, delta=2, m=5,
// evaluation points 1, 2, 3.
inline BaseCodeBSpec ex2_spec() {
  BaseCodeBSpec s;
  s.tower = gf49();
  s.m = 5;
  s.r = 2;
  s.delta = 2;
  s.h = 2;
  s.alphas = {1, 2, 3};
  return s;
}

inline std::vector<elem_t> random_codeword(const LinearCode& C, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, C.tower()->size() - 1);
  std::vector<elem_t> msg(C.k());
  for (auto& m : msg) m = static_cast<elem_t>(dist(rng));
  return encode(C, msg);
}

inline MatrixGF random_matrix(TowerPtr t, std::size_t rows, std::size_t cols,
                              std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, t->size() - 1);
  MatrixGF M(t, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M.set(i, j, static_cast<elem_t>(dist(rng)));
  return M;
}

}  // namespace lrcc::testing
