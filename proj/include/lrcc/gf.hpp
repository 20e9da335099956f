#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lrcc/config.hpp"
#include "lrcc/errors.hpp"

namespace lrcc {

using elem_t = std::uint32_t;  // canonical index c0 + c1*p + ... + c_{m-1}*p^{m-1}

/// GF(p^m) in the polynomial basis modulo a monic irreducible polynomial,
/// optionally marked with a subfield GF(p^b), b | m, used as the "q" of the
/// linearized constructions. Elements are addressed by their canonical index,
/// which is the little-endian base-p encoding of the coefficient vector.
class FieldTower {
 public:
  // modulus: coefficients c0..cm of x^m + c_{m-1}x^{m-1} + ... + c0 with the
  // leading 1 included (size m+1). Irreducibility is verified.
  static std::shared_ptr<const FieldTower> make(std::uint32_t p, std::uint32_t m,
                                                const std::vector<std::uint32_t>& modulus,
                                                std::uint32_t base_degree = 0,
                                                const Config& cfg = Config{});

  // Picks the monic irreducible polynomial of degree m over GF(p) whose
  // non-leading coefficient vector has the smallest canonical index.
  static std::shared_ptr<const FieldTower> make_auto(std::uint32_t p, std::uint32_t m,
                                                     std::uint32_t base_degree = 0,
                                                     const Config& cfg = Config{});

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint64_t size() const { return size_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t base_degree() const { return base_degree_; }
  bool has_subfield() const { return base_degree_ != 0; }
  std::uint64_t subfield_size() const;  // p^b

  bool same_field(const FieldTower& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

  // --- scalar arithmetic on canonical indices ---
  elem_t zero() const { return 0; }
  elem_t one() const { return 1; }
  elem_t add(elem_t a, elem_t b) const;
  elem_t sub(elem_t a, elem_t b) const;
  elem_t neg(elem_t a) const;
  elem_t mul(elem_t a, elem_t b) const;
  elem_t inv(elem_t a) const;  // throws on zero
  elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
  elem_t pow(elem_t a, std::uint64_t e) const;
  elem_t from_int(std::uint64_t v) const { return static_cast<elem_t>(v % p_); }

  std::vector<std::uint32_t> coeffs(elem_t a) const;
  elem_t from_coeffs(const std::vector<std::uint32_t>& c) const;

  // x^(q^i) with q = p^base_degree; requires a marked subfield.
  elem_t frobenius(elem_t x, std::uint32_t i, std::uint64_t q) const;
  elem_t frobenius(elem_t x, std::uint32_t i) const;
  bool in_subfield(elem_t x) const;  // x^(p^b) == x

  std::uint64_t element_order(elem_t a) const;  // order in the multiplicative group
  elem_t primitive_element() const;             // smallest-index generator of F*

  std::string to_string(elem_t a) const;  // "0", "3", "b", "1+b", "2+3b^2", ...

  struct Coset {
    elem_t leader;                 // smallest-index member
    std::vector<elem_t> elements;  // ascending
  };
  struct CosetDecomposition {
    std::uint64_t subgroup_order;
    std::vector<elem_t> subgroup;  // ascending
    std::vector<Coset> cosets;     // ordered by leader
  };
  CosetDecomposition coset_enumerate(std::uint64_t subgroup_order) const;

 private:
  FieldTower() = default;

  std::uint32_t p_ = 0, m_ = 0, base_degree_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> modulus_;

  // Dense per-tower caches; built eagerly for small fields.
  bool tables_ = false;
  std::vector<elem_t> mul_table_;  // size^2 when tables_
  std::vector<elem_t> inv_table_;  // size when tables_

  mutable std::once_flag primitive_once_;
  mutable elem_t primitive_cache_ = 0;

  elem_t mul_nocache(elem_t a, elem_t b) const;
  void build_tables();
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Convenience value wrapper so element expressions read naturally in tests
/// and builders. Not used on hot paths.
struct FieldElement {
  TowerPtr tower;
  elem_t v = 0;

  FieldElement() = default;
  FieldElement(TowerPtr t, elem_t val) : tower(std::move(t)), v(val) {}

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.tower, a.tower->add(a.v, b.v)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.tower, a.tower->sub(a.v, b.v)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.tower, a.tower->mul(a.v, b.v)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.v == b.v && a.tower->same_field(*b.tower);
  }
};

namespace poly_gfp {
// Dense polynomial helpers over the prime field GF(p), little-endian
// coefficient vectors. Used for modulus validation and reduction.
std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a,
                               const std::vector<std::uint32_t>& b, std::uint32_t p);
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);
}  // namespace poly_gfp

}  // namespace lrcc
