#pragma once

#include <optional>

#include "lrcc/lrc.hpp"

namespace lrcc {

/// A built parity-check matrix together with its repair-group partition and
/// block decomposition, plus the optimality regime its family lives in.
struct BuiltCode {
  LinearCode code;
  LocalityPartition part;
  BlockStructure blocks;
  PhiRegime regime = PhiRegime::classic;
};

/// Family A: per-group Vandermonde local rows (powers 0..delta-2) over a
/// generating set G_i, shared global rows (powers delta-1..d-2).
struct BaseCodeASpec {
  TowerPtr tower;
  std::size_t m = 0, r = 0, delta = 0, d = 0;
  std::vector<std::vector<elem_t>> G;  // m sets of r+delta-1 distinct elements
};

struct ConditionGViolation {
  std::vector<std::size_t> S;  // offending index set (0-based)
  std::size_t union_size = 0;
  std::size_t required = 0;
};

struct ConditionGReport {
  bool pass = true;
  std::size_t subsets_checked = 0;
  std::vector<ConditionGViolation> violations;  // every violating subset, in enumeration order
};

/// Exhaustive check of the union-size condition over every index subset S
/// with 2 <= |S| <= floor((d-1)/delta):
///   |union of G_i over S| >= (r + delta/2 - 1)|S| + delta/2.
ConditionGReport check_condition_g(const BaseCodeASpec& spec);

BuiltCode build_base_a(const BaseCodeASpec& spec, const Config& cfg = Config{});

/// Scaled copies L * G_j of the whole generating family, one per leader.
/// All resulting codes are equal (the scaled parity-check matrix is a
/// diagonal row scaling of the original). Leaders must be nonzero, and
/// every G_j must sit inside a single coset of the chosen multiplicative
/// subgroup, 0 excepted.
std::vector<BaseCodeASpec> coset_family_base_a(const BaseCodeASpec& spec,
                                               std::uint64_t subgroup_order,
                                               const std::vector<elem_t>& leaders);

/// Merged family: every non-shared set of `spec` scaled by every leader, in
/// leader order, followed by the shared set last. This is the base code a
/// merge plan carves its initial codes from.
BaseCodeASpec merged_family_spec_a(const BaseCodeASpec& spec, std::size_t shared_index,
                                   const std::vector<elem_t>& leaders);

/// Family B: identical local Vandermonde block P over evaluation points
/// alpha_i in the marked subfield GF(q), global rows built from the twisted
/// powers D_{gamma^i}^j(beta_c) with beta_c = sum_j gamma_j alpha_c^{delta-2+j}.
struct BaseCodeBSpec {
  TowerPtr tower;  // GF(q^h) with base_degree marking GF(q)
  std::size_t m = 0, r = 0, delta = 0, h = 0;
  std::vector<elem_t> alphas;            // r+delta-1 distinct nonzero subfield elements
  std::vector<elem_t> gammas;            // basis of GF(q^h) over GF(q); empty = b^{j-1}
};

BuiltCode build_base_b(const BaseCodeBSpec& spec, const Config& cfg = Config{});

/// The twisted-power operator underlying the global rows of family B.
elem_t twisted_power(const FieldTower& F, elem_t alpha, elem_t beta, std::uint32_t i);

struct DiagonalCertificate {
  // Overlapping block windows W_i = {(i-1)u .. (i-1)u + u + h/r - 1} and the
  // diagonal matrices with H||_{W_i} = D_i * H||_{W_1}; all windows define
  // the same code.
  std::vector<std::vector<std::size_t>> windows;
  std::vector<MatrixGF> D;  // full-window diagonals, D[0] = I
  bool verified = false;
};

/// Certifies that the overlapping windows of a family-B code are all the
/// same code. Requires h == r (one shared block per window step).
DiagonalCertificate diagonal_family_base_b(const BaseCodeBSpec& spec, std::size_t u,
                                           const Config& cfg = Config{});

/// Per-window diagonal scalings used by the same-initial-code conversion:
/// D_i with H||_{P_i} = D_i * H||_{P_1} for the plan windows P_i of width s.
/// first = local-row scalings (s*(delta-1)), second = global-row scalings.
struct PlanScaling {
  std::vector<elem_t> local;
  std::vector<elem_t> global;
};

std::vector<PlanScaling> plan_scalings_base_b(const BaseCodeBSpec& spec, std::size_t t);
std::vector<PlanScaling> plan_scalings_base_a(const BaseCodeASpec& merged,
                                              const std::vector<elem_t>& leaders,
                                              std::size_t sets_per_leader);

}  // namespace lrcc
