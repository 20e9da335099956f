#pragma once

#include "lrcc/construct.hpp"

namespace lrcc {

/// Static description of one merge conversion: which blocks of the base
/// code each initial code owns, which shared blocks survive into the final
/// code, and the elimination artifacts that turn the shared-block columns
/// into the punctured parity-check matrices.
struct ConversionPlan {
  BuiltCode base;
  std::size_t g = 0, ell = 0, t = 0, h = 0, s = 0;
  std::size_t width = 0;  // r + delta - 1

  std::vector<std::vector<std::size_t>> parts;  // P_1..P_t (block indices)
  std::vector<std::size_t> shared;              // P (block indices, size g-ell)

  // Global rows reordered so the first (g-ell-h)*r of them complete M13 to
  // full rank; identity when no elimination is needed.
  std::vector<std::size_t> global_row_order;
  MatrixGF M13, M13_inv;          // (g-ell-h)(r+delta-1) square, possibly 0x0
  std::vector<LinearCode> initial_codes;  // null(H||_{P_i u P})
  std::vector<MatrixGF> Hbar;             // punctured initial parity checks
  MatrixGF HF;
  LinearCode final_code;
  LocalityPartition final_part;
  PhiRegime regime = PhiRegime::classic;

  // Same-initial-code certificates: H||_{P_i} = diag(local_i, global_i) * H||_{P_1}.
  std::optional<std::vector<PlanScaling>> scalings;

  std::size_t n_I() const { return (s + g - ell) * width; }
  std::size_t n_F() const { return (ell + h) * width; }
};

ConversionPlan make_plan(const BuiltCode& base, std::size_t t, std::size_t h,
                         std::optional<std::vector<PlanScaling>> scalings = std::nullopt,
                         const Config& cfg = Config{});

/// Per-execution access ledger plus the produced final codeword.
struct ConversionTrace {
  std::vector<std::vector<std::size_t>> unchanged;  // U_i, coordinates of c_i
  std::vector<std::vector<std::size_t>> reads;      // D_i, coordinates of c_i
  std::vector<std::size_t> written;                 // final-code coordinates
  std::size_t rho_r = 0, rho_w = 0;
  std::vector<elem_t> final_codeword;
};

/// Merge conversion with distinct initial codes: reads r data coordinates
/// per retained block of every input, fills the remaining delta-1 through
/// the block's local MDS code, sums the retained tails and emits
/// (c_1|unchanged, ..., c_t|unchanged, c*).
ConversionTrace convert(const ConversionPlan& plan,
                        const std::vector<std::vector<elem_t>>& codewords);

/// Same conversion when all inputs are codewords of the first initial code,
/// driven by the certified diagonal scalings; requires h = g - ell.
ConversionTrace convert_same_initial(const ConversionPlan& plan,
                                     const std::vector<std::vector<elem_t>>& codewords);

struct AuditReport {
  AccessBound bound;          // the regime-matched lower bound
  std::size_t rho_r = 0, rho_w = 0;
  bool read_optimal = false, write_optimal = false;
  long long read_gap = 0, write_gap = 0;
  // the re-encode strawman: read everything, write everything
  std::size_t baseline_reads = 0, baseline_writes = 0;
};

AuditReport audit_optimality(const ConversionPlan& plan, const ConversionTrace& trace);

/// Final-code distance the plan's family guarantees, by regime.
long long plan_final_distance(const ConversionPlan& plan);

}  // namespace lrcc
