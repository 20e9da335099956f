#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lrcc/code.hpp"
#include "lrcc/partition.hpp"

namespace lrcc {

/// Which distance-optimality regime a family lives in. The two formulas
/// differ in the locality deduction phi(k, r, delta):
///   classic : phi = (ceil(k/r) - 1)(delta - 1)
///   improved: phi = ceil(k/r) (delta - 1), valid when r = d - delta and
///             (r + delta - 1) | n.
/// The caller picks the regime; nothing here auto-detects it.
enum class PhiRegime { classic, improved };

long long phi(long long k, long long r, long long delta, PhiRegime regime);

/// Right-hand side of the Singleton-type bound for the chosen regime. May
/// be non-positive, which flags an infeasible parameter set.
long long singleton_bound(long long n, long long k, long long r, long long delta,
                          bool improved);

struct GroupCheck {
  std::size_t group = 0;
  std::size_t size = 0;
  std::size_t dim = 0;
  int distance = 0;
  bool pass = false;
};

struct LocalityReport {
  bool pass = false;
  std::vector<GroupCheck> groups;
  std::optional<std::size_t> first_failing_group;
};

/// Per-group check of |S_i| <= r+delta-1, dim(C|_{S_i}) <= r and
/// d(C|_{S_i}) >= delta.
LocalityReport verify_locality(const LinearCode& C, const LocalityPartition& part,
                               const Config& cfg = Config{});

bool is_optimal_lrc(const LinearCode& C, const LocalityPartition& part,
                    PhiRegime regime, const Config& cfg = Config{});

struct MrReport {
  bool mr = false;
  std::uint64_t patterns_checked = 0;
  std::uint64_t patterns_total = 0;
  // Kept coordinates of the earliest pattern whose punctured code fails
  // the MDS test, when not MR.
  std::optional<std::vector<std::size_t>> witness_kept;
};

/// Exhaustive maximal-recoverability check: for every way of deleting
/// delta-1 coordinates from each group, the punctured code must be MDS of
/// unchanged dimension. Patterns are enumerated in mixed-radix order over
/// per-group combinations and checked in parallel chunks; the earliest
/// failing pattern in that order is the witness.
MrReport is_mr(const LinearCode& C, const LocalityPartition& part,
               const Config& cfg = Config{});

struct BoundInputs {
  long long n_F = 0;
  long long k = 0;  // per-initial-code dimension
  long long t = 0;
  long long r = 0;
  long long delta = 0;
  long long d = 0;    // final-code minimum distance
  long long n_I = 0;  // initial-code length
  PhiRegime regime = PhiRegime::classic;
};

struct AccessBound {
  long long rho_w = 0;
  long long rho_r = 0;
  long long delta_term = 0;  // the Delta (new) or Delta-bar (old) in the read branch
};

AccessBound access_lb_new(const BoundInputs& b);
AccessBound access_lb_old(const BoundInputs& b);  // regime-independent

struct BSetResult {
  std::vector<std::size_t> B;                     // ascending
  std::vector<std::vector<std::size_t>> blocks;   // B_1..B_tau in pick order
  std::vector<std::size_t> repair_sets;           // group index of each B_t
};

/// Greedy construction of a subset B of V of size
/// (delta-1) * floor(|V| / (r+delta-1)) whose sub-blocks each sit in one
/// repair set, never touching a previously used repair set.
BSetResult find_B_set(const LocalityPartition& part, const std::vector<std::size_t>& V);

/// Two-branch length ceiling for optimal LRCs, parameterized by
/// n = w(r+delta-1), k = ur+v and t = floor((d-1)/delta).
double superlinear_length_bound(long long n, long long k, long long d, long long r,
                                long long delta, long long q, long long w,
                                long long u, long long v);

}  // namespace lrcc
