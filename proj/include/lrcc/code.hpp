#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "lrcc/config.hpp"
#include "lrcc/matrix.hpp"
#include "lrcc/partition.hpp"

namespace lrcc {

/// A linear code given by its parity-check matrix. n and k are derived on
/// construction; the minimum distance is computed on demand and cached
/// (copies share the cache).
class LinearCode {
 public:
  LinearCode() = default;
  explicit LinearCode(MatrixGF H);

  const MatrixGF& H() const { return H_; }
  const TowerPtr& tower() const { return H_.tower(); }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }

  std::optional<int> cached_distance() const;
  void cache_distance(int d) const;

 private:
  MatrixGF H_;
  std::size_t n_ = 0, k_ = 0;

  struct Cache {
    std::mutex mu;
    std::optional<int> d;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool is_codeword(const LinearCode& C, const std::vector<elem_t>& c);

/// Deterministic generator matrix: the RREF-derived kernel basis of H.
MatrixGF generator_matrix(const LinearCode& C);

std::vector<elem_t> encode(const LinearCode& C, const std::vector<elem_t>& message);

/// Exact minimum Hamming distance. Strategy: enumerate the q^k codewords
/// when that fits the enumeration limit, otherwise search for the smallest
/// dependent column subset of H. Throws ZeroCode for k = 0 and
/// WorkCeilingExceeded (with the verified lower bound) past the budget.
int min_distance(const LinearCode& C, const Config& cfg = Config{});

// Both strategies exposed individually so they can cross-check each other.
int distance_by_enumeration(const LinearCode& C, const Config& cfg = Config{});
int distance_by_column_search(const LinearCode& C, const Config& cfg = Config{});

/// Punctured code on the kept coordinate set S (0-based, ascending). The
/// parity-check matrix comes from shortening the dual: rows of H are
/// recombined so that everything supported outside S is eliminated, then
/// the outside columns are dropped.
LinearCode puncture(const LinearCode& C, const std::vector<std::size_t>& S);

bool is_mds(const LinearCode& C, const Config& cfg = Config{});

}  // namespace lrcc
