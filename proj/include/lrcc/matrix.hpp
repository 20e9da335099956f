#pragma once

#include <cstddef>
#include <vector>

#include "lrcc/gf.hpp"

namespace lrcc {

/// Dense exact matrix over one FieldTower, entries stored row-major as
/// canonical element indices.
class MatrixGF {
 public:
  MatrixGF() = default;
  MatrixGF(TowerPtr tower, std::size_t rows, std::size_t cols)
      : tw_(std::move(tower)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static MatrixGF identity(TowerPtr tower, std::size_t n);

  const TowerPtr& tower() const { return tw_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  elem_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, elem_t v) { a_[i * cols_ + j] = v; }

  MatrixGF transpose() const;
  MatrixGF operator*(const MatrixGF& o) const;
  MatrixGF operator+(const MatrixGF& o) const;
  MatrixGF operator-(const MatrixGF& o) const;
  bool operator==(const MatrixGF& o) const;

  MatrixGF rows_subset(const std::vector<std::size_t>& idx) const;
  MatrixGF cols_subset(const std::vector<std::size_t>& idx) const;
  static MatrixGF vstack(const MatrixGF& top, const MatrixGF& bottom);
  static MatrixGF hstack(const MatrixGF& left, const MatrixGF& right);

  std::vector<elem_t> mul_vec(const std::vector<elem_t>& v) const;      // M v
  std::vector<elem_t> mul_vec_left(const std::vector<elem_t>& v) const; // v M

  bool is_zero() const;

 private:
  TowerPtr tw_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<elem_t> a_;
};

struct RrefResult {
  MatrixGF R;                       // zero rows dropped
  std::vector<std::size_t> pivots;  // strictly increasing column indices
  std::size_t rank = 0;
};

// Gaussian elimination with first-nonzero pivoting; row swaps pick the
// lowest row index, so the result is deterministic.
RrefResult rref(const MatrixGF& M);
std::size_t rank(const MatrixGF& M);

MatrixGF invert(const MatrixGF& M);        // Singular on rank defect
MatrixGF kernel_basis(const MatrixGF& M);  // rows span {x : M x^T = 0}
std::vector<elem_t> solve(const MatrixGF& M, const std::vector<elem_t>& b);

void check_same_tower(const MatrixGF& a, const MatrixGF& b);

/// The block-diagonal-plus-global-row shape every parity-check matrix in
/// this library takes: g local blocks A_1..A_g on the diagonal and global
/// blocks B_1..B_g stacked under them.
struct BlockStructure {
  TowerPtr tower;
  std::vector<MatrixGF> A;  // g blocks, each local_rows x width
  std::vector<MatrixGF> B;  // g blocks, each global_rows x width

  std::size_t g() const { return A.size(); }
  std::size_t width() const { return A.empty() ? 0 : A[0].cols(); }
  std::size_t local_rows() const { return A.empty() ? 0 : A[0].rows(); }
  std::size_t global_rows() const { return B.empty() ? 0 : B[0].rows(); }

  void validate() const;
  MatrixGF assemble() const;  // the full parity-check matrix

  // Keeps the selected diagonal blocks plus their global columns; indices
  // are 0-based and must be strictly increasing.
  MatrixGF select(const std::vector<std::size_t>& blocks) const;
  BlockStructure select_structure(const std::vector<std::size_t>& blocks) const;
};

}  // namespace lrcc
