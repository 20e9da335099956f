#include "lrcc/matrix.hpp"

#include <algorithm>

namespace lrcc {

void check_same_tower(const MatrixGF& a, const MatrixGF& b) {
  if (!a.tower() || !b.tower() || !a.tower()->same_field(*b.tower()))
    fail_math(Errc::mixed_towers, "operands live in different fields");
}

MatrixGF MatrixGF::identity(TowerPtr tower, std::size_t n) {
  MatrixGF I(std::move(tower), n, n);
  for (std::size_t i = 0; i < n; ++i) I.set(i, i, I.tw_->one());
  return I;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF T(tw_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.set(j, i, at(i, j));
  return T;
}

MatrixGF MatrixGF::operator*(const MatrixGF& o) const {
  check_same_tower(*this, o);
  if (cols_ != o.rows_) fail_usage(Errc::dimension_mismatch, "matrix product shape");
  const FieldTower& F = *tw_;
  MatrixGF R(tw_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      elem_t aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        elem_t t = F.mul(aik, o.at(k, j));
        if (t) R.set(i, j, F.add(R.at(i, j), t));
      }
    }
  return R;
}

MatrixGF MatrixGF::operator+(const MatrixGF& o) const {
  check_same_tower(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail_usage(Errc::dimension_mismatch, "matrix sum shape");
  MatrixGF R(tw_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) R.a_[i] = tw_->add(a_[i], o.a_[i]);
  return R;
}

MatrixGF MatrixGF::operator-(const MatrixGF& o) const {
  check_same_tower(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail_usage(Errc::dimension_mismatch, "matrix difference shape");
  MatrixGF R(tw_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) R.a_[i] = tw_->sub(a_[i], o.a_[i]);
  return R;
}

bool MatrixGF::operator==(const MatrixGF& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ &&
         tw_ && o.tw_ && tw_->same_field(*o.tw_);
}

MatrixGF MatrixGF::rows_subset(const std::vector<std::size_t>& idx) const {
  MatrixGF R(tw_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) fail_usage(Errc::index_out_of_range, "row index");
    for (std::size_t j = 0; j < cols_; ++j) R.set(i, j, at(idx[i], j));
  }
  return R;
}

MatrixGF MatrixGF::cols_subset(const std::vector<std::size_t>& idx) const {
  MatrixGF R(tw_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) fail_usage(Errc::index_out_of_range, "column index");
    for (std::size_t i = 0; i < rows_; ++i) R.set(i, j, at(i, idx[j]));
  }
  return R;
}

MatrixGF MatrixGF::vstack(const MatrixGF& top, const MatrixGF& bottom) {
  check_same_tower(top, bottom);
  if (top.cols_ != bottom.cols_) fail_usage(Errc::dimension_mismatch, "vstack widths");
  MatrixGF R(top.tw_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.a_.begin(), top.a_.end(), R.a_.begin());
  std::copy(bottom.a_.begin(), bottom.a_.end(), R.a_.begin() + top.a_.size());
  return R;
}

MatrixGF MatrixGF::hstack(const MatrixGF& left, const MatrixGF& right) {
  check_same_tower(left, right);
  if (left.rows_ != right.rows_) fail_usage(Errc::dimension_mismatch, "hstack heights");
  MatrixGF R(left.tw_, left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) R.set(i, j, left.at(i, j));
    for (std::size_t j = 0; j < right.cols_; ++j) R.set(i, left.cols_ + j, right.at(i, j));
  }
  return R;
}

std::vector<elem_t> MatrixGF::mul_vec(const std::vector<elem_t>& v) const {
  if (v.size() != cols_) fail_usage(Errc::dimension_mismatch, "M v shape");
  const FieldTower& F = *tw_;
  std::vector<elem_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    elem_t s = 0;
    const elem_t* row = &a_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j] && v[j]) s = F.add(s, F.mul(row[j], v[j]));
    out[i] = s;
  }
  return out;
}

std::vector<elem_t> MatrixGF::mul_vec_left(const std::vector<elem_t>& v) const {
  if (v.size() != rows_) fail_usage(Errc::dimension_mismatch, "v M shape");
  const FieldTower& F = *tw_;
  std::vector<elem_t> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!v[i]) continue;
    const elem_t* row = &a_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j]) out[j] = F.add(out[j], F.mul(v[i], row[j]));
  }
  return out;
}

bool MatrixGF::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](elem_t v) { return v == 0; });
}

RrefResult rref(const MatrixGF& M) {
  const FieldTower& F = *M.tower();
  MatrixGF R = M;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
    std::size_t piv = r;
    while (piv < R.rows() && R.at(piv, c) == 0) ++piv;
    if (piv == R.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < R.cols(); ++j) {
        elem_t t = R.at(r, j);
        R.set(r, j, R.at(piv, j));
        R.set(piv, j, t);
      }
    elem_t iv = F.inv(R.at(r, c));
    for (std::size_t j = c; j < R.cols(); ++j) R.set(r, j, F.mul(iv, R.at(r, j)));
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == r) continue;
      elem_t f = R.at(i, c);
      if (!f) continue;
      for (std::size_t j = c; j < R.cols(); ++j)
        R.set(i, j, F.sub(R.at(i, j), F.mul(f, R.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> keep(r);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  RrefResult out{R.rows_subset(keep), std::move(pivots), r};
  return out;
}

std::size_t rank(const MatrixGF& M) { return rref(M).rank; }

MatrixGF invert(const MatrixGF& M) {
  if (M.rows() != M.cols()) fail_math(Errc::singular, "inverse of a non-square matrix");
  if (M.rows() == 0) return M;
  MatrixGF aug = MatrixGF::hstack(M, MatrixGF::identity(M.tower(), M.rows()));
  RrefResult rr = rref(aug);
  if (rr.rank != M.rows()) fail_math(Errc::singular, "matrix is singular");
  for (std::size_t i = 0; i < M.rows(); ++i)
    if (rr.pivots[i] != i) fail_math(Errc::singular, "matrix is singular");
  std::vector<std::size_t> right(M.cols());
  for (std::size_t j = 0; j < M.cols(); ++j) right[j] = M.cols() + j;
  return rr.R.cols_subset(right);
}

MatrixGF kernel_basis(const MatrixGF& M) {
  RrefResult rr = rref(M);
  const FieldTower& F = *M.tower();
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (pi < rr.pivots.size() && rr.pivots[pi] == c) { ++pi; continue; }
      free_cols.push_back(c);
    }
  }
  MatrixGF K(M.tower(), free_cols.size(), M.cols());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    K.set(b, free_cols[b], F.one());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      K.set(b, rr.pivots[i], F.neg(rr.R.at(i, free_cols[b])));
  }
  return K;
}

std::vector<elem_t> solve(const MatrixGF& M, const std::vector<elem_t>& b) {
  if (b.size() != M.rows()) fail_usage(Errc::dimension_mismatch, "solve rhs length");
  MatrixGF rhs(M.tower(), M.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs.set(i, 0, b[i]);
  MatrixGF aug = MatrixGF::hstack(M, rhs);
  RrefResult rr = rref(aug);
  const FieldTower& F = *M.tower();
  std::vector<elem_t> x(M.cols(), 0);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == M.cols())
      fail_math(Errc::no_solution, "inconsistent linear system");
    x[rr.pivots[i]] = rr.R.at(i, M.cols());
  }
  (void)F;
  return x;
}

void BlockStructure::validate() const {
  if (A.empty()) fail_usage(Errc::empty_support, "block structure has no blocks");
  if (B.size() != A.size())
    fail_usage(Errc::dimension_mismatch, "A and B block counts differ");
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].rows() != local_rows() || A[i].cols() != width() ||
        B[i].rows() != global_rows() || B[i].cols() != width())
      fail_usage(Errc::dimension_mismatch, "inconsistent block shapes");
  }
}

MatrixGF BlockStructure::assemble() const {
  std::vector<std::size_t> all(g());
  for (std::size_t i = 0; i < g(); ++i) all[i] = i;
  return select(all);
}

MatrixGF BlockStructure::select(const std::vector<std::size_t>& blocks) const {
  if (blocks.empty()) fail_usage(Errc::empty_support, "block selection is empty");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] >= g()) fail_usage(Errc::index_out_of_range, "block index");
    if (i && blocks[i] <= blocks[i - 1])
      fail_usage(Errc::index_out_of_range, "block indices must be strictly increasing");
  }
  const std::size_t w = width(), lr = local_rows(), gr = global_rows();
  const std::size_t t = blocks.size();
  MatrixGF H(tower, t * lr + gr, t * w);
  for (std::size_t bi = 0; bi < t; ++bi) {
    const MatrixGF& Ab = A[blocks[bi]];
    for (std::size_t i = 0; i < lr; ++i)
      for (std::size_t j = 0; j < w; ++j) H.set(bi * lr + i, bi * w + j, Ab.at(i, j));
    const MatrixGF& Bb = B[blocks[bi]];
    for (std::size_t i = 0; i < gr; ++i)
      for (std::size_t j = 0; j < w; ++j) H.set(t * lr + i, bi * w + j, Bb.at(i, j));
  }
  return H;
}

BlockStructure BlockStructure::select_structure(const std::vector<std::size_t>& blocks) const {
  BlockStructure out;
  out.tower = tower;
  for (std::size_t b : blocks) {
    if (b >= g()) fail_usage(Errc::index_out_of_range, "block index");
    out.A.push_back(A[b]);
    out.B.push_back(B[b]);
  }
  return out;
}

}  // namespace lrcc
