#include "lrcc/code.hpp"

#include <algorithm>
#include <numeric>

namespace lrcc {

LinearCode::LinearCode(MatrixGF H) : H_(std::move(H)) {
  n_ = H_.cols();
  k_ = n_ - rank(H_);
}

std::optional<int> LinearCode::cached_distance() const {
  std::lock_guard<std::mutex> lk(cache_->mu);
  return cache_->d;
}

void LinearCode::cache_distance(int d) const {
  std::lock_guard<std::mutex> lk(cache_->mu);
  cache_->d = d;
}

bool is_codeword(const LinearCode& C, const std::vector<elem_t>& c) {
  if (c.size() != C.n()) return false;
  std::vector<elem_t> s = C.H().mul_vec(c);
  return std::all_of(s.begin(), s.end(), [](elem_t v) { return v == 0; });
}

MatrixGF generator_matrix(const LinearCode& C) { return kernel_basis(C.H()); }

std::vector<elem_t> encode(const LinearCode& C, const std::vector<elem_t>& message) {
  if (message.size() != C.k())
    fail_usage(Errc::dimension_mismatch,
               "message length " + std::to_string(message.size()) + " != k = " +
                   std::to_string(C.k()));
  return generator_matrix(C).mul_vec_left(message);
}

namespace {

// Smallest w such that some w columns of H are linearly dependent, i.e. the
// minimum distance. Work unit: one column added to an elimination.
int column_search(const MatrixGF& H, std::size_t n, std::size_t k, WorkMeter& meter) {
  const FieldTower& F = *H.tower();
  const std::size_t rows = H.rows();
  // transposed copy for cache-friendly column access
  MatrixGF Ht = H.transpose();
  const int singleton = static_cast<int>(n - k + 1);
  for (int w = 1; w <= singleton; ++w) {
    if (w == singleton) return singleton;  // any n-k+1 columns are dependent
    std::vector<std::size_t> sel(w);
    std::iota(sel.begin(), sel.end(), 0);
    while (true) {
      if (!meter.charge(static_cast<std::uint64_t>(w)))
        throw WorkCeilingError("distance search budget exhausted at weight " +
                                   std::to_string(w),
                               static_cast<long long>(meter.used),
                               /*partial_bound=*/w - 1);
      // rank of the selected columns by elimination into a scratch matrix
      std::vector<std::vector<elem_t>> rowsv;
      rowsv.reserve(w);
      bool dependent = false;
      for (int c = 0; c < w; ++c) {
        std::vector<elem_t> v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = Ht.at(sel[c], i);
        // reduce v against the accumulated echelon rows
        for (const auto& rv : rowsv) {
          std::size_t lead = 0;
          while (lead < rows && rv[lead] == 0) ++lead;
          if (lead < rows && v[lead] != 0) {
            elem_t f = F.mul(v[lead], F.inv(rv[lead]));
            for (std::size_t i = lead; i < rows; ++i)
              v[i] = F.sub(v[i], F.mul(f, rv[i]));
          }
        }
        if (std::all_of(v.begin(), v.end(), [](elem_t x) { return x == 0; })) {
          dependent = true;
          break;
        }
        rowsv.push_back(std::move(v));
        // keep echelon rows sorted by leading index for the reduction above
        std::sort(rowsv.begin(), rowsv.end(), [&](const auto& a, const auto& b) {
          std::size_t la = 0, lb = 0;
          while (la < rows && a[la] == 0) ++la;
          while (lb < rows && b[lb] == 0) ++lb;
          return la < lb;
        });
      }
      if (dependent) return w;
      // next combination
      int i = w - 1;
      while (i >= 0 && sel[i] == n - w + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < w; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  return singleton;
}

int enumeration_search(const LinearCode& C, WorkMeter& meter) {
  const FieldTower& F = *C.tower();
  const std::size_t n = C.n(), k = C.k();
  MatrixGF G = generator_matrix(C);
  const std::uint64_t q = F.size();

  // Odometer over messages; the current codeword is updated incrementally
  // when one digit changes.
  std::vector<elem_t> digits(k, 0);
  std::vector<elem_t> cw(n, 0);
  int best = static_cast<int>(n) + 1;
  // precompute scaled generator rows: scaled[i][a] = a * G.row(i)
  std::vector<std::vector<std::vector<elem_t>>> scaled(k);
  for (std::size_t i = 0; i < k; ++i) {
    scaled[i].resize(q);
    for (std::uint64_t a = 0; a < q; ++a) {
      std::vector<elem_t> row(n);
      for (std::size_t j = 0; j < n; ++j)
        row[j] = F.mul(static_cast<elem_t>(a), G.at(i, j));
      scaled[i][a] = std::move(row);
    }
  }
  while (true) {
    // advance odometer
    std::size_t pos = 0;
    while (pos < k) {
      elem_t old = digits[pos];
      elem_t next = static_cast<elem_t>(old + 1);
      if (next < q) {
        digits[pos] = next;
        for (std::size_t j = 0; j < n; ++j)
          cw[j] = F.add(F.sub(cw[j], scaled[pos][old][j]), scaled[pos][next][j]);
        break;
      }
      digits[pos] = 0;
      for (std::size_t j = 0; j < n; ++j) cw[j] = F.sub(cw[j], scaled[pos][old][j]);
      ++pos;
    }
    if (pos == k) break;  // wrapped: all q^k messages visited
    if (!meter.charge(1))
      throw WorkCeilingError("codeword enumeration budget exhausted",
                             static_cast<long long>(meter.used), -1);
    int w = 0;
    for (std::size_t j = 0; j < n; ++j) w += cw[j] != 0;
    if (w > 0 && w < best) {
      best = w;
      if (best == 1) break;
    }
  }
  return best;
}

}  // namespace

int distance_by_enumeration(const LinearCode& C, const Config& cfg) {
  if (C.k() == 0) fail_math(Errc::zero_code, "distance of the zero code is undefined");
  WorkMeter meter(cfg.distance_work_ceiling);
  return enumeration_search(C, meter);
}

int distance_by_column_search(const LinearCode& C, const Config& cfg) {
  if (C.k() == 0) fail_math(Errc::zero_code, "distance of the zero code is undefined");
  WorkMeter meter(cfg.distance_work_ceiling);
  // eliminate redundant rows first so the per-subset eliminations are small
  MatrixGF Hr = rref(C.H()).R;
  return column_search(Hr, C.n(), C.k(), meter);
}

int min_distance(const LinearCode& C, const Config& cfg) {
  if (C.k() == 0) fail_math(Errc::zero_code, "distance of the zero code is undefined");
  if (auto d = C.cached_distance()) return *d;
  // pick the cheaper strategy: q^k codewords vs column-dependence search
  long double enum_cost = 1;
  bool enum_ok = true;
  for (std::size_t i = 0; i < C.k(); ++i) {
    enum_cost *= static_cast<long double>(C.tower()->size());
    if (enum_cost > static_cast<long double>(cfg.enumeration_limit)) {
      enum_ok = false;
      break;
    }
  }
  int d = enum_ok ? distance_by_enumeration(C, cfg) : distance_by_column_search(C, cfg);
  C.cache_distance(d);
  return d;
}

LinearCode puncture(const LinearCode& C, const std::vector<std::size_t>& S) {
  if (S.empty()) fail_usage(Errc::empty_support, "kept coordinate set is empty");
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S[i] >= C.n()) fail_usage(Errc::index_out_of_range, "coordinate out of range");
    if (i && S[i] <= S[i - 1])
      fail_usage(Errc::index_out_of_range, "coordinates must be strictly increasing");
  }
  std::vector<char> kept(C.n(), 0);
  for (std::size_t c : S) kept[c] = 1;
  std::vector<std::size_t> dropped;
  for (std::size_t c = 0; c < C.n(); ++c)
    if (!kept[c]) dropped.push_back(c);
  if (dropped.empty()) return C;

  // rows x with x * H|_dropped = 0, i.e. the left kernel of H|_dropped
  MatrixGF Hdrop = C.H().cols_subset(dropped);
  MatrixGF K = kernel_basis(Hdrop.transpose());
  MatrixGF Hbar = K * C.H().cols_subset(S);
  return LinearCode(Hbar);
}

bool is_mds(const LinearCode& C, const Config& cfg) {
  return min_distance(C, cfg) == static_cast<int>(C.n() - C.k() + 1);
}

}  // namespace lrcc
