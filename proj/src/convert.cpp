#include "lrcc/convert.hpp"

#include <algorithm>
#include <numeric>

namespace lrcc {

namespace {

// Rank tracker for the greedy global-row choice: echelon rows with
// distinct leads, reduction in lead order.
struct Echelon {
  const FieldTower& F;
  std::vector<std::vector<elem_t>> rows;

  explicit Echelon(const FieldTower& f) : F(f) {}

  bool try_add(std::vector<elem_t> v) {
    for (const auto& rv : rows) {
      std::size_t lead = 0;
      while (lead < rv.size() && rv[lead] == 0) ++lead;
      if (lead < v.size() && v[lead] != 0) {
        elem_t f = F.mul(v[lead], F.inv(rv[lead]));
        for (std::size_t i = lead; i < v.size(); ++i)
          v[i] = F.sub(v[i], F.mul(f, rv[i]));
      }
    }
    if (std::all_of(v.begin(), v.end(), [](elem_t x) { return x == 0; })) return false;
    rows.push_back(std::move(v));
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      std::size_t la = 0, lb = 0;
      while (la < a.size() && a[la] == 0) ++la;
      while (lb < b.size() && b[lb] == 0) ++lb;
      return la < lb;
    });
    return true;
  }
};

std::vector<elem_t> matrix_row(const MatrixGF& M, std::size_t i,
                               const std::vector<std::size_t>& cols) {
  std::vector<elem_t> v(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) v[j] = M.at(i, cols[j]);
  return v;
}

}  // namespace

ConversionPlan make_plan(const BuiltCode& base, std::size_t t, std::size_t h,
                         std::optional<std::vector<PlanScaling>> scalings,
                         const Config& cfg) {
  (void)cfg;
  base.blocks.validate();
  ConversionPlan plan;
  plan.base = base;
  plan.g = base.blocks.g();
  plan.width = base.blocks.width();
  const std::size_t r = base.part.r;
  const std::size_t delta = base.part.delta;
  if (base.blocks.local_rows() != delta - 1 || plan.width != r + delta - 1)
    fail_usage(Errc::dimension_mismatch, "block shape disagrees with (r, delta)");
  if (r == 0 || base.blocks.global_rows() % r != 0)
    fail_math(Errc::hypothesis_violated, "global row count must be (g-l)r");
  const std::size_t g_minus_ell = base.blocks.global_rows() / r;
  if (g_minus_ell > plan.g)
    fail_math(Errc::hypothesis_violated, "more global rows than blocks allow");
  plan.ell = plan.g - g_minus_ell;
  if (base.code.k() != plan.ell * r)
    fail_math(Errc::hypothesis_violated,
              "base dimension " + std::to_string(base.code.k()) + " != l*r = " +
                  std::to_string(plan.ell * r));
  if (t == 0 || plan.ell % t != 0)
    fail_math(Errc::hypothesis_violated, "t | l fails: t = " + std::to_string(t) +
                                             ", l = " + std::to_string(plan.ell));
  plan.t = t;
  plan.s = plan.ell / t;
  plan.h = h;
  if (!(plan.s > g_minus_ell && g_minus_ell >= h))
    fail_math(Errc::hypothesis_violated,
              "l/t > g-l >= h fails: l/t = " + std::to_string(plan.s) + ", g-l = " +
                  std::to_string(g_minus_ell) + ", h = " + std::to_string(h));

  for (std::size_t i = 0; i < t; ++i) {
    std::vector<std::size_t> p(plan.s);
    std::iota(p.begin(), p.end(), i * plan.s);
    plan.parts.push_back(std::move(p));
  }
  plan.shared.resize(g_minus_ell);
  std::iota(plan.shared.begin(), plan.shared.end(), plan.ell);

  // initial codes H||_{P_i u P}
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<std::size_t> sel = plan.parts[i];
    sel.insert(sel.end(), plan.shared.begin(), plan.shared.end());
    plan.initial_codes.emplace_back(base.blocks.select(sel));
    if (plan.initial_codes.back().k() != plan.s * r)
      fail_math(Errc::hypothesis_violated, "initial code dimension is not s*r");
  }

  const FieldTower& F = *base.blocks.tower;
  const std::size_t q_rows = base.blocks.global_rows();  // (g-l) r
  const std::size_t drop_blocks = g_minus_ell - h;
  const std::size_t m_rows_needed = drop_blocks * r;

  // columns of the dropped blocks, in base-code coordinates
  std::vector<std::size_t> drop_cols;
  for (std::size_t b = plan.ell + h; b < plan.g; ++b)
    for (std::size_t j = 0; j < plan.width; ++j) drop_cols.push_back(b * plan.width + j);

  // Greedy completion: locals of the dropped blocks are forced M-rows;
  // global rows join in order while they extend the rank on the dropped
  // columns. The survivors (hr of them) become the retained N-rows.
  std::vector<std::size_t> chosen, rest;
  {
    Echelon ech(F);
    MatrixGF Hfull = base.code.H();
    const std::size_t local_total = plan.g * (delta - 1);
    for (std::size_t b = plan.ell + h; b < plan.g; ++b)
      for (std::size_t lr = 0; lr < delta - 1; ++lr) {
        bool ok = ech.try_add(matrix_row(Hfull, b * (delta - 1) + lr, drop_cols));
        if (!ok)
          fail_math(Errc::no_invertible_permutation,
                    "local rows of the dropped blocks are dependent");
      }
    for (std::size_t gr = 0; gr < q_rows; ++gr) {
      if (chosen.size() == m_rows_needed) { rest.push_back(gr); continue; }
      if (ech.try_add(matrix_row(Hfull, local_total + gr, drop_cols)))
        chosen.push_back(gr);
      else
        rest.push_back(gr);
    }
    if (chosen.size() != m_rows_needed)
      fail_math(Errc::no_invertible_permutation,
                "cannot complete an invertible block from the global rows; "
                "the base code is defective");
  }
  plan.global_row_order = chosen;
  plan.global_row_order.insert(plan.global_row_order.end(), rest.begin(), rest.end());

  // M13 over the dropped columns: dropped-block locals then the chosen
  // global rows.
  const MatrixGF& Hfull = base.code.H();
  const std::size_t local_total = plan.g * (delta - 1);
  MatrixGF M13(base.blocks.tower, drop_blocks * plan.width, drop_cols.size());
  {
    std::size_t out_row = 0;
    for (std::size_t b = plan.ell + h; b < plan.g; ++b)
      for (std::size_t lr = 0; lr < delta - 1; ++lr, ++out_row)
        for (std::size_t j = 0; j < drop_cols.size(); ++j)
          M13.set(out_row, j, Hfull.at(b * (delta - 1) + lr, drop_cols[j]));
    for (std::size_t ci = 0; ci < chosen.size(); ++ci, ++out_row)
      for (std::size_t j = 0; j < drop_cols.size(); ++j)
        M13.set(out_row, j, Hfull.at(local_total + chosen[ci], drop_cols[j]));
  }
  plan.M13 = M13;
  plan.M13_inv = invert(M13);

  // Retained shared columns (final-code tail) in base coordinates.
  std::vector<std::size_t> keep_shared_cols;
  for (std::size_t b = plan.ell; b < plan.ell + h; ++b)
    for (std::size_t j = 0; j < plan.width; ++j)
      keep_shared_cols.push_back(b * plan.width + j);

  auto m_block = [&](const std::vector<std::size_t>& cols) {
    // M-rows restricted to cols: dropped locals (zero there) + chosen globals
    MatrixGF M(base.blocks.tower, drop_blocks * plan.width, cols.size());
    std::size_t out_row = drop_blocks * (delta - 1);
    for (std::size_t ci = 0; ci < chosen.size(); ++ci, ++out_row)
      for (std::size_t j = 0; j < cols.size(); ++j)
        M.set(out_row, j, Hfull.at(local_total + chosen[ci], cols[j]));
    return M;
  };
  auto n_block = [&](const std::vector<std::size_t>& cols) {
    MatrixGF N(base.blocks.tower, h * r, cols.size());
    for (std::size_t ni = 0; ni < rest.size(); ++ni)
      for (std::size_t j = 0; j < cols.size(); ++j)
        N.set(ni, j, Hfull.at(local_total + rest[ni], cols[j]));
    return N;
  };

  MatrixGF N13 = n_block(drop_cols);
  MatrixGF T = N13 * plan.M13_inv;  // hr x drop_rows

  MatrixGF N12 = n_block(keep_shared_cols);
  MatrixGF M12 = m_block(keep_shared_cols);
  MatrixGF tail_shared = N12 - T * M12;

  // Hbar_i and the final parity-check matrix
  const std::size_t nf = plan.n_F();
  const std::size_t local_rows_final = (plan.ell + h) * (delta - 1);
  MatrixGF HF(base.blocks.tower, local_rows_final + h * r, nf);
  std::vector<MatrixGF> tails_own(t, MatrixGF());
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<std::size_t> own_cols;
    for (std::size_t b : plan.parts[i])
      for (std::size_t j = 0; j < plan.width; ++j) own_cols.push_back(b * plan.width + j);
    MatrixGF Ni1 = n_block(own_cols);
    MatrixGF Mi1 = m_block(own_cols);
    tails_own[i] = Ni1 - T * Mi1;

    // Hbar_i: s local rows block, then retained shared locals, then the tail
    const std::size_t ni = plan.n_I() - drop_blocks * plan.width;  // (s+h) w
    MatrixGF Hb(base.blocks.tower, (plan.s + h) * (delta - 1) + h * r, ni);
    for (std::size_t bi = 0; bi < plan.s; ++bi)
      for (std::size_t lr = 0; lr < delta - 1; ++lr)
        for (std::size_t j = 0; j < plan.width; ++j)
          Hb.set(bi * (delta - 1) + lr, bi * plan.width + j,
                 Hfull.at(plan.parts[i][bi] * (delta - 1) + lr,
                          plan.parts[i][bi] * plan.width + j));
    for (std::size_t bi = 0; bi < h; ++bi)
      for (std::size_t lr = 0; lr < delta - 1; ++lr)
        for (std::size_t j = 0; j < plan.width; ++j)
          Hb.set((plan.s + bi) * (delta - 1) + lr, (plan.s + bi) * plan.width + j,
                 Hfull.at((plan.ell + bi) * (delta - 1) + lr,
                          (plan.ell + bi) * plan.width + j));
    for (std::size_t tr = 0; tr < h * r; ++tr) {
      for (std::size_t j = 0; j < plan.s * plan.width; ++j)
        Hb.set((plan.s + h) * (delta - 1) + tr, j, tails_own[i].at(tr, j));
      for (std::size_t j = 0; j < h * plan.width; ++j)
        Hb.set((plan.s + h) * (delta - 1) + tr, plan.s * plan.width + j,
               tail_shared.at(tr, j));
    }
    plan.Hbar.push_back(std::move(Hb));
  }

  // assemble HF: diagonal local rows for every unchanged block, retained
  // shared locals, then the eliminated global rows across all columns
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t bi = 0; bi < plan.s; ++bi)
      for (std::size_t lr = 0; lr < delta - 1; ++lr)
        for (std::size_t j = 0; j < plan.width; ++j)
          HF.set((i * plan.s + bi) * (delta - 1) + lr,
                 (i * plan.s + bi) * plan.width + j,
                 Hfull.at(plan.parts[i][bi] * (delta - 1) + lr,
                          plan.parts[i][bi] * plan.width + j));
  for (std::size_t bi = 0; bi < h; ++bi)
    for (std::size_t lr = 0; lr < delta - 1; ++lr)
      for (std::size_t j = 0; j < plan.width; ++j)
        HF.set((plan.ell + bi) * (delta - 1) + lr, (plan.ell + bi) * plan.width + j,
               Hfull.at((plan.ell + bi) * (delta - 1) + lr,
                        (plan.ell + bi) * plan.width + j));
  for (std::size_t tr = 0; tr < h * r; ++tr) {
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < plan.s * plan.width; ++j)
        HF.set(local_rows_final + tr, i * plan.s * plan.width + j,
               tails_own[i].at(tr, j));
    for (std::size_t j = 0; j < h * plan.width; ++j)
      HF.set(local_rows_final + tr, plan.ell * plan.width + j, tail_shared.at(tr, j));
  }
  plan.HF = HF;
  plan.final_code = LinearCode(HF);
  plan.final_part = LocalityPartition::contiguous(plan.ell + h, plan.width, r, delta);
  plan.regime = base.regime;

  if (scalings) {
    if (scalings->size() != t)
      fail_math(Errc::scaling_not_certified, "need one scaling per initial code");
    // verify H||_{P_i} = D_i H||_{P_1} exactly
    MatrixGF HP1 = base.blocks.select(plan.parts[0]);
    for (std::size_t i = 0; i < t; ++i) {
      const PlanScaling& ps = (*scalings)[i];
      if (ps.local.size() != plan.s * (delta - 1) || ps.global.size() != q_rows)
        fail_math(Errc::scaling_not_certified, "scaling size mismatch");
      MatrixGF HPi = base.blocks.select(plan.parts[i]);
      for (std::size_t row = 0; row < HP1.rows(); ++row) {
        elem_t factor = row < plan.s * (delta - 1) ? ps.local[row]
                                                   : ps.global[row - plan.s * (delta - 1)];
        for (std::size_t col = 0; col < HP1.cols(); ++col)
          if (HPi.at(row, col) != F.mul(factor, HP1.at(row, col)))
            fail_math(Errc::scaling_not_certified,
                      "H||_{P_" + std::to_string(i + 1) + "} is not the claimed scaling");
      }
    }
    plan.scalings = std::move(scalings);
  }
  return plan;
}

namespace {

// Reads the first r coordinates of one retained block and recovers its
// remaining delta-1 coordinates from the block's local parity rows.
std::vector<elem_t> fill_block(const FieldTower& F, const MatrixGF& A,
                               const std::vector<elem_t>& read_vals) {
  const std::size_t w = A.cols();
  const std::size_t dm1 = A.rows();
  const std::size_t r = w - dm1;
  std::vector<std::size_t> unknown_cols(dm1);
  std::iota(unknown_cols.begin(), unknown_cols.end(), r);
  MatrixGF Au(A.tower(), dm1, dm1);
  for (std::size_t i = 0; i < dm1; ++i)
    for (std::size_t j = 0; j < dm1; ++j) Au.set(i, j, A.at(i, r + j));
  std::vector<elem_t> rhs(dm1, 0);
  for (std::size_t i = 0; i < dm1; ++i) {
    elem_t s = 0;
    for (std::size_t j = 0; j < r; ++j) s = F.add(s, F.mul(A.at(i, j), read_vals[j]));
    rhs[i] = F.neg(s);
  }
  std::vector<elem_t> unknown;
  try {
    MatrixGF Ainv = invert(Au);
    unknown = Ainv.mul_vec(rhs);
  } catch (const Error&) {
    fail_math(Errc::local_decode_failure,
              "local block is not MDS: delta-1 columns of its parity rows are dependent");
  }
  std::vector<elem_t> block(read_vals.begin(), read_vals.end());
  block.insert(block.end(), unknown.begin(), unknown.end());
  return block;
}

void check_inputs(const ConversionPlan& plan,
                  const std::vector<std::vector<elem_t>>& codewords, bool same_code) {
  if (codewords.size() != plan.t)
    fail_usage(Errc::dimension_mismatch, "need t codewords");
  for (std::size_t i = 0; i < plan.t; ++i) {
    const LinearCode& Ci = plan.initial_codes[same_code ? 0 : i];
    if (codewords[i].size() != plan.n_I() || !is_codeword(Ci, codewords[i]))
      fail_math(Errc::not_a_codeword,
                "input " + std::to_string(i + 1) + " is not a codeword of its initial code");
  }
}

// Shared part of both conversion paths: the access ledger and the tail
// blocks recovered from r reads each.
struct TailRead {
  ConversionTrace trace;
  std::vector<std::vector<elem_t>> tails;  // per input, h*width symbols
};

TailRead read_tails(const ConversionPlan& plan,
                    const std::vector<std::vector<elem_t>>& codewords) {
  const FieldTower& F = *plan.base.blocks.tower;
  const std::size_t w = plan.width;
  const std::size_t r = plan.base.part.r;
  TailRead out;
  out.trace.unchanged.resize(plan.t);
  out.trace.reads.resize(plan.t);
  out.tails.resize(plan.t);
  for (std::size_t i = 0; i < plan.t; ++i) {
    for (std::size_t c = 0; c < plan.s * w; ++c) out.trace.unchanged[i].push_back(c);
    for (std::size_t b = 0; b < plan.h; ++b) {
      std::vector<elem_t> read_vals(r);
      for (std::size_t j = 0; j < r; ++j) {
        std::size_t coord = (plan.s + b) * w + j;
        out.trace.reads[i].push_back(coord);
        read_vals[j] = codewords[i][coord];
      }
      std::vector<elem_t> block =
          fill_block(F, plan.base.blocks.A[plan.ell + b], read_vals);
      out.tails[i].insert(out.tails[i].end(), block.begin(), block.end());
    }
  }
  out.trace.rho_r = plan.t * plan.h * r;
  out.trace.rho_w = plan.h * w;
  for (std::size_t c = 0; c < plan.h * w; ++c)
    out.trace.written.push_back(plan.ell * w + c);
  return out;
}

void assemble_final(const ConversionPlan& plan,
                    const std::vector<std::vector<elem_t>>& codewords,
                    const std::vector<elem_t>& cstar, ConversionTrace& trace) {
  trace.final_codeword.clear();
  for (std::size_t i = 0; i < plan.t; ++i)
    trace.final_codeword.insert(trace.final_codeword.end(), codewords[i].begin(),
                                codewords[i].begin() + plan.s * plan.width);
  trace.final_codeword.insert(trace.final_codeword.end(), cstar.begin(), cstar.end());
  if (!is_codeword(plan.final_code, trace.final_codeword))
    fail_math(Errc::not_a_codeword, "conversion produced a non-codeword; plan is defective");
}

}  // namespace

ConversionTrace convert(const ConversionPlan& plan,
                        const std::vector<std::vector<elem_t>>& codewords) {
  check_inputs(plan, codewords, false);
  const FieldTower& F = *plan.base.blocks.tower;
  TailRead tr = read_tails(plan, codewords);
  std::vector<elem_t> cstar(plan.h * plan.width, 0);
  for (std::size_t i = 0; i < plan.t; ++i)
    for (std::size_t c = 0; c < cstar.size(); ++c)
      cstar[c] = F.add(cstar[c], tr.tails[i][c]);
  assemble_final(plan, codewords, cstar, tr.trace);
  return tr.trace;
}

ConversionTrace convert_same_initial(const ConversionPlan& plan,
                                     const std::vector<std::vector<elem_t>>& codewords) {
  if (plan.h != plan.g - plan.ell)
    fail_math(Errc::hypothesis_violated,
              "the same-initial-code conversion needs h = g - l");
  if (!plan.scalings)
    fail_math(Errc::scaling_not_certified, "plan carries no diagonal scalings");
  check_inputs(plan, codewords, true);

  const FieldTower& F = *plan.base.blocks.tower;
  const std::size_t w = plan.width;
  const std::size_t r = plan.base.part.r;
  const std::size_t delta = plan.base.part.delta;

  // (W12; N12): retained shared locals over shared columns, then the global
  // rows over shared columns. h = g-l makes this square of order h*w.
  const MatrixGF& Hfull = plan.base.code.H();
  const std::size_t local_total = plan.g * (delta - 1);
  MatrixGF WN(plan.base.blocks.tower, plan.h * w, plan.h * w);
  for (std::size_t b = 0; b < plan.h; ++b)
    for (std::size_t lr = 0; lr < delta - 1; ++lr)
      for (std::size_t j = 0; j < plan.h * w; ++j)
        WN.set(b * (delta - 1) + lr, j,
               Hfull.at((plan.ell + b) * (delta - 1) + lr, plan.ell * w + j));
  for (std::size_t gr = 0; gr < plan.h * r; ++gr)
    for (std::size_t j = 0; j < plan.h * w; ++j)
      WN.set(plan.h * (delta - 1) + gr, j, Hfull.at(local_total + gr, plan.ell * w + j));
  MatrixGF WN_inv;
  try {
    WN_inv = invert(WN);
  } catch (const Error&) {
    fail_math(Errc::hypothesis_violated, "(W12; N12) is singular; base code defective");
  }

  TailRead tr = read_tails(plan, codewords);
  std::vector<elem_t> acc(plan.h * w, 0);
  for (std::size_t i = 0; i < plan.t; ++i) {
    std::vector<elem_t> v = WN.mul_vec(tr.tails[i]);
    const PlanScaling& ps = (*plan.scalings)[i];
    // diag(I over the local rows, D_i2 over the global rows)
    for (std::size_t gr = 0; gr < plan.h * r; ++gr)
      v[plan.h * (delta - 1) + gr] = F.mul(ps.global[gr], v[plan.h * (delta - 1) + gr]);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = F.add(acc[j], v[j]);
  }
  std::vector<elem_t> cstar = WN_inv.mul_vec(acc);
  assemble_final(plan, codewords, cstar, tr.trace);
  return tr.trace;
}

long long plan_final_distance(const ConversionPlan& plan) {
  const long long w = static_cast<long long>(plan.width);
  const long long h = static_cast<long long>(plan.h);
  const long long delta = static_cast<long long>(plan.base.part.delta);
  return plan.regime == PhiRegime::classic ? delta + h * w : h * w + 1;
}

AuditReport audit_optimality(const ConversionPlan& plan, const ConversionTrace& trace) {
  AuditReport rep;
  BoundInputs b;
  b.n_F = static_cast<long long>(plan.n_F());
  b.k = static_cast<long long>(plan.s * plan.base.part.r);
  b.t = static_cast<long long>(plan.t);
  b.r = static_cast<long long>(plan.base.part.r);
  b.delta = static_cast<long long>(plan.base.part.delta);
  b.d = plan_final_distance(plan);
  b.n_I = static_cast<long long>(plan.n_I());
  b.regime = plan.regime;
  rep.bound = access_lb_new(b);
  rep.rho_r = trace.rho_r;
  rep.rho_w = trace.rho_w;
  rep.read_gap = static_cast<long long>(trace.rho_r) - rep.bound.rho_r;
  rep.write_gap = static_cast<long long>(trace.rho_w) - rep.bound.rho_w;
  rep.read_optimal = rep.read_gap == 0;
  rep.write_optimal = rep.write_gap == 0;
  rep.baseline_reads = plan.t * plan.initial_codes[0].k();
  rep.baseline_writes = plan.n_F();
  return rep;
}

}  // namespace lrcc
