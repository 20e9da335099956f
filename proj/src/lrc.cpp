#include "lrcc/lrc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>

namespace lrcc {

namespace {
long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }
}  // namespace

long long phi(long long k, long long r, long long delta, PhiRegime regime) {
  long long c = ceil_div(k, r);
  return (regime == PhiRegime::classic ? c - 1 : c) * (delta - 1);
}

long long singleton_bound(long long n, long long k, long long r, long long delta,
                          bool improved) {
  return n - k + 1 - phi(k, r, delta, improved ? PhiRegime::improved : PhiRegime::classic);
}

LocalityReport verify_locality(const LinearCode& C, const LocalityPartition& part,
                               const Config& cfg) {
  part.validate(C.n());
  LocalityReport rep;
  rep.pass = true;
  for (std::size_t g = 0; g < part.groups.size(); ++g) {
    std::vector<std::size_t> S = part.groups[g];
    std::sort(S.begin(), S.end());
    LinearCode local = puncture(C, S);
    GroupCheck chk;
    chk.group = g;
    chk.size = S.size();
    chk.dim = local.k();
    chk.distance = local.k() == 0 ? static_cast<int>(S.size())  // zero code: all-erasure distance
                                  : min_distance(local, cfg);
    chk.pass = chk.size <= part.r + part.delta - 1 && chk.dim <= part.r &&
               chk.distance >= static_cast<int>(part.delta);
    if (!chk.pass && rep.pass) {
      rep.pass = false;
      rep.first_failing_group = g;
    }
    rep.groups.push_back(chk);
  }
  return rep;
}

bool is_optimal_lrc(const LinearCode& C, const LocalityPartition& part,
                    PhiRegime regime, const Config& cfg) {
  if (!verify_locality(C, part, cfg).pass) return false;
  long long bound = singleton_bound(static_cast<long long>(C.n()),
                                    static_cast<long long>(C.k()),
                                    static_cast<long long>(part.r),
                                    static_cast<long long>(part.delta),
                                    regime == PhiRegime::improved);
  return min_distance(C, cfg) == bound;
}

namespace {

// Enumerates the r-subsets of an n-set in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> sel(r);
  for (std::size_t i = 0; i < r; ++i) sel[i] = i;
  while (true) {
    out.push_back(sel);
    std::size_t i = r;
    while (i > 0 && sel[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++sel[i - 1];
    for (std::size_t j = i; j < r; ++j) sel[j] = sel[j - 1] + 1;
  }
  return out;
}

}  // namespace

MrReport is_mr(const LinearCode& C, const LocalityPartition& part, const Config& cfg) {
  part.validate(C.n());
  const std::size_t m = part.groups.size();
  // per-group keep choices: |S_i| - (delta-1) survivors
  std::vector<std::vector<std::vector<std::size_t>>> keeps(m);
  std::uint64_t total = 1;
  for (std::size_t g = 0; g < m; ++g) {
    const auto& S = part.groups[g];
    if (S.size() < part.delta - 1)
      fail_math(Errc::precondition_violated, "group smaller than delta-1");
    auto local = combinations(S.size(), S.size() - (part.delta - 1));
    std::vector<std::vector<std::size_t>> mapped;
    std::vector<std::size_t> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& c : local) {
      std::vector<std::size_t> coords;
      for (std::size_t idx : c) coords.push_back(sorted[idx]);
      mapped.push_back(std::move(coords));
    }
    total *= mapped.size();
    keeps[g] = std::move(mapped);
  }

  MrReport rep;
  rep.patterns_total = total;
  const std::size_t expected_k = C.k();

  auto kept_for = [&](std::uint64_t pattern) {
    std::vector<std::size_t> kept;
    // mixed radix, first group most significant
    std::uint64_t rem = pattern;
    std::vector<std::size_t> digit(m);
    for (std::size_t g = m; g-- > 0;) {
      digit[g] = static_cast<std::size_t>(rem % keeps[g].size());
      rem /= keeps[g].size();
    }
    for (std::size_t g = 0; g < m; ++g)
      kept.insert(kept.end(), keeps[g][digit[g]].begin(), keeps[g][digit[g]].end());
    std::sort(kept.begin(), kept.end());
    return kept;
  };

  auto pattern_cost = [&](const std::vector<std::size_t>& kept) {
    return static_cast<std::uint64_t>(kept.size());
  };

  auto check_pattern = [&](std::uint64_t pattern) -> bool {
    std::vector<std::size_t> kept = kept_for(pattern);
    LinearCode punc = puncture(C, kept);
    if (punc.k() != expected_k) return false;
    Config local_cfg = cfg;  // bounded per-pattern search; failures surface as the witness
    try {
      return is_mds(punc, local_cfg);
    } catch (const Error&) {
      return false;
    }
  };

  unsigned nthreads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  const std::uint64_t chunk = 4096;
  WorkMeter meter(cfg.mr_work_ceiling);

  for (std::uint64_t base = 0; base < total; base += chunk) {
    std::uint64_t end = std::min(total, base + chunk);
    std::atomic<std::uint64_t> next(base);
    std::atomic<std::uint64_t> earliest_fail(UINT64_MAX);
    auto worker = [&]() {
      while (true) {
        std::uint64_t p = next.fetch_add(1);
        if (p >= end) return;
        if (p > earliest_fail.load()) continue;
        if (!check_pattern(p)) {
          std::uint64_t cur = earliest_fail.load();
          while (p < cur && !earliest_fail.compare_exchange_weak(cur, p)) {}
        }
      }
    };
    std::vector<std::thread> pool;
    unsigned use = static_cast<unsigned>(
        std::min<std::uint64_t>(nthreads, end - base));
    for (unsigned i = 1; i < use; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::uint64_t fail = earliest_fail.load();
    if (fail != UINT64_MAX) {
      rep.patterns_checked = fail;  // everything before the witness passed
      rep.mr = false;
      rep.witness_kept = kept_for(fail);
      return rep;
    }
    rep.patterns_checked = end;
    // after-the-fact budget accounting per completed chunk
    for (std::uint64_t p = base; p < end; ++p) meter.used += pattern_cost(kept_for(p));
    if (meter.used > meter.budget)
      throw WorkCeilingError("maximal-recoverability enumeration budget exhausted",
                             static_cast<long long>(rep.patterns_checked), -1);
  }
  rep.mr = true;
  return rep;
}

AccessBound access_lb_new(const BoundInputs& b) {
  AccessBound out;
  long long ph = phi((b.t - 1) * b.k, b.r, b.delta, b.regime);
  out.rho_w = b.t * (b.d + (b.t - 1) * b.k - 1 + ph) - (b.t - 1) * b.n_F;
  long long Delta = b.n_F - 2 * b.d - (b.t - 1) * b.k + 2 - ph;
  out.delta_term = Delta;
  if (Delta <= 0 || b.d > b.n_I - b.k + 1) {
    out.rho_r = b.t * b.k;
  } else {
    out.rho_r = b.t * (b.k - Delta + (b.delta - 1) * (Delta / (b.r + b.delta - 1)));
  }
  return out;
}

AccessBound access_lb_old(const BoundInputs& b) {
  AccessBound out;
  long long c = ceil_div((b.t - 1) * b.k, b.r);
  out.rho_w = b.t * (b.d + (b.t - 1) * b.k + c - 2) - (b.t - 1) * b.n_F;
  long long Dbar = b.n_F - 2 * b.d - ((b.t - 1) * b.k + c) + 3;
  out.delta_term = Dbar;
  if (Dbar <= 0 || b.d > b.n_I - b.k + 1) {
    out.rho_r = b.t * b.k;
  } else {
    out.rho_r = b.t * (b.k - ceil_div(b.r * Dbar, b.r + 1));
  }
  return out;
}

BSetResult find_B_set(const LocalityPartition& part, const std::vector<std::size_t>& V) {
  const std::size_t n = part.n();
  std::vector<std::size_t> owner = part.group_of_coordinate(n);
  const std::size_t delta = part.delta;
  const std::size_t w = part.r + part.delta - 1;

  std::vector<char> in_v(n, 0);
  for (std::size_t c : V) {
    if (c >= n) fail_usage(Errc::index_out_of_range, "V coordinate out of range");
    in_v[c] = 1;
  }
  std::vector<std::size_t> vs;
  for (std::size_t c = 0; c < n; ++c)
    if (in_v[c]) vs.push_back(c);

  const std::size_t target_blocks = vs.size() / w;
  const std::size_t target = (delta - 1) * target_blocks;

  // Greedy sweep: take the smallest remaining coordinate, collect up to
  // delta-1 remaining coordinates of its repair set, then remove the whole
  // repair set from play.
  struct Picked {
    std::size_t group;
    std::vector<std::size_t> elems;  // ascending, <= delta-1 of them
    bool full;                       // |elems| == delta-1
  };
  std::vector<Picked> picked;
  std::vector<char> remaining = in_v;
  std::size_t remaining_count = vs.size();
  while (remaining_count > 0) {
    std::size_t lead = 0;
    while (!remaining[lead]) ++lead;
    std::size_t g = owner[lead];
    Picked pk;
    pk.group = g;
    std::vector<std::size_t> sorted_group = part.groups[g];
    std::sort(sorted_group.begin(), sorted_group.end());
    for (std::size_t c : sorted_group) {
      if (remaining[c] && pk.elems.size() < delta - 1) pk.elems.push_back(c);
    }
    pk.full = pk.elems.size() == delta - 1;
    for (std::size_t c : sorted_group)
      if (remaining[c]) {
        remaining[c] = 0;
        --remaining_count;
      }
    picked.push_back(std::move(pk));
  }

  BSetResult out;
  std::size_t full_count = 0;
  for (const auto& pk : picked) full_count += pk.full;

  if (full_count >= target_blocks) {
    // the first target_blocks full blocks, in pick order
    std::size_t taken = 0;
    for (const auto& pk : picked) {
      if (!pk.full) continue;
      if (taken == target_blocks) break;
      out.blocks.push_back(pk.elems);
      out.repair_sets.push_back(pk.group);
      ++taken;
    }
  } else {
    // all full blocks plus partial blocks trimmed to hit the target exactly
    std::size_t need = target - full_count * (delta - 1);
    for (const auto& pk : picked) {
      if (pk.full) {
        out.blocks.push_back(pk.elems);
        out.repair_sets.push_back(pk.group);
      }
    }
    for (const auto& pk : picked) {
      if (pk.full || need == 0) continue;
      std::size_t take = std::min(need, pk.elems.size());
      if (take == 0) continue;
      out.blocks.push_back({pk.elems.begin(), pk.elems.begin() + take});
      out.repair_sets.push_back(pk.group);
      need -= take;
    }
  }
  for (const auto& blk : out.blocks) out.B.insert(out.B.end(), blk.begin(), blk.end());
  std::sort(out.B.begin(), out.B.end());
  return out;
}

double superlinear_length_bound(long long n, long long k, long long d, long long r,
                                long long delta, long long q, long long w,
                                long long u, long long v) {
  if (n != w * (r + delta - 1))
    fail_math(Errc::precondition_violated, "n = w(r+delta-1) fails");
  if (k != u * r + v) fail_math(Errc::precondition_violated, "k = ur+v fails");
  long long t = (d - 1) / delta;
  if (2 * t + 1 <= 4) fail_math(Errc::precondition_violated, "2t+1 > 4 fails");
  if (!(k % r == 0 || u >= 2 * (r + 1 - v)))
    fail_math(Errc::precondition_violated, "r|k or u >= 2(r+1-v) fails");
  double qd = static_cast<double>(q);
  double wu = static_cast<double>(w - u);
  if (t % 2 == 1) {
    double expo = (2.0 * wu * r - 2.0 * v - 2.0) / (t - 1);
    return (static_cast<double>(r + delta - 1) / r) *
           ((t - 1) / (2.0 * (qd - 1)) * std::pow(qd, expo) + 1.0);
  }
  double expo = (2.0 * wu * r - 2.0 * v) / t;
  return (static_cast<double>(t) * (r + delta - 1)) / (2.0 * r * (qd - 1)) *
         std::pow(qd, expo);
}

}  // namespace lrcc
