#include "lrcc/gf.hpp"

#include <algorithm>
#include <sstream>

namespace lrcc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_prime: return "NotPrime";
    case Errc::reducible: return "Reducible";
    case Errc::too_large: return "TooLarge";
    case Errc::no_subfield_marked: return "NoSubfieldMarked";
    case Errc::order_does_not_divide: return "OrderDoesNotDivide";
    case Errc::mixed_towers: return "MixedTowers";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::empty_support: return "EmptySupport";
    case Errc::singular: return "Singular";
    case Errc::no_solution: return "NoSolution";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::zero_code: return "ZeroCode";
    case Errc::work_ceiling_exceeded: return "WorkCeilingExceeded";
    case Errc::not_a_codeword: return "NotACodeword";
    case Errc::local_decode_failure: return "LocalDecodeFailure";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::no_invertible_permutation: return "NoInvertiblePermutation";
    case Errc::scaling_not_certified: return "ScalingNotCertified";
    case Errc::condition_g_violated: return "ConditionGViolated";
    case Errc::duplicate_points: return "DuplicatePoints";
    case Errc::field_too_small: return "FieldTooSmall";
    case Errc::basis_not_independent: return "BasisNotIndependent";
    case Errc::requires_h_equals_r: return "RequiresHEqualsR";
    case Errc::not_single_coset: return "NotSingleCoset";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr std::size_t kMulTableLimit = 1024;  // size^2 entries when cached

}  // namespace

namespace poly_gfp {

static void trim(std::vector<std::uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a,
                               const std::vector<std::uint32_t>& b, std::uint32_t p) {
  trim(a);
  std::vector<std::uint32_t> bb = b;
  trim(bb);
  const std::size_t db = bb.size() - 1;
  const std::uint32_t lead = bb[db];
  // inverse of the leading coefficient mod p
  std::uint32_t lead_inv = 1;
  for (std::uint32_t x = 1; x < p; ++x)
    if (x * lead % p == 1) { lead_inv = x; break; }
  while (a.size() >= bb.size() && !a.empty()) {
    std::uint32_t f = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.back()) * lead_inv) % p);
    std::size_t shift = a.size() - bb.size();
    for (std::size_t i = 0; i < bb.size(); ++i) {
      std::uint64_t t = static_cast<std::uint64_t>(f) * bb[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  std::vector<std::uint32_t> ff = f;
  trim(ff);
  if (ff.size() < 2) return false;  // constants are not irreducible
  const std::size_t deg = ff.size() - 1;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> g(dd + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < dd; ++i) { g[i] = static_cast<std::uint32_t>(t % p); t /= p; }
      g[dd] = 1;
      if (mod(ff, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly_gfp

std::shared_ptr<const FieldTower> FieldTower::make(std::uint32_t p, std::uint32_t m,
                                                   const std::vector<std::uint32_t>& modulus,
                                                   std::uint32_t base_degree,
                                                   const Config& cfg) {
  if (!is_prime(p)) fail_math(Errc::not_prime, "p = " + std::to_string(p));
  if (m < 1) fail_usage(Errc::parse_error, "degree must be >= 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    size *= p;
    if (size > cfg.field_size_ceiling)
      fail_math(Errc::too_large, "p^m exceeds the configured ceiling " +
                                     std::to_string(cfg.field_size_ceiling));
  }
  if (modulus.size() != m + 1 || modulus[m] != 1)
    fail_usage(Errc::parse_error, "modulus must be monic of degree m");
  for (auto c : modulus)
    if (c >= p) fail_usage(Errc::parse_error, "modulus coefficient out of [0,p)");
  if (!poly_gfp::is_irreducible(modulus, p))
    fail_math(Errc::reducible, "supplied modulus factors over GF(" + std::to_string(p) + ")");
  if (base_degree != 0 && m % base_degree != 0)
    fail_usage(Errc::parse_error, "base degree must divide m");

  auto t = std::shared_ptr<FieldTower>(new FieldTower());
  t->p_ = p;
  t->m_ = m;
  t->base_degree_ = base_degree;
  t->size_ = size;
  t->modulus_ = modulus;
  t->build_tables();
  return t;
}

std::shared_ptr<const FieldTower> FieldTower::make_auto(std::uint32_t p, std::uint32_t m,
                                                        std::uint32_t base_degree,
                                                        const Config& cfg) {
  if (!is_prime(p)) fail_math(Errc::not_prime, "p = " + std::to_string(p));
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> f(m + 1, 0);
    std::uint64_t t = idx;
    for (std::uint32_t i = 0; i < m; ++i) { f[i] = static_cast<std::uint32_t>(t % p); t /= p; }
    f[m] = 1;
    if (poly_gfp::is_irreducible(f, p)) return make(p, m, f, base_degree, cfg);
  }
  fail_math(Errc::reducible, "no irreducible polynomial found");  // unreachable
}

std::uint64_t FieldTower::subfield_size() const {
  if (!has_subfield()) fail_math(Errc::no_subfield_marked, "tower has no marked subfield");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < base_degree_; ++i) q *= p_;
  return q;
}

elem_t FieldTower::add(elem_t a, elem_t b) const {
  if (m_ == 1) return (a + b) % p_;
  elem_t r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

elem_t FieldTower::neg(elem_t a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  elem_t r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    elem_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

elem_t FieldTower::sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

elem_t FieldTower::mul_nocache(elem_t a, elem_t b) const {
  if (m_ == 1) return static_cast<elem_t>(static_cast<std::uint64_t>(a) * b % p_);
  // schoolbook product in the polynomial basis, then reduce
  std::vector<std::uint32_t> ca = coeffs(a), cb = coeffs(b);
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
  }
  std::vector<std::uint32_t> red = poly_gfp::mod(std::move(prod), modulus_, p_);
  red.resize(m_, 0);
  return from_coeffs(red);
}

elem_t FieldTower::mul(elem_t a, elem_t b) const {
  if (tables_) return mul_table_[static_cast<std::size_t>(a) * size_ + b];
  return mul_nocache(a, b);
}

elem_t FieldTower::inv(elem_t a) const {
  if (a == 0) fail_math(Errc::singular, "zero has no inverse");
  if (tables_) return inv_table_[a];
  return pow(a, size_ - 2);
}

elem_t FieldTower::pow(elem_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? one() : 0;
  e %= (size_ - 1);
  elem_t r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> FieldTower::coeffs(elem_t a) const {
  std::vector<std::uint32_t> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i) { c[i] = a % p_; a /= p_; }
  return c;
}

elem_t FieldTower::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() != m_) fail_usage(Errc::dimension_mismatch, "coefficient vector length != m");
  elem_t r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (c[i] >= p_) fail_usage(Errc::parse_error, "coefficient out of [0,p)");
    r += c[i] * mult;
    mult *= p_;
  }
  return r;
}

elem_t FieldTower::frobenius(elem_t x, std::uint32_t i, std::uint64_t q) const {
  if (!has_subfield()) fail_math(Errc::no_subfield_marked, "frobenius needs a marked subfield");
  if (q != subfield_size())
    fail_usage(Errc::parse_error, "q does not match the marked subfield size");
  return frobenius(x, i);
}

elem_t FieldTower::frobenius(elem_t x, std::uint32_t i) const {
  if (!has_subfield()) fail_math(Errc::no_subfield_marked, "frobenius needs a marked subfield");
  if (x == 0) return 0;
  // exponent q^i reduced mod |F*|
  std::uint64_t q = subfield_size() % (size_ - 1);
  std::uint64_t e = 1;
  for (std::uint32_t j = 0; j < i; ++j) e = e * q % (size_ - 1);
  return pow(x, e);
}

bool FieldTower::in_subfield(elem_t x) const {
  return frobenius(x, 1) == x;
}

std::uint64_t FieldTower::element_order(elem_t a) const {
  if (a == 0) fail_math(Errc::singular, "zero is not in the multiplicative group");
  std::uint64_t n = size_ - 1;
  // order divides |F*|: strip prime factors of n while a^(n/f) == 1
  std::uint64_t ord = n;
  std::uint64_t rem = n;
  for (std::uint64_t f = 2; f * f <= rem; ++f) {
    while (rem % f == 0) {
      rem /= f;
      while (ord % f == 0 && pow(a, ord / f) == one()) ord /= f;
    }
  }
  if (rem > 1)
    while (ord % rem == 0 && pow(a, ord / rem) == one()) ord /= rem;
  return ord;
}

elem_t FieldTower::primitive_element() const {
  std::call_once(primitive_once_, [this] {
    if (size_ == 2) {
      primitive_cache_ = 1;
      return;
    }
    for (elem_t a = 1; a < size_; ++a)
      if (element_order(a) == size_ - 1) {
        primitive_cache_ = a;
        return;
      }
  });
  return primitive_cache_;
}

std::string FieldTower::to_string(elem_t a) const {
  if (a == 0) return "0";
  std::vector<std::uint32_t> c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i];
      os << "b";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

FieldTower::CosetDecomposition FieldTower::coset_enumerate(std::uint64_t s) const {
  std::uint64_t n = size_ - 1;
  if (s == 0 || n % s != 0)
    fail_math(Errc::order_does_not_divide,
              std::to_string(s) + " does not divide |F*| = " + std::to_string(n));
  elem_t g = primitive_element();
  elem_t gen = pow(g, n / s);
  CosetDecomposition out;
  out.subgroup_order = s;
  out.subgroup.reserve(s);
  elem_t cur = one();
  for (std::uint64_t i = 0; i < s; ++i) {
    out.subgroup.push_back(cur);
    cur = mul(cur, gen);
  }
  std::sort(out.subgroup.begin(), out.subgroup.end());

  std::vector<char> seen(size_, 0);
  for (elem_t a = 1; a < size_; ++a) {
    if (seen[a]) continue;
    Coset c;
    c.leader = a;  // ascending scan makes the first unseen element the leader
    for (elem_t h : out.subgroup) {
      elem_t e = mul(a, h);
      seen[e] = 1;
      c.elements.push_back(e);
    }
    std::sort(c.elements.begin(), c.elements.end());
    out.cosets.push_back(std::move(c));
  }
  return out;
}

void FieldTower::build_tables() {
  if (size_ > kMulTableLimit) return;
  const std::size_t n = static_cast<std::size_t>(size_);
  mul_table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      elem_t v = mul_nocache(static_cast<elem_t>(a), static_cast<elem_t>(b));
      mul_table_[a * n + b] = v;
      mul_table_[b * n + a] = v;
    }
  inv_table_.assign(n, 0);
  for (std::size_t a = 1; a < n; ++a) {
    if (inv_table_[a]) continue;
    for (std::size_t b = 1; b < n; ++b)
      if (mul_table_[a * n + b] == 1) {
        inv_table_[a] = static_cast<elem_t>(b);
        inv_table_[b] = static_cast<elem_t>(a);
        break;
      }
  }
  tables_ = true;
}

}  // namespace lrcc
