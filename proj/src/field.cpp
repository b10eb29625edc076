#include "sureal/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "sureal/errors.hpp"

namespace sureal {

namespace {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- polynomial helpers over the prime field, used only for the canonical
// ---- modulus search (the field they define does not exist yet)

using ZPoly = std::vector<uint64_t>;  // coords low-to-high, no trailing zeros

void zp_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zp_mod(ZPoly a, const ZPoly& m, uint64_t p) {
  // m monic
  while (a.size() >= m.size()) {
    uint64_t c = a.back();
    size_t shift = a.size() - m.size();
    if (c != 0)
      for (size_t i = 0; i < m.size(); ++i) {
        uint64_t& x = a[shift + i];
        x = (x + (p - m[i] % p) % p * c) % p;
      }
    a.pop_back();
    zp_trim(a);
    if (a.size() < m.size()) break;
  }
  zp_trim(a);
  return a;
}

ZPoly zp_mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& m, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  zp_trim(r);
  return zp_mod(std::move(r), m, p);
}

ZPoly zp_powmod(ZPoly base, uint64_t e, const ZPoly& m, uint64_t p) {
  ZPoly r{1};
  base = zp_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = zp_mulmod(r, base, m, p);
    base = zp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

ZPoly zp_gcd(ZPoly a, ZPoly b, uint64_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    // make b monic for zp_mod
    uint64_t lead = b.back();
    if (lead != 1) {
      // lead^-1 via Fermat
      uint64_t inv = 1, base = lead, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : b) c = c * inv % p;
    }
    ZPoly r = zp_mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin test: monic f of degree d >= 1 over GF(p) is irreducible iff
// t^(p^d) = t mod f and gcd(t^(p^(d/l)) - t, f) = 1 for every prime l | d.
bool zp_irreducible(const ZPoly& f, uint64_t p) {
  size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  // iterated Frobenius of t: s[j] = t^(p^j) mod f
  std::vector<ZPoly> s(d + 1);
  s[0] = ZPoly{0, 1};
  for (size_t j = 1; j <= d; ++j) s[j] = zp_powmod(s[j - 1], p, f, p);
  ZPoly t{0, 1};
  auto minus_t = [&](ZPoly g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    zp_trim(g);
    return g;
  };
  if (!minus_t(s[d]).empty()) return false;
  for (uint64_t l : prime_factors(d))
    if (zp_gcd(minus_t(s[d / l]), f, p).size() != 1) return false;
  return true;
}

}  // namespace

uint64_t two_part(uint64_t m) {
  check(m >= 1, "two_part of 0");
  return m & (~m + 1);
}

std::vector<uint64_t> prime_factors(uint64_t m) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) out.push_back(m);
  return out;
}

FieldCtx::FieldCtx(uint64_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime_u64(p)) throw DataError("field characteristic must be prime, got " + std::to_string(p));
  if (k < 1 || k > 16) throw DataError("extension degree must be in [1,16], got " + std::to_string(k));
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q_ > (uint64_t(1) << 32) / p) throw CapError("field size p^k exceeds 2^32 cap");
    q_ *= p;
  }

  // canonical modulus: least non-leading-coefficient encoding that is irreducible
  if (k == 1) {
    modulus_ = {0, 1};  // t itself; reduction is just mod p
  } else {
    for (uint64_t enc = 0;; ++enc) {
      check(enc < q_, "no irreducible modulus found");
      ZPoly f(k + 1, 0);
      uint64_t v = enc;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = v % p;
        v /= p;
      }
      f[k] = 1;
      if (zp_irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }
  redRow_.resize(k);
  for (unsigned i = 0; i < k; ++i) redRow_[i] = (p - modulus_[i] % p) % p;

  qm1Factors_ = prime_factors(q_ - 1);

  // acceleration tables
  if (q_ <= 512) {
    mulTab_.resize(q_ * q_);
    addTab_.resize(q_ * q_);
    for (uint64_t a = 0; a < q_; ++a)
      for (uint64_t b = 0; b < q_; ++b) {
        mulTab_[a * q_ + b] = uint16_t(mul_direct(a, b));
        // coordinatewise addition
        uint64_t x = a, y = b, s = 0, mult = 1;
        for (unsigned i = 0; i < k; ++i) {
          s += (x % p + y % p) % p * mult;
          x /= p;
          y /= p;
          mult *= p;
        }
        addTab_[a * q_ + b] = uint16_t(s);
      }
    invTab_.assign(q_, 0);
    for (uint64_t a = 1; a < q_; ++a) {
      if (invTab_[a]) continue;
      for (uint64_t b = 1; b < q_; ++b)
        if (mulTab_[a * q_ + b] == 1) {
          invTab_[a] = uint32_t(b);
          invTab_[b] = uint32_t(a);
          break;
        }
    }
  }

  // primitive element: least encoding whose order is q-1
  for (uint64_t c = 1; c < q_; ++c) {
    bool prim = true;
    for (uint64_t l : qm1Factors_)
      if (pow(c, (q_ - 1) / l) == one()) {
        prim = false;
        break;
      }
    if (prim) {
      gen_ = c;
      break;
    }
  }
  check(gen_ != 0, "no primitive element found");

  if (q_ > 512 && q_ <= (uint64_t(1) << 20)) {
    logTab_.assign(q_, 0);
    expTab_.assign(2 * q_, 1);
    uint64_t x = 1;
    for (uint64_t i = 0; i + 1 < q_; ++i) {
      expTab_[i] = uint32_t(x);
      logTab_[x] = uint32_t(i);
      x = mul_direct(x, gen_);
    }
    check(x == 1, "primitive element order mismatch");
    for (uint64_t i = q_ - 1; i < 2 * q_ - 2; ++i) expTab_[i] = expTab_[i - (q_ - 1)];
  }
}

const FieldCtx& FieldCtx::get(uint64_t p, unsigned k) {
  static std::mutex mx;
  static std::map<std::pair<uint64_t, unsigned>, std::unique_ptr<FieldCtx>> cache;
  std::lock_guard<std::mutex> lock(mx);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(p, k))).first;
  return *it->second;
}

uint64_t FieldCtx::mul_direct(uint64_t a, uint64_t b) const {
  if (k_ == 1) return a * b % p_;
  uint64_t A[16], B[16];
  uint64_t x = a, y = b;
  for (unsigned i = 0; i < k_; ++i) {
    A[i] = x % p_;
    B[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  uint64_t prod[31] = {0};
  for (unsigned i = 0; i < k_; ++i) {
    if (A[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + A[i] * B[j]) % p_;
  }
  for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
    uint64_t c = prod[d];
    if (c != 0) {
      prod[d] = 0;
      for (unsigned i = 0; i < k_; ++i)
        prod[d - k_ + i] = (prod[d - k_ + i] + c * redRow_[i]) % p_;
    }
    if (d == k_) break;
  }
  uint64_t enc = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    enc += prod[i] * mult;
    mult *= p_;
  }
  return enc;
}

uint64_t FieldCtx::add(uint64_t a, uint64_t b) const {
  if (p_ == 2) return a ^ b;
  if (!addTab_.empty()) return addTab_[a * q_ + b];
  uint64_t s = 0, mult = 1, x = a, y = b;
  for (unsigned i = 0; i < k_; ++i) {
    s += (x % p_ + y % p_) % p_ * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return s;
}

uint64_t FieldCtx::neg(uint64_t a) const {
  if (p_ == 2) return a;
  uint64_t s = 0, mult = 1, x = a;
  for (unsigned i = 0; i < k_; ++i) {
    s += (p_ - x % p_) % p_ * mult;
    x /= p_;
    mult *= p_;
  }
  return s;
}

uint64_t FieldCtx::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t FieldCtx::mul(uint64_t a, uint64_t b) const {
  if (!mulTab_.empty()) return mulTab_[a * q_ + b];
  if (!logTab_.empty()) {
    if (a == 0 || b == 0) return 0;
    return expTab_[logTab_[a] + uint64_t(logTab_[b])];
  }
  return mul_direct(a, b);
}

uint64_t FieldCtx::inv(uint64_t a) const {
  if (a == 0) throw DataError("division by zero in GF(" + std::to_string(q_) + ")");
  if (!invTab_.empty()) return invTab_[a];
  if (!logTab_.empty()) {
    uint64_t l = logTab_[a];
    return l == 0 ? a : expTab_[q_ - 1 - l];
  }
  return pow(a, q_ - 2);
}

uint64_t FieldCtx::div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

uint64_t FieldCtx::pow(uint64_t a, uint64_t e) const {
  uint64_t r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint64_t FieldCtx::frobenius(uint64_t a, unsigned e) const {
  e %= k_;
  if (e == 0) return a;
  uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p_;  // p^e <= p^(k-1) <= 2^32
  return pow(a, pe);
}

uint64_t FieldCtx::norm_to(uint64_t a, unsigned sub_k) const {
  if (sub_k == 0 || k_ % sub_k != 0)
    throw DataError("norm target degree " + std::to_string(sub_k) + " does not divide " + std::to_string(k_));
  if (a == 0) return 0;
  uint64_t sub_q = 1;
  for (unsigned i = 0; i < sub_k; ++i) sub_q *= p_;
  return pow(a, (q_ - 1) / (sub_q - 1));
}

uint64_t FieldCtx::mult_order(uint64_t a) const {
  if (a == 0) throw DataError("multiplicative order of zero");
  uint64_t ord = q_ - 1;
  for (uint64_t l : qm1Factors_)
    while (ord % l == 0 && pow(a, ord / l) == one()) ord /= l;
  return ord;
}

bool FieldCtx::in_norm_one_subgroup(uint64_t a) const {
  if (k_ % 2 != 0)
    throw DataError("norm-one subgroup needs a quadratic extension, but k = " + std::to_string(k_));
  if (a == 0) return false;
  uint64_t q0 = 1;
  for (unsigned i = 0; i < k_ / 2; ++i) q0 *= p_;
  return pow(a, q0 + 1) == one();
}

std::vector<uint64_t> FieldCtx::coords(uint64_t a) const {
  check(valid(a), "element encoding out of range");
  std::vector<uint64_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

uint64_t FieldCtx::from_coords(const std::vector<uint64_t>& c) const {
  if (c.size() > k_) throw DataError("too many coordinates for GF(" + std::to_string(q_) + ")");
  uint64_t enc = 0, mult = 1;
  for (size_t i = 0; i < k_; ++i) {
    uint64_t d = i < c.size() ? c[i] : 0;
    if (d >= p_) throw DataError("coordinate " + std::to_string(d) + " out of range mod " + std::to_string(p_));
    enc += d * mult;
    mult *= p_;
  }
  return enc;
}

std::string FieldCtx::to_string(uint64_t a) const {
  if (a == 0) return "0";
  auto c = coords(a);
  std::ostringstream os;
  bool first = true;
  for (int i = int(k_) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << (i == 1 ? "t" : "t^" + std::to_string(i));
  }
  return os.str();
}

}  // namespace sureal
