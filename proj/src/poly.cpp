#include "sureal/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "sureal/errors.hpp"

namespace sureal {

namespace {

constexpr uint64_t kScanCap = uint64_t(1) << 24;  // candidate scans per degree

void same_field(const Poly& a, const Poly& b) {
  check(a.F == b.F, "polynomial operands from different fields");
}

}  // namespace

Poly Poly::trimmed() && {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return std::move(*this);
}

Poly Poly::from_coeffs(const FieldCtx& F, std::vector<uint64_t> coeffs) {
  for (uint64_t v : coeffs)
    if (!F.valid(v)) throw DataError("coefficient encoding " + std::to_string(v) + " out of range for GF(" + std::to_string(F.q()) + ")");
  return Poly{&F, std::move(coeffs)}.trimmed();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = F->to_string(c[i]);
    bool composite = cs.find('+') != std::string::npos;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (c[i] != F->one()) os << (composite ? "(" + cs + ")" : cs) << "*";
    os << (i == 1 ? "t" : "t^" + std::to_string(i));
  }
  return os.str();
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

Poly poly_add(const Poly& a, const Poly& b) {
  same_field(a, b);
  const FieldCtx& F = *a.F;
  std::vector<uint64_t> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly{&F, std::move(r)}.trimmed();
}

Poly poly_sub(const Poly& a, const Poly& b) {
  same_field(a, b);
  const FieldCtx& F = *a.F;
  std::vector<uint64_t> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly{&F, std::move(r)}.trimmed();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  same_field(a, b);
  const FieldCtx& F = *a.F;
  if (a.is_zero() || b.is_zero()) return Poly::zero(F);
  std::vector<uint64_t> r(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
  }
  return Poly{&F, std::move(r)}.trimmed();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
  same_field(a, b);
  const FieldCtx& F = *a.F;
  if (b.is_zero()) throw DataError("polynomial division by zero");
  if (a.deg() < b.deg()) return {Poly::zero(F), a};
  uint64_t lead_inv = F.inv(b.leading());
  std::vector<uint64_t> rem = a.c;
  std::vector<uint64_t> quot(a.deg() - b.deg() + 1, 0);
  for (int d = a.deg(); d >= b.deg(); --d) {
    uint64_t coef = rem[d];
    if (coef == 0) continue;
    uint64_t qc = F.mul(coef, lead_inv);
    quot[d - b.deg()] = qc;
    for (int i = 0; i <= b.deg(); ++i)
      rem[d - b.deg() + i] = F.sub(rem[d - b.deg() + i], F.mul(qc, b.c[i]));
  }
  return {Poly{&F, std::move(quot)}.trimmed(), Poly{&F, std::move(rem)}.trimmed()};
}

Poly poly_make_monic(const Poly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  const FieldCtx& F = *f.F;
  uint64_t li = F.inv(f.leading());
  std::vector<uint64_t> r = f.c;
  for (auto& x : r) x = F.mul(x, li);
  return Poly{&F, std::move(r)};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(a);
}

uint64_t poly_eval(const Poly& f, uint64_t x) {
  const FieldCtx& F = *f.F;
  uint64_t acc = 0;
  for (int i = f.deg(); i >= 0; --i) acc = F.add(F.mul(acc, x), f.c[i]);
  return acc;
}

Poly poly_pow_mod(Poly base, uint64_t e, const Poly& m) {
  check(m.deg() >= 1, "power modulus must be nonconstant");
  const FieldCtx& F = *base.F;
  Poly r = Poly::one(F);
  base = poly_divrem(base, m).second;
  while (e) {
    if (e & 1) r = poly_divrem(poly_mul(r, base), m).second;
    base = poly_divrem(poly_mul(base, base), m).second;
    e >>= 1;
  }
  return r;
}

Poly frobenius_coeffs(const Poly& f, unsigned e) {
  std::vector<uint64_t> r = f.c;
  for (auto& x : r) x = f.F->frobenius(x, e);
  return Poly{f.F, std::move(r)};
}

namespace {

Poly poly_x(const FieldCtx& F) { return Poly{&F, {0, F.one()}}; }

Poly derivative(const Poly& f) {
  const FieldCtx& F = *f.F;
  if (f.deg() < 1) return Poly::zero(F);
  std::vector<uint64_t> r(f.deg(), 0);
  // i mod p is a prime-field constant, and constants encode as themselves
  for (int i = 1; i <= f.deg(); ++i) r[i - 1] = F.mul(f.c[i], uint64_t(i) % F.p());
  return Poly{&F, std::move(r)}.trimmed();
}

}  // namespace

bool is_irreducible(const Poly& f) {
  check(f.deg() >= 1, "irreducibility is defined for nonconstant polynomials");
  const FieldCtx& F = *f.F;
  unsigned d = unsigned(f.deg());
  if (d == 1) return true;
  Poly m = poly_make_monic(f);
  // iterated q-power Frobenius of t mod m
  std::vector<Poly> s(d + 1, Poly::zero(F));
  s[0] = poly_x(F);
  for (unsigned j = 1; j <= d; ++j) s[j] = poly_pow_mod(s[j - 1], F.q(), m);
  if (!poly_sub(s[d], poly_x(F)).is_zero()) return false;
  for (uint64_t l : prime_factors(d))
    if (poly_gcd(poly_sub(s[d / l], poly_x(F)), m).deg() != 0) return false;
  return true;
}

namespace {

// distinct-degree then equal-degree splitting of a squarefree monic input
void factor_squarefree(const Poly& input, std::vector<Poly>& out, std::mt19937_64& rng) {
  const FieldCtx& F = *input.F;
  Poly f = input;
  Poly h = poly_x(F);  // t^(q^d) mod f, advanced as d grows

  // equal-degree splitter, recursive;
  // g is a product of distinct irreducibles all of degree d
  auto edf = [&](auto&& self, Poly g, unsigned d) -> void {
    if (g.deg() == 0) return;
    if (unsigned(g.deg()) == d) {
      out.push_back(std::move(g));
      return;
    }
    for (int tries = 0; tries < 4096; ++tries) {
      std::vector<uint64_t> coeffs(g.deg());
      for (auto& x : coeffs) x = rng() % F.q();
      Poly a = Poly{&F, std::move(coeffs)}.trimmed();
      if (a.deg() < 1) continue;
      Poly split;
      if (F.p() == 2) {
        // trace map over GF(2): sum of a^(2^i) for i < log2(q)*d
        unsigned bits = F.k() * d;
        Poly tr = a, cur = a;
        for (unsigned i = 1; i < bits; ++i) {
          cur = poly_pow_mod(cur, 2, g);
          tr = poly_add(tr, cur);
        }
        split = poly_gcd(tr, g);
      } else {
        // a^((q^d-1)/2) = (a^(1+q+...+q^(d-1)))^((q-1)/2), exponent kept small
        Poly nrm = a, frob = a;
        for (unsigned i = 1; i < d; ++i) {
          frob = poly_pow_mod(frob, F.q(), g);
          nrm = poly_divrem(poly_mul(nrm, frob), g).second;
        }
        Poly b = poly_pow_mod(nrm, (F.q() - 1) / 2, g);
        split = poly_gcd(poly_sub(b, Poly::one(F)), g);
      }
      if (split.deg() > 0 && split.deg() < g.deg()) {
        Poly rest = poly_divrem(g, split).first;
        self(self, std::move(split), d);
        self(self, std::move(rest), d);
        return;
      }
    }
    check(false, "equal-degree splitting failed to converge");
  };

  for (unsigned d = 1; f.deg() > 0 && 2 * d <= unsigned(f.deg()); ++d) {
    h = poly_pow_mod(h, F.q(), f);
    Poly g = poly_gcd(poly_sub(h, poly_x(F)), f);
    if (g.deg() > 0) {
      edf(edf, g, d);
      f = poly_divrem(f, g).first;
      h = poly_divrem(h, f).second;
    }
  }
  if (f.deg() > 0) out.push_back(std::move(f));
}

void factor_rec(const Poly& f, std::map<std::vector<uint64_t>, std::pair<Poly, unsigned>>& acc,
                unsigned mult, std::mt19937_64& rng) {
  const FieldCtx& F = *f.F;
  if (f.deg() < 1) return;
  Poly d = derivative(f);
  if (d.is_zero()) {
    // f = g(t^p): take the p-th root coefficientwise (a^(1/p) = a^(p^(k-1)))
    std::vector<uint64_t> root(size_t(f.deg() / F.p()) + 1, 0);
    for (size_t i = 0; i < root.size(); ++i) root[i] = F.frobenius(f.coeff(i * F.p()), F.k() - 1);
    factor_rec(Poly{&F, std::move(root)}.trimmed(), acc, mult * unsigned(F.p()), rng);
    return;
  }
  Poly g = poly_gcd(f, d);
  if (g.deg() == 0) {
    std::vector<Poly> irr;
    factor_squarefree(f, irr, rng);
    for (auto& pf : irr) {
      auto key = pf.c;
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(std::move(key), std::make_pair(std::move(pf), mult));
      else
        it->second.second += mult;
    }
    return;
  }
  factor_rec(g, acc, mult, rng);
  factor_rec(poly_divrem(f, g).first, acc, mult, rng);
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factorize(const Poly& f) {
  check(!f.is_zero(), "cannot factor the zero polynomial");
  std::mt19937_64 rng(0x5eed5eedULL);
  std::map<std::vector<uint64_t>, std::pair<Poly, unsigned>> acc;
  factor_rec(poly_make_monic(f), acc, 1, rng);
  std::vector<std::pair<Poly, unsigned>> out;
  out.reserve(acc.size());
  for (auto& [k, v] : acc) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

Poly reciprocal(const Poly& f) {
  check(f.is_monic() && f.constant() != 0, "reciprocal needs a monic polynomial with nonzero constant");
  const FieldCtx& F = *f.F;
  uint64_t ci = F.inv(f.constant());
  std::vector<uint64_t> r(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r[i] = F.mul(f.c[f.c.size() - 1 - i], ci);
  return Poly{&F, std::move(r)};
}

Poly conj_reciprocal(const Poly& f) {
  const FieldCtx& F = *f.F;
  check(F.k() % 2 == 0, "conjugate-reciprocal needs a quadratic extension field");
  return frobenius_coeffs(reciprocal(f), F.k() / 2);
}

bool in_gl_index(const Poly& f) {
  return f.deg() >= 1 && f.is_monic() && f.constant() != 0 && is_irreducible(f);
}

bool in_gu_index(const Poly& f) {
  if (!(f.deg() >= 1 && f.is_monic() && f.constant() != 0)) return false;
  if (!(conj_reciprocal(f) == f)) return false;
  auto fac = factorize(f);
  if (fac.size() == 1 && fac[0].second == 1) return true;  // irreducible
  if (fac.size() == 2 && fac[0].second == 1 && fac[1].second == 1)
    return conj_reciprocal(fac[0].first) == fac[1].first;
  return false;
}

namespace {

std::mutex cache_mx;

uint64_t checked_pow_capped(uint64_t base, unsigned e, uint64_t cap) {
  uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// degree-d members of the linear index set, by exhaustive scan
std::vector<Poly> scan_gl_degree(const FieldCtx& F, unsigned d) {
  if (checked_pow_capped(F.q(), d, kScanCap) > kScanCap)
    throw CapError("irreducible scan space " + std::to_string(F.q()) + "^" + std::to_string(d) + " exceeds cap");
  std::vector<Poly> out;
  uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= F.q();
  for (uint64_t enc = 0; enc < total; ++enc) {
    if (enc % F.q() == 0) continue;  // zero constant term
    std::vector<uint64_t> coeffs(d + 1);
    uint64_t v = enc;
    for (unsigned i = 0; i < d; ++i) {
      coeffs[i] = v % F.q();
      v /= F.q();
    }
    coeffs[d] = F.one();
    Poly f{&F, std::move(coeffs)};
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;  // scan order is already the canonical order within one degree
}

// odd-degree members of the unitary index set over Fq2 = GF(q^2):
// orbits of size d under x -> x^(-q) inside the order-(q^d+1) subgroup of
// GF(q^(2d))*, one monic polynomial per orbit
std::vector<Poly> orbit_gu_degree(const FieldCtx& Fq2, unsigned d) {
  unsigned k0 = Fq2.k() / 2;
  uint64_t p = Fq2.p();
  unsigned big_k = Fq2.k() * d;
  if (big_k > 16 || checked_pow_capped(p, big_k, uint64_t(1) << 32) > (uint64_t(1) << 32))
    throw CapError("index enumeration needs GF(" + std::to_string(p) + "^" + std::to_string(big_k) + "), beyond the field cap");
  const FieldCtx& big = FieldCtx::get(p, big_k);
  const SubfieldMap& down_map = subfield_map(Fq2, big);

  uint64_t q = 1;
  for (unsigned i = 0; i < k0; ++i) q *= p;
  uint64_t qd = 1;
  for (unsigned i = 0; i < d; ++i) qd *= q;
  uint64_t sub_order = qd + 1;
  check((big.q() - 1) % sub_order == 0, "norm-one subgroup order must divide the big group order");
  uint64_t z = big.pow(big.primitive_element(), (big.q() - 1) / sub_order);

  auto phi = [&](uint64_t x) { return big.inv(big.frobenius(x, k0)); };  // x^(-q)

  std::vector<Poly> out;
  uint64_t alpha = big.one();
  for (uint64_t step = 0; step < sub_order; ++step, alpha = big.mul(alpha, z)) {
    // orbit of alpha under phi; sizes divide 2d
    uint64_t orbit[64];
    unsigned len = 0;
    uint64_t x = alpha;
    bool minimal = true;
    do {
      if (x < alpha) {
        minimal = false;
        break;
      }
      check(len < 2 * d + 1, "orbit size exceeded bound");
      orbit[len++] = x;
      x = phi(x);
    } while (x != alpha);
    if (!minimal || len != d) continue;
    Poly f = Poly::one(big);
    for (unsigned i = 0; i < len; ++i) f = poly_mul(f, Poly::x_minus(big, orbit[i]));
    auto small = project_poly(f, down_map);
    check(small.has_value(), "orbit polynomial has coefficients outside GF(q^2)");
    out.push_back(std::move(*small));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<Poly> gu_degree(const FieldCtx& Fq2, unsigned d) {
  if (d % 2 == 1) return orbit_gu_degree(Fq2, d);
  // even degree: g * conj_reciprocal(g) for irreducible g of degree d/2
  // not fixed by the involution, one per pair
  std::vector<Poly> out;
  for (const Poly& g : gl_index_polys(Fq2, d / 2)) {
    if (unsigned(g.deg()) != d / 2) continue;
    Poly gc = conj_reciprocal(g);
    if (gc == g || poly_less(gc, g)) continue;
    out.push_back(poly_mul(g, gc));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

}  // namespace

const std::vector<Poly>& gl_index_polys(const FieldCtx& F, unsigned max_deg) {
  static std::map<std::pair<const FieldCtx*, unsigned>, std::vector<Poly>> cache;
  std::lock_guard<std::mutex> lock(cache_mx);
  auto key = std::make_pair(&F, max_deg);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Poly> all;
  for (unsigned d = 1; d <= max_deg; ++d) {
    auto part = scan_gl_degree(F, d);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return cache.emplace(key, std::move(all)).first->second;
}

const std::vector<Poly>& gu_index_polys(const FieldCtx& Fq2, unsigned max_deg) {
  check(Fq2.k() % 2 == 0, "unitary index polynomials live over a quadratic extension");
  static std::map<std::pair<const FieldCtx*, unsigned>, std::vector<Poly>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mx);
    auto it = cache.find(std::make_pair(&Fq2, max_deg));
    if (it != cache.end()) return it->second;
  }
  std::vector<Poly> all;
  for (unsigned d = 1; d <= max_deg; ++d) {
    auto part = gu_degree(Fq2, d);  // may build fields / recurse into gl cache
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::lock_guard<std::mutex> lock(cache_mx);
  return cache.emplace(std::make_pair(&Fq2, max_deg), std::move(all)).first->second;
}

const SubfieldMap& subfield_map(const FieldCtx& small, const FieldCtx& big) {
  check(small.p() == big.p() && big.k() % small.k() == 0, "no subfield embedding between these fields");
  static std::map<std::pair<const FieldCtx*, const FieldCtx*>, SubfieldMap> cache;
  std::lock_guard<std::mutex> lock(cache_mx);
  auto key = std::make_pair(&small, &big);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  SubfieldMap m{&small, &big, {}, {}};
  if (&small == &big) {
    m.up.resize(small.q());
    for (uint64_t a = 0; a < small.q(); ++a) {
      m.up[a] = a;
      m.down.emplace(a, a);
    }
    return cache.emplace(key, std::move(m)).first->second;
  }

  // the subfield of |small| elements inside big is generated by
  // beta = g^((|big|-1)/(|small|-1)); find the least root of small's modulus
  // among its powers (modulus coefficients are prime-field constants, whose
  // encodings agree in every field)
  uint64_t stride = (big.q() - 1) / (small.q() - 1);
  uint64_t beta = big.pow(big.primitive_element(), stride);
  const auto& mod = small.modulus();
  auto eval_mod = [&](uint64_t x) {
    uint64_t acc = 0;
    for (int i = int(mod.size()) - 1; i >= 0; --i) acc = big.add(big.mul(acc, x), mod[size_t(i)] % big.p());
    return acc;
  };
  uint64_t root = 0;
  bool found = false;
  uint64_t pw = big.one();
  for (uint64_t j = 0; j + 1 < small.q(); ++j, pw = big.mul(pw, beta))
    if (eval_mod(pw) == 0 && (!found || pw < root)) {
      root = pw;
      found = true;
    }
  check(found || small.k() == 1, "modulus root not found in subfield");
  m.up.resize(small.q());
  for (uint64_t a = 0; a < small.q(); ++a) {
    auto co = small.coords(a);
    uint64_t acc = 0;
    for (int i = int(co.size()) - 1; i >= 0; --i) acc = big.add(big.mul(acc, root), co[size_t(i)] % big.p());
    m.up[a] = acc;
    m.down.emplace(acc, a);
  }
  check(m.down.size() == small.q(), "subfield embedding is not injective");
  return cache.emplace(key, std::move(m)).first->second;
}

Poly embed_poly(const Poly& f, const SubfieldMap& m) {
  check(f.F == m.small, "embed_poly: field mismatch");
  std::vector<uint64_t> r(f.c.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = m.embed(f.c[i]);
  return Poly{m.big, std::move(r)};
}

std::optional<Poly> project_poly(const Poly& f, const SubfieldMap& m) {
  check(f.F == m.big, "project_poly: field mismatch");
  std::vector<uint64_t> r(f.c.size());
  for (size_t i = 0; i < r.size(); ++i) {
    auto v = m.project(f.c[i]);
    if (!v.has_value()) return std::nullopt;
    r[i] = *v;
  }
  return Poly{m.small, std::move(r)};
}

}  // namespace sureal
