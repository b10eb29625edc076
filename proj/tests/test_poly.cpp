#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "sureal/errors.hpp"
#include "sureal/poly.hpp"

using namespace sureal;

namespace {

Poly mk(const FieldCtx& F, std::vector<uint64_t> coeffs) { return Poly::from_coeffs(F, std::move(coeffs)); }

// reference irreducibility for small degrees: no factor of degree <= deg/2,
// checked by exhaustive trial division
bool irreducible_by_trial_division(const Poly& f) {
  const FieldCtx& F = *f.F;
  for (unsigned d = 1; 2 * d <= unsigned(f.deg()); ++d) {
    uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= F.q();
    for (uint64_t enc = 0; enc < total; ++enc) {
      std::vector<uint64_t> c(d + 1);
      uint64_t v = enc;
      for (unsigned i = 0; i < d; ++i) {
        c[i] = v % F.q();
        v /= F.q();
      }
      c[d] = F.one();
      if (poly_divrem(f, mk(F, std::move(c))).second.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("arithmetic basics over GF(3)") {
  const auto& F = FieldCtx::get(3, 1);
  Poly a = mk(F, {1, 1});  // t+1
  Poly b = mk(F, {2, 1});  // t+2
  CHECK(poly_mul(a, b) == mk(F, {2, 0, 1}));  // t^2+2
  CHECK(poly_add(a, b) == mk(F, {0, 2}));
  auto [q, r] = poly_divrem(mk(F, {2, 0, 1}), a);
  CHECK(q == b);
  CHECK(r.is_zero());
  CHECK(poly_gcd(poly_mul(a, a), poly_mul(a, b)) == a);
  CHECK(poly_eval(mk(F, {2, 0, 1}), 1) == 0);
  CHECK(mk(F, {1, 2, 0, 0}).deg() == 1);  // trailing zeros trimmed
  CHECK(Poly::zero(F).deg() == -1);
}

TEST_CASE("reciprocal involution") {
  const auto& F = FieldCtx::get(3, 1);
  // roots of t^2+t+2 are inverted by the reciprocal map
  Poly f = mk(F, {2, 1, 1});
  Poly ft = reciprocal(f);
  CHECK(ft == mk(F, {2, 2, 1}));  // t^2+2t+2
  CHECK(reciprocal(ft) == f);
  // root inversion on a split example: (t-1)(t-2) has roots {1,2}={1,2}^-1
  Poly g = poly_mul(Poly::x_minus(F, 1), Poly::x_minus(F, 2));
  CHECK(reciprocal(g) == g);
  CHECK_THROWS(reciprocal(mk(F, {0, 1})));  // zero constant

  // involution and degree preservation across a full scan
  for (const Poly& h : gl_index_polys(F, 3)) {
    CHECK(reciprocal(reciprocal(h)) == h);
    CHECK(reciprocal(h).deg() == h.deg());
    CHECK(in_gl_index(reciprocal(h)));
  }
}

TEST_CASE("conjugate-reciprocal involution over GF(9)") {
  const auto& F = FieldCtx::get(3, 2);
  const uint64_t t = 3;
  // f = x - t has root t of order 4, in C_4; alpha^(-q) = alpha for alpha in C_4
  Poly f = Poly::x_minus(F, t);
  CHECK(conj_reciprocal(f) == f);
  // x - (1+t): (1+t)^(-3): 1+t has order 8, (1+t)^(-3) = (1+t)^5 != 1+t
  Poly g = Poly::x_minus(F, 4);
  CHECK(conj_reciprocal(g) != g);
  CHECK(conj_reciprocal(conj_reciprocal(g)) == g);
  CHECK(poly_eval(conj_reciprocal(g), F.inv(F.frobenius(4, 1))) == 0);  // root is alpha^(-q)
  CHECK_THROWS_AS(conj_reciprocal(Poly::x_minus(FieldCtx::get(3, 1), 1)), std::logic_error);
}

TEST_CASE("irreducibility matches trial division") {
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{{3, 1}, {2, 2}, {5, 1}}) {
    const auto& F = FieldCtx::get(p, k);
    for (unsigned d = 2; d <= 3; ++d) {
      uint64_t total = 1;
      for (unsigned i = 0; i < d; ++i) total *= F.q();
      for (uint64_t enc = 0; enc < total; ++enc) {
        std::vector<uint64_t> c(d + 1);
        uint64_t v = enc;
        for (unsigned i = 0; i < d; ++i) {
          c[i] = v % F.q();
          v /= F.q();
        }
        c[d] = F.one();
        Poly f = mk(F, std::move(c));
        CHECK(is_irreducible(f) == irreducible_by_trial_division(f));
      }
    }
  }
}

TEST_CASE("factorization recombines, 10^4 random polynomials per field") {
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {7, 1}}) {
    const auto& F = FieldCtx::get(p, k);
    std::mt19937_64 rng(42 + p * 100 + k);
    for (int iter = 0; iter < 10000; ++iter) {
      unsigned d = 1 + unsigned(rng() % 6);
      std::vector<uint64_t> c(d + 1);
      for (unsigned i = 0; i < d; ++i) c[i] = rng() % F.q();
      c[d] = F.one();
      Poly f = mk(F, std::move(c));
      auto fac = factorize(f);
      Poly prod = Poly::one(F);
      unsigned degsum = 0;
      for (const auto& [g, m] : fac) {
        CHECK(g.is_monic());
        CHECK(is_irreducible(g));
        degsum += unsigned(g.deg()) * m;
        for (unsigned i = 0; i < m; ++i) prod = poly_mul(prod, g);
      }
      CHECK(prod == f);
      CHECK(degsum == d);
      for (size_t i = 1; i < fac.size(); ++i) CHECK(poly_less(fac[i - 1].first, fac[i].first));
    }
  }
}

TEST_CASE("factorization handles inseparable and repeated factors") {
  const auto& F = FieldCtx::get(3, 1);
  // (t+1)^3 = t^3 + 1 has zero derivative
  Poly f = mk(F, {1, 0, 0, 1});
  auto fac = factorize(f);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == mk(F, {1, 1}));
  CHECK(fac[0].second == 3);
  // (t+1)^2 (t+2)^4 t^3
  Poly g = Poly::one(F);
  for (auto [root, m] : std::vector<std::pair<uint64_t, unsigned>>{{2, 2}, {1, 4}, {0, 3}})
    for (unsigned i = 0; i < m; ++i) g = poly_mul(g, Poly::x_minus(F, root));
  auto gf = factorize(g);
  REQUIRE(gf.size() == 3);
  CHECK(gf[0].first == mk(F, {0, 1}));
  CHECK(gf[0].second == 3);
  CHECK(gf[1].first == mk(F, {1, 1}));  // t+1 = t-2
  CHECK(gf[1].second == 2);
  CHECK(gf[2].first == mk(F, {2, 1}));  // t+2 = t-1
  CHECK(gf[2].second == 4);
}

TEST_CASE("linear index enumeration") {
  const auto& F2 = FieldCtx::get(2, 1);
  auto i2 = gl_index_polys(F2, 2);
  REQUIRE(i2.size() == 2);
  CHECK(i2[0] == mk(F2, {1, 1}));        // t+1
  CHECK(i2[1] == mk(F2, {1, 1, 1}));     // t^2+t+1
  const auto& F3 = FieldCtx::get(3, 1);
  auto i3 = gl_index_polys(F3, 1);
  REQUIRE(i3.size() == 2);
  CHECK(i3[0] == mk(F3, {1, 1}));
  CHECK(i3[1] == mk(F3, {2, 1}));
  // |degree-1 members| = q-1, and the count of monic irreducibles of degree d
  // with nonzero constant matches the necklace formula (q^d - adjustments)/d
  for (uint64_t q : {2, 3, 4, 5}) {
    const auto& F = q == 4 ? FieldCtx::get(2, 2) : FieldCtx::get(q, 1);
    auto all = gl_index_polys(F, 4);
    std::map<int, int> by_deg;
    for (const auto& f : all) {
      CHECK(in_gl_index(f));
      by_deg[f.deg()]++;
    }
    CHECK(by_deg[1] == int(q - 1));
    CHECK(by_deg[2] == int((q * q - q) / 2));
    CHECK(by_deg[3] == int((q * q * q - q) / 3));
  }
}

TEST_CASE("unitary index enumeration over GF(9)") {
  const auto& F = FieldCtx::get(3, 2);
  auto u1 = gu_index_polys(F, 1);
  REQUIRE(u1.size() == 4);  // q+1 degree-1 members, roots in C_4 = {1,2,t,2t}
  std::set<uint64_t> roots;
  for (const auto& f : u1) {
    CHECK(f.deg() == 1);
    roots.insert(F.neg(f.c[0]));
  }
  CHECK(roots == std::set<uint64_t>{1, 2, 3, 6});
  for (uint64_t r : roots) CHECK(F.in_norm_one_subgroup(r));

  auto all = gu_index_polys(F, 6);
  std::map<int, int> by_deg;
  for (const auto& f : all) {
    CHECK(in_gu_index(f));
    CHECK(conj_reciprocal(f) == f);
    by_deg[f.deg()]++;
    // odd-degree members are irreducible, even-degree ones never are
    if (f.deg() % 2 == 1)
      CHECK(is_irreducible(f));
    else {
      auto fac = factorize(f);
      REQUIRE(fac.size() == 2);
      CHECK(conj_reciprocal(fac[0].first) == fac[1].first);
    }
  }
  // degree-2: pairs {g, g-conj} among the 8 degree-1 irreducibles over GF(9),
  // 4 of which are self-conjugate, giving (8-4)/2 = 2
  CHECK(by_deg[2] == 2);
  // degree-3: phi-orbits of size 3 in C_28: (28 - 4 fixed points)/3 = 8
  CHECK(by_deg[3] == 8);
  CHECK(by_deg[1] == 4);
}

TEST_CASE("unitary index enumeration respects q+1 counts across fields") {
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{{2, 2}, {3, 2}, {5, 2}, {7, 2}}) {
    const auto& F = FieldCtx::get(p, k);
    uint64_t q = p;  // k = 2 means q = p here
    auto u = gu_index_polys(F, 2);
    int d1 = 0, d2 = 0;
    for (const auto& f : u) (f.deg() == 1 ? d1 : d2)++;
    CHECK(d1 == int(q + 1));
    // degree-2: (q^2-1 - (q+1))/2 pairs
    CHECK(d2 == int((q * q - 1 - (q + 1)) / 2));
  }
}

TEST_CASE("scan caps raise CapError") {
  const auto& F81 = FieldCtx::get(3, 4);  // GF(81)
  CHECK_THROWS_AS(gl_index_polys(F81, 4), CapError);   // 81^4 > 2^24
  CHECK_NOTHROW(gl_index_polys(F81, 3));
  const auto& F9 = FieldCtx::get(3, 2);
  CHECK_THROWS_AS(gu_index_polys(F9, 9), CapError);    // GF(3^18) beyond field cap
}

TEST_CASE("subfield embedding round-trips and respects arithmetic") {
  const auto& F3 = FieldCtx::get(3, 1);
  const auto& F9 = FieldCtx::get(3, 2);
  const auto& F81 = FieldCtx::get(3, 4);
  for (auto [sm, bg] : std::vector<std::pair<const FieldCtx*, const FieldCtx*>>{{&F3, &F9}, {&F3, &F81}, {&F9, &F81}}) {
    const auto& m = subfield_map(*sm, *bg);
    CHECK(m.embed(0) == 0);
    CHECK(m.embed(sm->one()) == bg->one());
    for (uint64_t a = 0; a < sm->q(); ++a) {
      CHECK(m.project(m.embed(a)) == a);
      for (uint64_t b = 0; b < sm->q(); ++b) {
        CHECK(m.embed(sm->add(a, b)) == bg->add(m.embed(a), m.embed(b)));
        CHECK(m.embed(sm->mul(a, b)) == bg->mul(m.embed(a), m.embed(b)));
      }
    }
  }
  CHECK_FALSE(subfield_map(F3, F9).project(F9.gen_t()).has_value());  // t not in GF(3)
}
