#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sureal/field.hpp"

namespace sureal {

/// Dense univariate polynomial over a fixed finite field.  Coefficients are
/// stored low-to-high as element encodings with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector and deg() == -1.
struct Poly {
  const FieldCtx* F = nullptr;
  std::vector<uint64_t> c;

  static Poly zero(const FieldCtx& F) { return Poly{&F, {}}; }
  static Poly one(const FieldCtx& F) { return Poly{&F, {F.one()}}; }
  /// t - root
  static Poly x_minus(const FieldCtx& F, uint64_t root) { return Poly{&F, {F.neg(root), F.one()}}.trimmed(); }
  /// Validates encodings and trims; coefficients low-to-high.
  static Poly from_coeffs(const FieldCtx& F, std::vector<uint64_t> coeffs);

  int deg() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == F->one(); }
  uint64_t constant() const { return c.empty() ? 0 : c[0]; }
  uint64_t leading() const { return c.empty() ? 0 : c.back(); }
  uint64_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }

  Poly trimmed() &&;
  std::string str() const;  // e.g. "t^2+2t+2"

  bool operator==(const Poly& o) const { return F == o.F && c == o.c; }
};

/// Canonical order: by degree, then by the integer encoding of the
/// coefficient sequence (most significant coefficient first).  This is the
/// order used everywhere results are sorted.
bool poly_less(const Poly& a, const Poly& b);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);
Poly poly_make_monic(const Poly& f);
uint64_t poly_eval(const Poly& f, uint64_t x);
/// base^e mod m (m nonconstant).
Poly poly_pow_mod(Poly base, uint64_t e, const Poly& m);
/// Apply the coordinate Frobenius a -> a^(p^e) to every coefficient.
Poly frobenius_coeffs(const Poly& f, unsigned e);

/// Rabin irreducibility test; deg >= 1 required.
bool is_irreducible(const Poly& f);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by the canonical polynomial order.  f must be nonzero; a constant
/// factors into nothing.  Deterministic: the internal equal-degree splitting
/// uses a fixed seed.
std::vector<std::pair<Poly, unsigned>> factorize(const Poly& f);

/// Reciprocal involution on monic f with nonzero constant: the monic
/// polynomial whose roots are the inverses of the roots of f
/// (reverse the coefficients and divide by the constant term).
Poly reciprocal(const Poly& f);

/// Conjugate-reciprocal involution for polynomials over a quadratic
/// extension GF(q^2): roots map to alpha^(-q).  Computed as the
/// coefficientwise q-power Frobenius of reciprocal(f).
Poly conj_reciprocal(const Poly& f);

/// Membership in the index set for linear-group classes: monic irreducible
/// with nonzero constant term.
bool in_gl_index(const Poly& f);

/// Membership in the index set for unitary-group classes over GF(q^2):
/// monic, nonzero constant, fixed by conj_reciprocal, and minimal with that
/// property (irreducible, or an irreducible times its conjugate-reciprocal).
bool in_gu_index(const Poly& f);

/// All linear-index polynomials over F of degree 1..max_deg in canonical
/// order.  Cached per (field, degree).  Throws CapError when the scan space
/// q^d for some required degree exceeds the documented cap.
const std::vector<Poly>& gl_index_polys(const FieldCtx& F, unsigned max_deg);

/// All unitary-index polynomials over the quadratic extension Fq2 of degree
/// 1..max_deg in canonical order.  Odd degrees are built from norm-one orbit
/// representatives in GF(q^(2d)) (no scanning); even degrees from conjugate
/// pairs of irreducibles of half the degree.  Cached.  Throws CapError when
/// a required extension field exceeds the field caps.
const std::vector<Poly>& gu_index_polys(const FieldCtx& Fq2, unsigned max_deg);

/// Embedding tables between a field and an extension containing it
/// (small.k() | big.k(), same characteristic).  The image of the small
/// field's t is the least-encoding root of its modulus inside big, which
/// pins every embedded value deterministically.
struct SubfieldMap {
  const FieldCtx* small;
  const FieldCtx* big;
  std::vector<uint64_t> up;                       // small encoding -> big encoding
  std::unordered_map<uint64_t, uint64_t> down;    // inverse on the image

  uint64_t embed(uint64_t a) const { return up[a]; }
  std::optional<uint64_t> project(uint64_t b) const {
    auto it = down.find(b);
    return it == down.end() ? std::nullopt : std::make_optional(it->second);
  }
};

const SubfieldMap& subfield_map(const FieldCtx& small, const FieldCtx& big);

/// Coefficientwise embedding small -> big.
Poly embed_poly(const Poly& f, const SubfieldMap& m);
/// Coefficientwise projection big -> small; nullopt if any coefficient is
/// outside the subfield.
std::optional<Poly> project_poly(const Poly& f, const SubfieldMap& m);

}  // namespace sureal
