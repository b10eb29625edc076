#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sureal {

/// A finite field GF(p^k) in polynomial basis.
///
/// Elements are identified with their integer encoding
///   enc(a) = a_0 + a_1*p + ... + a_{k-1}*p^{k-1}
/// where (a_0,...,a_{k-1}) are the coordinates of a with respect to the basis
/// 1, t, ..., t^{k-1} modulo the canonical modulus.  The canonical modulus of
/// GF(p^k) is the monic irreducible of degree k over GF(p) whose non-leading
/// coefficient vector has the least integer encoding; this makes every
/// encoding below reproducible across machines and runs.  All JSON and CSV
/// output elsewhere in the library uses these encodings.
///
/// Caps: p prime, 1 <= k <= 16, p^k <= 2^32.  Dense multiplication tables are
/// built for p^k <= 512, discrete log/exp tables for p^k <= 2^20, and larger
/// fields fall back to coordinate arithmetic.
class FieldCtx {
 public:
  /// Interned accessor: one immutable context per (p, k), valid for the
  /// lifetime of the process.  Throws DataError for invalid (p, k) and
  /// CapError when p^k exceeds the documented cap.
  static const FieldCtx& get(uint64_t p, unsigned k);

  uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  /// Field size q = p^k.
  uint64_t q() const { return q_; }

  /// Canonical modulus, k+1 coordinates low-to-high, leading coefficient 1.
  const std::vector<uint64_t>& modulus() const { return modulus_; }

  // -- arithmetic on encodings ------------------------------------------
  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  /// Multiplicative inverse; throws DataError on 0.
  uint64_t inv(uint64_t a) const;
  uint64_t div(uint64_t a, uint64_t b) const;
  /// a^e for e >= 0 (0^0 = 1).
  uint64_t pow(uint64_t a, uint64_t e) const;

  uint64_t zero() const { return 0; }
  uint64_t one() const { return oneEnc_; }
  /// Encoding of the basis element t (only meaningful for k >= 2, where it
  /// equals p; for k = 1 there is no such basis element and p is out of range).
  uint64_t gen_t() const { return k_ >= 2 ? p_ : 1; }

  // -- Galois structure -------------------------------------------------
  /// Frobenius power a -> a^(p^e).  e is reduced mod k.
  uint64_t frobenius(uint64_t a, unsigned e = 1) const;

  /// Norm down to the subfield GF(p^sub_k), sub_k | k: the product of the
  /// Galois conjugates a^(p^(sub_k * i)).  The result is returned in this
  /// field's encoding; for sub_k = 1 it is always a constant, so the encoding
  /// coincides with the GF(p) encoding.
  uint64_t norm_to(uint64_t a, unsigned sub_k) const;

  /// Multiplicative order; throws DataError on 0.
  uint64_t mult_order(uint64_t a) const;

  /// Membership in the norm-one subgroup C of order p^(k/2) + 1, defined for
  /// even k when this field is GF(q0^2) over q0 = p^(k/2): true iff a != 0
  /// and a^(q0 + 1) = 1.  Throws DataError if k is odd.
  bool in_norm_one_subgroup(uint64_t a) const;

  // -- encoding helpers -------------------------------------------------
  bool valid(uint64_t a) const { return a < q_; }
  std::vector<uint64_t> coords(uint64_t a) const;
  uint64_t from_coords(const std::vector<uint64_t>& c) const;
  /// Human-readable form like "0", "2", "t", "2t+1", "t^2+2".
  std::string to_string(uint64_t a) const;

  /// A fixed generator of the multiplicative group (least encoding).
  uint64_t primitive_element() const { return gen_; }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx(uint64_t p, unsigned k);

  uint64_t mul_direct(uint64_t a, uint64_t b) const;

  uint64_t p_, q_;
  unsigned k_;
  uint64_t oneEnc_ = 1;
  std::vector<uint64_t> modulus_;       // k+1 coords, monic
  std::vector<uint64_t> redRow_;        // t^k reduced: k coords
  uint64_t gen_ = 0;                    // primitive element
  std::vector<uint64_t> qm1Factors_;    // distinct prime factors of q-1

  // acceleration tables; which ones exist depends on q
  std::vector<uint16_t> mulTab_, addTab_;      // q*q, for q <= 512
  std::vector<uint32_t> invTab_;               // q,   for q <= 512
  std::vector<uint32_t> logTab_;               // q,   for q <= 2^20
  std::vector<uint32_t> expTab_;               // 2q,  for q <= 2^20
};

/// Largest power of two dividing m (m >= 1), e.g. two_part(48) = 16.
uint64_t two_part(uint64_t m);

/// Distinct prime factors of m >= 1 in increasing order (trial division;
/// intended for the 64-bit ranges that arise from field orders).
std::vector<uint64_t> prime_factors(uint64_t m);

}  // namespace sureal
