#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sureal/partition.hpp"
#include "sureal/poly.hpp"

namespace sureal {

enum class Family : uint8_t { GL, SL, GU, SU, Op, Om, SOp, SOm };

/// Wire names: "GL" "SL" "GU" "SU" "O+" "O-" "SO+" "SO-".
const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

inline bool is_unitary(Family f) { return f == Family::GU || f == Family::SU; }
inline bool is_orthogonal(Family f) {
  return f == Family::Op || f == Family::Om || f == Family::SOp || f == Family::SOm;
}
/// Families cut out by a determinant condition inside their ambient group.
inline bool is_special(Family f) {
  return f == Family::SL || f == Family::SU || f == Family::SOp || f == Family::SOm;
}
/// GL for SL, GU for SU, O+- for SO+-; identity on the rest.
Family ambient_family(Family f);

/// Conjugacy class data: a finite assignment of partitions to polynomial
/// indices.  Keys live over GF(q) for linear and orthogonal families and over
/// GF(q^2) for unitary ones; each key f is paired with a nonempty partition
/// mu(f), and sum(deg f * |mu(f)|) = n.
struct ClassParam {
  Family family = Family::GL;
  unsigned n = 0;
  uint64_t q = 0;
  std::vector<std::pair<Poly, Partition>> assignment;  // sorted by key, unique keys

  /// Sorts the assignment; throws DataError on duplicate keys, a bad q
  /// (not a prime power, or out of field caps), or keys over the wrong field.
  /// Structural validity beyond that is checked by validate().
  static ClassParam make(Family family, unsigned n, uint64_t q,
                         std::vector<std::pair<Poly, Partition>> assignment);

  /// Field the keys must live over: GF(q), or GF(q^2) for unitary families.
  const FieldCtx& poly_field() const;

  /// Partition attached to the key f, or nullptr if f is not a key.
  const Partition* partition_of(const Poly& f) const;

  std::string str() const;
};

/// The field GF(q) (or GF(q^2) when square is true).  Throws DataError if q
/// is not a prime power, CapError if out of range.
const FieldCtx& field_for_q(uint64_t q, bool square = false);

struct Validation {
  bool ok = true;
  std::string message;  // empty iff ok
};

/// Full structural check: n in [1,64], q a prime power (odd for orthogonal
/// families), every key a valid index element of the right field, every
/// partition nonempty, degrees weighted by partition sizes summing to n.
/// Never throws on arbitrary ClassParam contents.
Validation validate(const ClassParam& c);

/// Unipotent type: the partition with multiplicity
/// n_i = sum_f deg(f) * (number of parts of mu(f) equal to i) for each i.
Partition class_type(const ClassParam& c);

/// True if the class lies in the determinant-one subgroup: the product of
/// constant terms of f^{|mu(f)|} equals (-1)^n.
bool in_special(const ClassParam& c);

/// Number of classes of the determinant-one subgroup the ambient class meets:
/// gcd of q -+ 1 (minus for linear, plus for unitary) and all parts of the
/// class type.  Throws DataError for orthogonal families.
uint64_t split_count(const ClassParam& c);

/// Multiplicative Jordan decomposition.  The unipotent part equals
/// class_type(c); the semisimple part assigns (1^{|mu(f)|}) to each key.
struct JordanParts {
  std::vector<std::pair<Poly, Partition>> semisimple;
  Partition unipotent;
};
JordanParts jordan_decompose(const ClassParam& c);

/// Flattened module view: one entry per (key, exponent) with its multiplicity
/// in mu(key), sorted by key then exponent.
struct ElementaryDivisor {
  Poly f;
  uint32_t exponent;
  uint32_t multiplicity;
};
std::vector<ElementaryDivisor> elementary_divisors(const ClassParam& c);

/// Whether linear class data over GF(q), q odd, arises from an element of an
/// orthogonal group: mu(f) = mu(reciprocal f) for every key, and every even
/// exponent of t-1 and t+1 occurs with even multiplicity.  Throws DataError
/// for unitary keys or even q.
bool is_orthogonal_class(const ClassParam& c);

/// Transfer of unitary class data to linear class data over GF(q): a key
/// fixed by reciprocal projects to GF(q) directly; a swapped pair {f, f~}
/// (which must carry equal partitions, else DataError) contributes the
/// GF(q)-irreducible factors of f * f~, each with the shared partition.
/// Requires a unitary family; the result is a GL datum of the same n and q.
ClassParam to_linear_data(const ClassParam& c);

}  // namespace sureal
