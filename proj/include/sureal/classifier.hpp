#pragma once

#include <string>
#include <vector>

#include "sureal/class_param.hpp"

namespace sureal {

enum class Tri : uint8_t { no = 0, yes = 1, unknown = 2 };
const char* tri_name(Tri t);  // "no" "yes" "unknown"

/// Full decision record for one class datum.  Flags at the "special" level
/// (determinant-one subgroup) are populated only when the class lies in that
/// subgroup; otherwise they stay unknown with an explanatory note.  The
/// strong-reality flag of a unitary class with even q is unknown when the
/// class is real: no complete criterion is implemented for that case, and
/// guessing is worse than saying so.
struct Verdict {
  bool valid = false;
  std::string invalid_reason;  // nonempty iff !valid
  bool in_special = false;
  bool ambient_real = false;
  Tri ambient_strongly_real = Tri::unknown;
  Tri special_real = Tri::unknown;
  Tri special_strongly_real = Tri::unknown;
  /// Linear/unitary: gcd(q -+ 1, parts of the class type) — the number of
  /// special-subgroup classes the ambient class meets when it is contained in
  /// the special subgroup.  Orthogonal: 2 when the class is in SO and has no
  /// odd exponent on t -+ 1, else 1.
  uint64_t split_count = 1;
  Partition class_type;
  std::string clause;  // identifier of the rule branch that decided the headline flag
  std::vector<std::string> notes;
};

/// Ambient reality for linear and unitary data alike: the partition attached
/// to every key equals the partition attached to its reciprocal.
bool real_ambient(const ClassParam& c);

/// In the full linear group real and strongly real coincide, for every q.
bool strongly_real_GL(const ClassParam& c);

/// Unitary strong reality.  q odd: real and every even exponent of t -+ 1
/// carries even multiplicity (equivalently, the element sits in an embedded
/// orthogonal group).  q even: no (not real) or unknown (real).
Tri strongly_real_GU(const ClassParam& c);

/// Reality in the determinant-one subgroup of the linear group.  Requires
/// linear data contained in that subgroup (DataError otherwise).
bool real_SL(const ClassParam& c);

/// Strong reality in the determinant-one linear subgroup.
bool strongly_real_SL(const ClassParam& c);

/// Reality in the determinant-one unitary subgroup.  Requires unitary data
/// contained in that subgroup (DataError otherwise).
bool real_SU(const ClassParam& c);

/// Direct form of the unitary reality law for classes supported on t-1 and
/// t+1 only, at q = 3 mod 4: real iff an odd exponent exists, or (q^2-1)_2
/// divides every exponent, or the number of elementary divisors whose
/// exponent has the minimal 2-part (lying in [2, (q^2-1)_2)) is even.
/// Kept separate from real_SU as an internal cross-check.
bool real_SU_pm_unipotent(const ClassParam& c);

/// Strong reality in the determinant-one unitary subgroup.  For n = 2 mod 4
/// and q odd this adds an odd t -+ 1 exponent on top of the ambient
/// requirement; otherwise it equals the ambient answer (unknown propagates
/// at even q).
Tri strongly_real_SU(const ClassParam& c);

/// Reality in SO: automatic unless n = 2 mod 4, where it needs an odd
/// exponent on t -+ 1.  Requires odd q, the orthogonal membership condition,
/// and determinant 1 (DataError otherwise).  Strong reality coincides with
/// reality on every valid input.
bool real_SO(const ClassParam& c);
bool strongly_real_SO(const ClassParam& c);

/// Dispatcher: validates, fills every computable field, never throws on
/// malformed data (the verdict carries the reason instead).
Verdict classify(const ClassParam& c);

}  // namespace sureal
