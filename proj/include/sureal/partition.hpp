#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sureal {

/// Integer partition with parts stored in nonincreasing order.
/// The empty partition is allowed as a value but class assignments reject it.
struct Partition {
  std::vector<uint32_t> parts;

  /// Sorts a copy into canonical nonincreasing order; rejects zero parts and
  /// total size > 64.
  static Partition of(std::vector<uint32_t> p);

  unsigned size() const {
    unsigned s = 0;
    for (auto x : parts) s += x;
    return s;
  }
  bool empty() const { return parts.empty(); }
  unsigned multiplicity(uint32_t part) const {
    unsigned m = 0;
    for (auto x : parts) m += x == part;
    return m;
  }
  bool has_odd_part() const {
    for (auto x : parts) {
      if (x % 2 == 1) return true;
    }
    return false;
  }
  std::string str() const;  // "(3,1,1)", "()" for empty

  bool operator==(const Partition& o) const { return parts == o.parts; }
};

/// Deterministic total order used wherever partitions are sorted:
/// lexicographic on the nonincreasing parts sequence, so () < (1) < (1,1) <
/// (2) < (2,1) < ...
inline bool partition_less(const Partition& a, const Partition& b) { return a.parts < b.parts; }

/// All partitions of n in reverse-lexicographic order:
/// (n) first, then (n-1,1), ..., ending at (1^n).  partitions_of(0) = {()}.
std::vector<Partition> partitions_of(unsigned n);

}  // namespace sureal
