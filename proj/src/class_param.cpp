#include "sureal/class_param.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sureal/errors.hpp"

namespace sureal {

Partition Partition::of(std::vector<uint32_t> p) {
  unsigned total = 0;
  for (auto x : p) {
    if (x == 0) throw DataError("partition parts must be positive");
    total += x;
    if (total > 64) throw DataError("partition size exceeds 64");
  }
  std::sort(p.begin(), p.end(), std::greater<uint32_t>());
  return Partition{std::move(p)};
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  s += ')';
  return s;
}

namespace {

void gen_partitions(unsigned rem, uint32_t max_part, std::vector<uint32_t>& cur,
                    std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (uint32_t p = std::min<uint32_t>(max_part, rem); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(rem - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<uint32_t> cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::GU: return "GU";
    case Family::SU: return "SU";
    case Family::Op: return "O+";
    case Family::Om: return "O-";
    case Family::SOp: return "SO+";
    case Family::SOm: return "SO-";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  static const std::pair<const char*, Family> table[] = {
      {"GL", Family::GL},  {"SL", Family::SL},   {"GU", Family::GU},   {"SU", Family::SU},
      {"O+", Family::Op},  {"O-", Family::Om},   {"SO+", Family::SOp}, {"SO-", Family::SOm},
  };
  for (auto& [name, fam] : table) {
    if (s == name) return fam;
  }
  return std::nullopt;
}

Family ambient_family(Family f) {
  switch (f) {
    case Family::SL: return Family::GL;
    case Family::SU: return Family::GU;
    case Family::SOp: return Family::Op;
    case Family::SOm: return Family::Om;
    default: return f;
  }
}

const FieldCtx& field_for_q(uint64_t q, bool square) {
  auto primes = prime_factors(q);
  if (primes.size() != 1) throw DataError("q must be a prime power");
  uint64_t p = primes[0];
  unsigned k = 0;
  uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) throw DataError("q must be a prime power");
  return FieldCtx::get(p, square ? 2 * k : k);
}

ClassParam ClassParam::make(Family family, unsigned n, uint64_t q,
                            std::vector<std::pair<Poly, Partition>> assignment) {
  ClassParam c;
  c.family = family;
  c.n = n;
  c.q = q;
  const FieldCtx& F = field_for_q(q, is_unitary(family));
  for (auto& [f, mu] : assignment) {
    if (f.F != &F) throw DataError("assignment key over the wrong field");
    mu = Partition::of(std::move(mu.parts));
  }
  std::sort(assignment.begin(), assignment.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  for (size_t i = 1; i < assignment.size(); ++i) {
    if (assignment[i - 1].first == assignment[i].first)
      throw DataError("duplicate assignment key");
  }
  c.assignment = std::move(assignment);
  return c;
}

const FieldCtx& ClassParam::poly_field() const { return field_for_q(q, is_unitary(family)); }

const Partition* ClassParam::partition_of(const Poly& f) const {
  auto it = std::lower_bound(
      assignment.begin(), assignment.end(), f,
      [](const auto& entry, const Poly& key) { return poly_less(entry.first, key); });
  if (it != assignment.end() && it->first == f) return &it->second;
  return nullptr;
}

std::string ClassParam::str() const {
  std::ostringstream os;
  os << family_name(family) << " n=" << n << " q=" << q << " {";
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (i) os << "; ";
    os << assignment[i].first.str() << " -> " << assignment[i].second.str();
  }
  os << "}";
  return os.str();
}

Validation validate(const ClassParam& c) {
  auto fail = [](std::string m) { return Validation{false, std::move(m)}; };
  if (c.n < 1 || c.n > 64) return fail("n must be in [1, 64]");
  const FieldCtx* F = nullptr;
  try {
    F = &field_for_q(c.q, is_unitary(c.family));
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (is_orthogonal(c.family) && c.q % 2 == 0) return fail("orthogonal families require odd q");
  if (c.assignment.empty()) return fail("empty assignment");
  unsigned total = 0;
  for (size_t i = 0; i < c.assignment.size(); ++i) {
    const auto& [f, mu] = c.assignment[i];
    if (f.F != F) return fail("assignment key over the wrong field");
    bool ok_key = is_unitary(c.family) ? in_gu_index(f) : in_gl_index(f);
    if (!ok_key) return fail("assignment key is not a valid index element: " + f.str());
    if (mu.empty()) return fail("empty partition for key " + f.str());
    for (size_t j = 0; j < mu.parts.size(); ++j) {
      if (mu.parts[j] == 0) return fail("zero part in partition for key " + f.str());
      if (j && mu.parts[j - 1] < mu.parts[j]) return fail("partition parts not nonincreasing");
    }
    if (i && !poly_less(c.assignment[i - 1].first, f)) return fail("assignment keys not sorted");
    total += unsigned(f.deg()) * mu.size();
  }
  if (total != c.n)
    return fail("degrees weighted by partition sizes sum to " + std::to_string(total) +
                ", expected n=" + std::to_string(c.n));
  return {};
}

Partition class_type(const ClassParam& c) {
  std::map<uint32_t, unsigned> mult;  // part value -> n_i
  for (const auto& [f, mu] : c.assignment) {
    unsigned d = unsigned(f.deg());
    for (auto part : mu.parts) mult[part] += d;
  }
  std::vector<uint32_t> parts;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it)
    parts.insert(parts.end(), it->second, it->first);
  return Partition{std::move(parts)};
}

bool in_special(const ClassParam& c) {
  const FieldCtx& F = c.poly_field();
  uint64_t acc = F.one();
  for (const auto& [f, mu] : c.assignment)
    acc = F.mul(acc, F.pow(f.constant(), mu.size()));
  uint64_t sign = (c.n % 2 == 1) ? F.neg(F.one()) : F.one();
  return acc == sign;
}

uint64_t split_count(const ClassParam& c) {
  if (is_orthogonal(c.family)) throw DataError("split_count is for linear and unitary data");
  uint64_t g = is_unitary(c.family) ? c.q + 1 : c.q - 1;
  for (auto part : class_type(c).parts) g = std::gcd(g, uint64_t(part));
  return g;
}

JordanParts jordan_decompose(const ClassParam& c) {
  JordanParts jp;
  jp.unipotent = class_type(c);
  for (const auto& [f, mu] : c.assignment)
    jp.semisimple.emplace_back(f, Partition{std::vector<uint32_t>(mu.size(), 1)});
  return jp;
}

std::vector<ElementaryDivisor> elementary_divisors(const ClassParam& c) {
  std::vector<ElementaryDivisor> out;
  for (const auto& [f, mu] : c.assignment) {
    std::map<uint32_t, uint32_t> mult;
    for (auto part : mu.parts) ++mult[part];
    for (auto [e, m] : mult) out.push_back({f, e, m});
  }
  return out;
}

bool is_orthogonal_class(const ClassParam& c) {
  if (is_unitary(c.family)) throw DataError("is_orthogonal_class takes data over GF(q)");
  if (c.q % 2 == 0) throw DataError("is_orthogonal_class requires odd q");
  const FieldCtx& F = c.poly_field();
  for (const auto& [f, mu] : c.assignment) {
    const Partition* rev = c.partition_of(reciprocal(f));
    if (rev == nullptr || !(*rev == mu)) return false;
  }
  const Poly t_minus = Poly::x_minus(F, F.one());
  const Poly t_plus = Poly::x_minus(F, F.neg(F.one()));
  for (const Poly* f : {&t_minus, &t_plus}) {
    const Partition* mu = c.partition_of(*f);
    if (mu == nullptr) continue;
    std::map<uint32_t, uint32_t> mult;
    for (auto part : mu->parts) ++mult[part];
    for (auto [e, m] : mult) {
      if (e % 2 == 0 && m % 2 == 1) return false;
    }
  }
  return true;
}

ClassParam to_linear_data(const ClassParam& c) {
  if (!is_unitary(c.family)) throw DataError("to_linear_data takes unitary class data");
  const FieldCtx& Fq2 = c.poly_field();
  const FieldCtx& Fq = field_for_q(c.q);
  const SubfieldMap& down = subfield_map(Fq, Fq2);
  std::vector<std::pair<Poly, Partition>> out;
  for (const auto& [f, mu] : c.assignment) {
    Poly rev = reciprocal(f);
    if (rev == f) {
      auto g = project_poly(f, down);
      check(g.has_value(), "reciprocal-fixed key must have subfield coefficients");
      out.emplace_back(*g, mu);
      continue;
    }
    const Partition* partner = c.partition_of(rev);
    if (partner == nullptr || !(*partner == mu))
      throw DataError("keys swapped by reciprocal carry unequal partitions");
    if (!poly_less(f, rev)) continue;  // pair handled at its smaller member
    auto prod = project_poly(poly_mul(f, rev), down);
    check(prod.has_value(), "reciprocal pair product must have subfield coefficients");
    for (const auto& [g, m] : factorize(*prod)) {
      check(m == 1, "reciprocal pair product must be squarefree over the subfield");
      out.emplace_back(g, mu);
    }
  }
  return ClassParam::make(Family::GL, c.n, c.q, std::move(out));
}

}  // namespace sureal
