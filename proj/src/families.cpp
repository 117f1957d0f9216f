#include "leinster/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "leinster/errors.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"

namespace leinster::families {

class ZMTripleFactory {
 public:
  static ZMTriple make(Natural m, Natural n, Natural r) { return ZMTriple(std::move(m), std::move(n), std::move(r)); }
};

namespace {

struct KindName {
  GroupKind kind;
  std::string_view canonical;
  std::string_view short_name;
};

constexpr std::array<KindName, 5> kKindNames = {{
    {GroupKind::leinster, "Leinster", "leinster"},
    {GroupKind::quasi_leinster, "QuasiLeinster", "quasi"},
    {GroupKind::almost_leinster, "AlmostLeinster", "almost"},
    {GroupKind::abundant_other, "AbundantOther", "abundant"},
    {GroupKind::deficient_other, "DeficientOther", "deficient"},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

// gcd(m, r^k - 1), computed modulo m so huge exponents stay cheap.
Natural gcd_with_power_minus_one(const Natural& m, const Natural& r, const Natural& k) {
  if (m.is_one()) return 1;
  const Natural x = powm(r, k, m);
  return gcd(m, (x + m - 1) % m);
}

}  // namespace

std::string_view to_string(GroupKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.canonical;
  }
  return "?";
}

std::optional<GroupKind> parse_group_kind(std::string_view text) {
  for (const auto& k : kKindNames) {
    if (iequals(text, k.canonical) || iequals(text, k.short_name)) return k.kind;
  }
  return std::nullopt;
}

GroupClass classify_group(const Natural& divisor_sum, const Natural& order) {
  if (order.is_zero()) throw DomainError("classify_group: order must be positive");
  const Natural twice = order * 2;
  GroupKind kind;
  if (divisor_sum == twice) {
    kind = GroupKind::leinster;
  } else if (divisor_sum == twice + 1) {
    kind = GroupKind::quasi_leinster;
  } else if (divisor_sum + 1 == twice) {
    kind = GroupKind::almost_leinster;
  } else if (divisor_sum > twice) {
    kind = GroupKind::abundant_other;
  } else {
    kind = GroupKind::deficient_other;
  }
  return {kind, divisor_sum, order};
}

std::optional<std::string> zm_violation(const Natural& m, const Natural& n, const Natural& r) {
  if (m.is_zero() || n.is_zero()) return "m and n must be positive";
  if (!gcd(m, n).is_one()) return "gcd(m,n) != 1";
  if (m > Natural(1) && r >= m) return "r must be reduced (r < m)";
  // gcd(m, r - 1) with r = 0 reads as gcd(m, -1) = 1.
  if (!r.is_zero() && !gcd(m, r - 1).is_one()) return "gcd(m,r-1) != 1";
  if (powm(r, n, m) != Natural(1) % m) return "r^n != 1 (mod m)";
  return std::nullopt;
}

std::optional<ZMTriple> zm_validate(const Natural& m, const Natural& n, const Natural& r) {
  if (zm_violation(m, n, r)) return std::nullopt;
  return ZMTripleFactory::make(m, n, r);
}

std::vector<LatticeTriple> zm_normal_triples(const ZMTriple& t) {
  const Natural order = t.m() * t.n();
  std::vector<LatticeTriple> out;
  for (const auto& n1 : numtheory::divisors(t.n())) {
    const Natural g = gcd_with_power_minus_one(t.m(), t.r(), n1);
    for (const auto& m1 : numtheory::divisors(g)) {
      out.push_back({m1, n1, 0, order / (m1 * n1)});
    }
  }
  return out;
}

std::vector<LatticeTriple> zm_subgroup_triples(const ZMTriple& t) {
  const Natural order = t.m() * t.n();
  const unsigned long n = t.n().to_u64();
  mpz_class r_pow_n;
  mpz_pow_ui(r_pow_n.get_mpz_t(), t.r().mpz().get_mpz_t(), n);
  const mpz_class numerator = r_pow_n - 1;

  const auto m_divisors = numtheory::divisors(t.m());
  std::vector<LatticeTriple> out;
  for (const auto& n1 : numtheory::divisors(t.n())) {
    mpz_class r_pow_n1;
    mpz_pow_ui(r_pow_n1.get_mpz_t(), t.r().mpz().get_mpz_t(), n1.to_u64());
    const mpz_class denominator = r_pow_n1 - 1;
    // (r^n - 1)/(r^n1 - 1) = 1 + r^n1 + ... + r^(n - n1), which is n/n1 when r = 1.
    mpz_class quotient;
    if (denominator == 0) {
      quotient = (t.n() / n1).mpz();
    } else {
      mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    }
    for (const auto& m1 : m_divisors) {
      // m1 | s*Q exactly when s is a multiple of m1 / gcd(m1, Q).
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), m1.mpz().get_mpz_t(), quotient.get_mpz_t());
      const Natural step = m1 / Natural(g);
      const Natural sub_order = order / (m1 * n1);
      for (Natural s = 0; s < m1; s += step) out.push_back({m1, n1, s, sub_order});
    }
  }
  return out;
}

Natural zm_divisor_sum(const ZMTriple& t) {
  Natural closed_form = 0;
  for (const auto& n1 : numtheory::divisors(t.n())) {
    const Natural g = gcd_with_power_minus_one(t.m(), t.r(), n1);
    closed_form += (t.m() / g) * (t.n() / n1) * numtheory::divisor_sum(g);
  }
  Natural lattice_sum = 0;
  for (const auto& triple : zm_normal_triples(t)) lattice_sum += triple.subgroup_order;

  if (closed_form != lattice_sum) {
    throw InvariantError("ZM(" + t.m().str() + "," + t.n().str() + "," + t.r().str() + "): closed form " +
                         closed_form.str() + " != normal-triple sum " + lattice_sum.str());
  }
  return closed_form;
}

Natural affine_divisor_sum(const Natural& q) {
  if (q < Natural(2) || !numtheory::prime_power_decompose(q)) {
    throw DomainError("affine: q = " + q.str() + " is not a prime power");
  }
  return Natural(1) + q * numtheory::divisor_sum(q - 1);
}

AffineClass affine_classify(const Natural& q) {
  const Natural d = affine_divisor_sum(q);
  AffineClass out{classify_group(d, q * (q - 1))};
  if (q == Natural(2)) {
    out.stated_label = GroupKind::quasi_leinster;
  } else if (numtheory::classify_number(q - 1).perfect) {
    out.stated_label = GroupKind::almost_leinster;
  } else {
    out.stated_label = out.cls.kind;
  }
  out.label_differs = out.stated_label != out.cls.kind;
  return out;
}

Natural dihedral_divisor_sum(const Natural& n) {
  if (n.is_zero()) throw DomainError("dihedral: n must be positive");
  return numtheory::divisor_sum(n) + n * (n.is_even() ? 4 : 2);
}

Natural generalized_dihedral_divisor_sum(std::span<const std::size_t> factors) {
  const auto a = oracle::build_abelian(factors);
  const auto lattice = oracle::all_subgroups(a);

  std::vector<oracle::Element> squares;
  for (oracle::Element x = 0; x < a.order(); ++x) squares.push_back(a.mul(x, x));

  // Every subgroup of A is normal; each A1 containing A^2 adds [A:A1]
  // normal dihedral subgroups of order 2|A1|, i.e. 2|A| in total.
  Natural sum_all = 0;
  Natural containing_squares = 0;
  for (const auto& s : lattice) {
    sum_all += Natural(s.order());
    if (std::all_of(squares.begin(), squares.end(), [&](oracle::Element x) { return s.contains(x); })) {
      ++containing_squares;
    }
  }
  return sum_all + Natural(2 * a.order()) * containing_squares;
}

Natural dicyclic_divisor_sum(const Natural& n) {
  if (n < Natural(2)) throw DomainError("dicyclic: n must be at least 2 (|A| = 2n, n > 1)");
  return numtheory::divisor_sum(n * 2) + n * (n.is_even() ? 8 : 4);
}

Natural pq_divisor_sum(const Natural& p, const Natural& q) {
  if (!numtheory::is_prime(p) || !numtheory::is_prime(q) || p >= q || !divides(p, q - 1)) {
    throw DomainError("pq: need primes p < q with p | q-1, got p=" + p.str() + ", q=" + q.str());
  }
  return Natural(1) + q + p * q;
}

NilpotentClass nilpotent_classify(const Natural& n, bool is_cyclic) {
  if (!is_cyclic) return {GroupKind::abundant_other, std::nullopt};
  const Natural d = numtheory::divisor_sum(n);
  return {classify_group(d, n).kind, d};
}

}  // namespace leinster::families
