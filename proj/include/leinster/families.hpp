#pragma once

// Closed-form D(G) and classification for the group families.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leinster/natural.hpp"
#include "leinster/zm_triple.hpp"

namespace leinster::families {

enum class GroupKind {
  leinster,         // D = 2|G|
  quasi_leinster,   // D = 2|G| + 1
  almost_leinster,  // D = 2|G| - 1
  abundant_other,
  deficient_other,
};

std::string_view to_string(GroupKind kind);
/// Accepts the canonical names and the short forms leinster/quasi/almost/abundant/deficient.
std::optional<GroupKind> parse_group_kind(std::string_view text);

struct GroupClass {
  GroupKind kind = GroupKind::deficient_other;
  Natural divisor_sum;
  Natural order;
};

GroupClass classify_group(const Natural& divisor_sum, const Natural& order);

/// Name of the first violated ZM condition, or nullopt if (m, n, r) is valid.
std::optional<std::string> zm_violation(const Natural& m, const Natural& n, const Natural& r);
std::optional<ZMTriple> zm_validate(const Natural& m, const Natural& n, const Natural& r);

struct LatticeTriple {
  Natural m1;
  Natural n1;
  Natural s;
  Natural subgroup_order;  // mn / (m1 n1)

  friend bool operator==(const LatticeTriple&, const LatticeTriple&) = default;
};

/// (m1, n1, 0) with n1 | n and m1 | gcd(m, r^n1 - 1): one per normal subgroup.
std::vector<LatticeTriple> zm_normal_triples(const ZMTriple& t);

/// (m1, n1, s) with m1 | m, n1 | n, s < m1 and m1 | s (r^n - 1)/(r^n1 - 1): one per subgroup.
std::vector<LatticeTriple> zm_subgroup_triples(const ZMTriple& t);

/// Sum over n1 | n of (m/g)(n/n1) D(g), g = gcd(m, r^n1 - 1). Cross-checked
/// against the normal-triple sum; throws InvariantError if they differ.
Natural zm_divisor_sum(const ZMTriple& t);

/// 1 + q D(q - 1) for a prime power q.
Natural affine_divisor_sum(const Natural& q);

struct AffineClass {
  GroupClass cls;
  /// Label the published affine trichotomy gives this q (q = 2 quasi, q - 1 perfect almost).
  GroupKind stated_label = GroupKind::deficient_other;
  bool label_differs = false;
};

AffineClass affine_classify(const Natural& q);

/// D(D_2n): D(n) + 2n for odd n, D(n) + 4n for even n.
Natural dihedral_divisor_sum(const Natural& n);

/// D(Dih(A)) for A = C_k1 x ... x C_kt, via the subgroup lattice of A.
Natural generalized_dihedral_divisor_sum(std::span<const std::size_t> factors);

/// D(Dic_4n): D(2n) + 4n for odd n, D(2n) + 8n for even n; n >= 2.
Natural dicyclic_divisor_sum(const Natural& n);

/// 1 + q + pq for the nonabelian group of order pq.
Natural pq_divisor_sum(const Natural& p, const Natural& q);

struct NilpotentClass {
  GroupKind kind = GroupKind::abundant_other;
  std::optional<Natural> divisor_sum;  // known only in the cyclic case
};

NilpotentClass nilpotent_classify(const Natural& n, bool is_cyclic);

}  // namespace leinster::families
