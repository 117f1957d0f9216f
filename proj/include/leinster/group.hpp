#pragma once

// Brute-force finite groups given by multiplication tables.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leinster/natural.hpp"
#include "leinster/zm_triple.hpp"

namespace leinster::oracle {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 512;

/// Largest group order the oracle accepts. LEINSTER_ORDER_CAP overrides the default.
std::size_t order_cap();

class FiniteGroup {
 public:
  /// Row-major order x order table; element 0 must be the identity.
  /// Checks the Latin-square property always and associativity when
  /// order <= order_cap(). Throws DomainError on a malformed table.
  FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  std::size_t element_order(Element a) const noexcept { return element_order_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool is_abelian() const;
  bool is_cyclic() const;

 private:
  void validate() const;

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<std::string> labels_;
};

struct Subgroup {
  std::vector<Element> elements;  // sorted, contains 0
  bool is_normal = false;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Element x) const;
};

/// Throws ResourceError when `order` exceeds the cap.
void check_order_cap(std::size_t order);

FiniteGroup build_cyclic(std::size_t n);
FiniteGroup build_direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Direct product of cyclic groups of the given orders, mixed-radix indexed
/// with the last factor varying fastest. Empty list is the trivial group.
FiniteGroup build_abelian(std::span<const std::size_t> factors);

/// Elements of order two in build_abelian(factors).
std::vector<Element> order_two_elements(std::span<const std::size_t> factors);

/// Dih(A) = A x| C_2 with inversion; element (a, e) has index e*|A| + a.
FiniteGroup build_generalized_dihedral(std::span<const std::size_t> factors);

/// Dic(A) = <A, x | x^2 = y, x^-1 a x = a^-1>; y is an index into build_abelian(factors).
FiniteGroup build_generalized_dicyclic(std::span<const std::size_t> factors, Element y);

/// Element b^j a^i has index j*m + i.
FiniteGroup build_zm(const ZMTriple& t);

/// Aff(F_p) for p prime; (a, b) with a in 1..p-1 has index (a-1)*p + b.
FiniteGroup build_affine_prime(const Natural& p);

/// Every subgroup exactly once, sorted by (order, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

/// Sum of |N| over normal subgroups N of G.
Natural group_divisor_sum(const FiniteGroup& g);
Natural group_divisor_sum(std::span<const Subgroup> lattice);

/// G/N with cosets ordered by their least element. Throws DomainError if N is not normal.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

/// Every Sylow subgroup normal.
bool is_nilpotent(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g, std::span<const Subgroup> lattice);

}  // namespace leinster::oracle
