#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdlib>

#include "leinster/errors.hpp"
#include "leinster/families.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"

using namespace leinster;
using namespace leinster::oracle;

namespace {

std::vector<std::size_t> orders(const std::vector<Subgroup>& subs) {
  std::vector<std::size_t> out;
  for (const auto& s : subs) out.push_back(s.order());
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup zm(unsigned m, unsigned n, unsigned r) { return build_zm(*families::zm_validate(m, n, r)); }

// S_3 from its permutation table, independent of the family builders.
FiniteGroup symmetric3() {
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<Element> table(36);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      table[i * 6 + j] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(6, table);
}

}  // namespace

TEST_CASE("table validation") {
  CHECK_NOTHROW(FiniteGroup(2, {0, 1, 1, 0}));
  CHECK_THROWS_AS(FiniteGroup(2, {1, 0, 0, 1}), DomainError);  // 0 is not the identity
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), DomainError);  // not a Latin square
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1}), DomainError);
  // Latin square with identity 0 and an element of order 2 in order 5: not a group.
  const std::vector<Element> loop = {0, 1, 2, 3, 4,  1, 0, 3, 4, 2,  2, 4, 0, 1, 3,
                                     3, 2, 4, 0, 1,  4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup(5, loop), DomainError);
}

TEST_CASE("cyclic groups") {
  CHECK(build_cyclic(1).order() == 1);
  CHECK(group_divisor_sum(build_cyclic(1)) == Natural(1));
  CHECK(group_divisor_sum(build_cyclic(2)) == Natural(3));
  CHECK(group_divisor_sum(build_cyclic(6)) == Natural(12));
  CHECK(orders(all_subgroups(build_cyclic(6))) == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(build_cyclic(2).is_cyclic());
  CHECK(build_cyclic(12).is_cyclic());
  for (std::size_t n = 1; n <= 60; ++n) {
    REQUIRE(group_divisor_sum(build_cyclic(n)) == numtheory::divisor_sum(n));
  }
}

TEST_CASE("element orders divide the group order") {
  const auto g = zm(7, 6, 3);
  std::size_t max_order = 0;
  for (Element x = 0; x < g.order(); ++x) {
    CHECK(g.order() % g.element_order(x) == 0);
    max_order = std::max(max_order, g.element_order(x));
  }
  CHECK(g.element_order(0) == 1);
  CHECK(max_order < g.order());
  CHECK_FALSE(g.is_cyclic());
}

TEST_CASE("direct products") {
  const auto c2 = build_cyclic(2), c3 = build_cyclic(3);
  const auto c6 = build_direct_product(c2, c3);
  CHECK(c6.order() == 6);
  CHECK(c6.is_cyclic());
  CHECK(group_divisor_sum(c6) == Natural(12));
  CHECK(group_divisor_sum(build_direct_product(c2, c2)) == Natural(11));
  const auto s3 = symmetric3();
  CHECK(group_divisor_sum(build_direct_product(s3, build_cyclic(1))) == group_divisor_sum(s3));
}

TEST_CASE("generalized dihedral builder") {
  const std::vector<std::size_t> three{3}, four{4}, two_two{2, 2}, two_four{2, 4}, five{5};
  const auto d6 = build_generalized_dihedral(three);
  CHECK(d6.order() == 6);
  CHECK_FALSE(d6.is_abelian());
  CHECK(group_divisor_sum(d6) == Natural(10));
  CHECK(group_divisor_sum(build_generalized_dihedral(four)) == Natural(23));
  CHECK(orders(normal_subgroups(build_generalized_dihedral(four))) == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
  CHECK(build_generalized_dihedral(two_two).order() == 8);
  CHECK(group_divisor_sum(build_generalized_dihedral(two_two)) == Natural(51));
  CHECK(group_divisor_sum(build_generalized_dihedral(two_four)) == Natural(107));
  CHECK(group_divisor_sum(build_generalized_dihedral(five)) == Natural(16));
  CHECK(group_divisor_sum(build_generalized_dihedral(std::vector<std::size_t>{})) == Natural(3));
}

TEST_CASE("generalized dicyclic builder") {
  const std::vector<std::size_t> six{6}, four{4}, ten{10}, two{2}, three{3}, two_two{2, 2};
  const auto dic12 = build_generalized_dicyclic(six, 3);
  CHECK(dic12.order() == 12);
  CHECK(group_divisor_sum(dic12) == Natural(24));
  const auto q8 = build_generalized_dicyclic(four, 2);
  CHECK(group_divisor_sum(q8) == Natural(23));
  CHECK(orders(normal_subgroups(q8)) == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
  // every subgroup of Q8 is normal, and it has a single involution
  CHECK(all_subgroups(q8).size() == normal_subgroups(q8).size());
  const auto q8_subs = all_subgroups(q8);
  CHECK(std::count_if(q8_subs.begin(), q8_subs.end(), [](const Subgroup& s) { return s.order() == 2; }) == 1);
  CHECK(group_divisor_sum(build_generalized_dicyclic(ten, 5)) == Natural(38));

  CHECK_THROWS_AS(build_generalized_dicyclic(two, 1), DomainError);
  CHECK_THROWS_AS(build_generalized_dicyclic(three, 1), DomainError);
  CHECK_THROWS_AS(build_generalized_dicyclic(six, 2), DomainError);  // a^2 has order 3
  CHECK_NOTHROW(build_generalized_dicyclic(two_two, 1));
}

TEST_CASE("ZM builder") {
  const auto g = zm(7, 6, 3);
  CHECK(g.order() == 42);
  CHECK(group_divisor_sum(g) == Natural(85));
  CHECK(orders(normal_subgroups(g)) == std::vector<std::size_t>{1, 7, 14, 21, 42});
  CHECK(g.labels().at(1) == "b^0a^1");

  const auto c6 = zm(1, 6, 1);
  CHECK(c6.is_cyclic());
  CHECK(group_divisor_sum(c6) == Natural(12));

  const auto h = zm(13, 6, 4);
  CHECK(h.order() == 78);
  CHECK(group_divisor_sum(h) == Natural(157));
  CHECK(orders(normal_subgroups(h)) == std::vector<std::size_t>{1, 13, 26, 39, 78});
  CHECK(group_divisor_sum(zm(7, 3, 2)) == Natural(29));
}

TEST_CASE("affine builder") {
  const auto c2 = build_affine_prime(2);
  CHECK(c2.order() == 2);
  CHECK(c2.is_cyclic());
  CHECK(group_divisor_sum(build_affine_prime(3)) == Natural(10));
  CHECK(group_divisor_sum(build_affine_prime(5)) == Natural(36));
  CHECK(group_divisor_sum(build_affine_prime(7)) == Natural(85));
  CHECK_THROWS_AS(build_affine_prime(4), DomainError);
}

TEST_CASE("subgroup enumeration") {
  const auto s3 = symmetric3();
  const auto subs = all_subgroups(s3);
  CHECK(subs.size() == 6);
  CHECK(orders(subs) == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  CHECK(orders(normal_subgroups(s3)) == std::vector<std::size_t>{1, 3, 6});
  CHECK(group_divisor_sum(s3) == Natural(10));
  for (const auto& s : subs) {
    CHECK(s.contains(0));
    CHECK(std::is_sorted(s.elements.begin(), s.elements.end()));
  }

  // abelian groups: every subgroup normal
  const std::vector<std::size_t> a{2, 4, 4};
  const auto g = build_abelian(a);
  CHECK(g.is_abelian());
  const auto all = all_subgroups(g);
  CHECK(std::all_of(all.begin(), all.end(), [](const Subgroup& s) { return s.is_normal; }));

  // subgroup counts of a few known groups
  CHECK(all_subgroups(build_generalized_dihedral(std::vector<std::size_t>{4})).size() == 10);
  const std::vector<std::size_t> klein{2, 2};
  CHECK(all_subgroups(build_abelian(klein)).size() == 5);
  const std::vector<std::size_t> c2cubed{2, 2, 2};
  CHECK(all_subgroups(build_abelian(c2cubed)).size() == 16);
}

TEST_CASE("quotients") {
  const auto s3 = symmetric3();
  const auto normals = normal_subgroups(s3);
  CHECK(quotient(s3, normals.back()).order() == 1);
  const auto by_identity = quotient(s3, normals.front());
  CHECK(by_identity.order() == 6);
  CHECK(group_divisor_sum(by_identity) == Natural(10));
  const auto c2 = quotient(s3, normals[1]);
  CHECK(c2.order() == 2);
  CHECK(c2.is_cyclic());

  const auto non_normal = all_subgroups(s3)[1];
  REQUIRE(non_normal.order() == 2);
  CHECK_THROWS_AS(quotient(s3, non_normal), DomainError);

  // D_8 / Z(D_8) is the Klein group
  const auto d8 = build_generalized_dihedral(std::vector<std::size_t>{4});
  const auto centre = normal_subgroups(d8)[1];
  REQUIRE(centre.order() == 2);
  CHECK(group_divisor_sum(quotient(d8, centre)) == Natural(11));
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(build_cyclic(12)));
  CHECK_FALSE(is_nilpotent(symmetric3()));
  CHECK(is_nilpotent(build_generalized_dicyclic(std::vector<std::size_t>{4}, 2)));
  CHECK_FALSE(is_nilpotent(zm(7, 6, 3)));
  CHECK(is_nilpotent(build_direct_product(build_generalized_dihedral(std::vector<std::size_t>{4}), build_cyclic(3))));
}

TEST_CASE("order cap") {
  CHECK(order_cap() == kDefaultOrderCap);
  CHECK_THROWS_AS(check_order_cap(kDefaultOrderCap + 1), ResourceError);
  CHECK_THROWS_AS(build_cyclic(kDefaultOrderCap + 1), ResourceError);
  CHECK_THROWS_AS(build_zm(*families::zm_validate(Natural::parse("137438691329"), Natural::parse("137438691328"), 3)),
                  ResourceError);

  setenv("LEINSTER_ORDER_CAP", "10", 1);
  CHECK(order_cap() == 10);
  CHECK_THROWS_AS(build_cyclic(11), ResourceError);
  CHECK_NOTHROW(build_cyclic(10));
  unsetenv("LEINSTER_ORDER_CAP");
  CHECK(order_cap() == kDefaultOrderCap);
}
