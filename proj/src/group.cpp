#include "leinster/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "leinster/errors.hpp"
#include "leinster/numtheory.hpp"

namespace leinster::oracle {

namespace {

// Membership bitmap over 0..order-1.
class ElementSet {
 public:
  explicit ElementSet(std::size_t order) : words_((order + 63) / 64, 0) {}

  bool test(Element x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void set(Element x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : s.words()) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }
};

struct Generated {
  ElementSet members;
  std::vector<Element> elements;
  std::vector<Element> gens;
};

// Subgroup generated by `base` (already closed, may be empty) and `gens`.
// In a finite group closure under right multiplication by the generators
// already yields inverses.
Generated close(const FiniteGroup& g, const Generated* base, std::vector<Element> gens) {
  Generated out{base ? base->members : ElementSet(g.order()), {}, std::move(gens)};
  if (base) {
    out.elements = base->elements;
  } else {
    out.members.set(0);
    out.elements.push_back(0);
  }
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    const Element x = out.elements[i];
    for (Element s : out.gens) {
      const Element y = g.mul(x, s);
      if (!out.members.test(y)) {
        out.members.set(y);
        out.elements.push_back(y);
      }
    }
  }
  return out;
}

// Small generating set found greedily; used for Light's associativity test
// and for normality checks. Reached elements are left-nested products of the
// generators, so the set generates the table even before associativity is known.
std::vector<Element> greedy_generators(std::size_t order, auto&& mul) {
  std::vector<Element> gens;
  std::vector<char> reached(order, 0);
  std::vector<Element> elements{0};
  reached[0] = 1;
  for (Element next = 1; next < order && elements.size() < order; ++next) {
    if (reached[next]) continue;
    gens.push_back(next);
    std::fill(reached.begin(), reached.end(), 0);
    elements.assign(1, 0);
    reached[0] = 1;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (Element s : gens) {
        const Element y = mul(elements[i], s);
        if (!reached[y]) {
          reached[y] = 1;
          elements.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

std::size_t order_cap() {
  if (const char* env = std::getenv("LEINSTER_ORDER_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultOrderCap;
}

void check_order_cap(std::size_t order) {
  if (order > order_cap()) {
    throw ResourceError("group order " + std::to_string(order) + " exceeds oracle cap " +
                        std::to_string(order_cap()));
  }
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  validate();

  inverse_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      if (mul(x, y) == 0) {
        inverse_[x] = y;
        break;
      }
    }
  }
  element_order_.assign(order_, 1);
  for (Element x = 1; x < order_; ++x) {
    std::size_t k = 1;
    for (Element p = x; p != 0; p = mul(p, x)) ++k;
    element_order_[x] = k;
  }
}

void FiniteGroup::validate() const {
  if (order_ == 0) throw DomainError("group order must be positive");
  if (table_.size() != order_ * order_) throw DomainError("table size does not match order");
  if (!labels_.empty() && labels_.size() != order_) throw DomainError("label count does not match order");

  std::vector<char> row_seen(order_), col_seen(order_);
  for (Element i = 0; i < order_; ++i) {
    std::fill(row_seen.begin(), row_seen.end(), 0);
    std::fill(col_seen.begin(), col_seen.end(), 0);
    for (Element j = 0; j < order_; ++j) {
      const Element r = mul(i, j);
      const Element c = mul(j, i);
      if (r >= order_ || c >= order_) throw DomainError("table entry out of range");
      if (row_seen[r]++ || col_seen[c]++) throw DomainError("table is not a Latin square");
    }
    if (mul(0, i) != i || mul(i, 0) != i) throw DomainError("element 0 is not the identity");
  }

  if (order_ > order_cap()) return;
  // Light's test: the elements a with (xa)y = x(ay) for all x, y form a
  // closed subset, so checking a generating set suffices.
  const auto gens = greedy_generators(order_, [this](Element a, Element b) { return mul(a, b); });
  for (Element a : gens) {
    for (Element x = 0; x < order_; ++x) {
      const Element xa = mul(x, a);
      for (Element y = 0; y < order_; ++y) {
        if (mul(xa, y) != mul(x, mul(a, y))) {
          throw DomainError("table is not associative at (" + std::to_string(x) + ", " + std::to_string(a) +
                            ", " + std::to_string(y) + ")");
        }
      }
    }
  }
}

bool FiniteGroup::is_abelian() const {
  for (Element i = 0; i < order_; ++i) {
    for (Element j = i + 1; j < order_; ++j) {
      if (mul(i, j) != mul(j, i)) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_cyclic() const {
  return std::any_of(element_order_.begin(), element_order_.end(),
                     [this](std::size_t k) { return k == order_; });
}

bool Subgroup::contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  check_order_cap(g.order());

  std::vector<Generated> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto add = [&](Generated&& s) {
    if (index.emplace(s.members, found.size()).second) found.push_back(std::move(s));
  };

  add(close(g, nullptr, {}));
  std::vector<Element> cyclic_gens;
  for (Element x = 1; x < g.order(); ++x) {
    Generated c = close(g, nullptr, {x});
    if (!index.contains(c.members)) {
      cyclic_gens.push_back(x);
      add(std::move(c));
    }
  }

  // Join every subgroup with every cyclic subgroup until nothing new appears.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element c : cyclic_gens) {
      if (found[i].members.test(c)) continue;
      std::vector<Element> gens = found[i].gens;
      gens.push_back(c);
      Generated joined = close(g, &found[i], std::move(gens));
      if (!index.contains(joined.members)) add(std::move(joined));
    }
  }

  const auto group_gens = greedy_generators(g.order(), [&g](Element a, Element b) { return g.mul(a, b); });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& s : found) {
    bool normal = true;
    for (Element x : group_gens) {
      for (Element h : s.gens) {
        if (!s.members.test(g.mul(g.mul(g.inverse(x), h), x))) {
          normal = false;
          break;
        }
      }
      if (!normal) break;
    }
    std::sort(s.elements.begin(), s.elements.end());
    out.push_back({std::move(s.elements), normal});
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  std::erase_if(subs, [](const Subgroup& s) { return !s.is_normal; });
  return subs;
}

Natural group_divisor_sum(std::span<const Subgroup> lattice) {
  Natural total = 0;
  for (const auto& s : lattice) {
    if (s.is_normal) total += Natural(s.order());
  }
  return total;
}

Natural group_divisor_sum(const FiniteGroup& g) { return group_divisor_sum(all_subgroups(g)); }

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  for (Element x = 0; x < g.order(); ++x) {
    for (Element h : n.elements) {
      if (!n.contains(g.mul(g.mul(g.inverse(x), h), x))) throw DomainError("quotient by a non-normal subgroup");
    }
  }
  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> coset_of(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element h : n.elements) coset_of[g.mul(x, h)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = coset_of[g.mul(reps[i], reps[j])];
  }
  return FiniteGroup(k, std::move(table));
}

bool is_nilpotent(const FiniteGroup& g, std::span<const Subgroup> lattice) {
  for (const auto& [p, e] : numtheory::factorize(Natural(g.order()))) {
    const auto sylow_order = pow(p, e).to_u64();
    const auto sylows = std::count_if(lattice.begin(), lattice.end(),
                                      [&](const Subgroup& s) { return s.order() == sylow_order; });
    if (sylows != 1) return false;
  }
  return true;
}

bool is_nilpotent(const FiniteGroup& g) { return is_nilpotent(g, all_subgroups(g)); }

}  // namespace leinster::oracle
