#include "leinster/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "leinster/errors.hpp"
#include "leinster/families.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"

namespace leinster::search {

namespace {

using oracle::FiniteGroup;
using oracle::Subgroup;

struct CorpusGroup {
  std::string name;
  FiniteGroup group;
  std::vector<Subgroup> lattice;
  Natural divisor_sum;
};

CorpusGroup analyse(std::string name, FiniteGroup g) {
  auto lattice = oracle::all_subgroups(g);
  Natural d = oracle::group_divisor_sum(lattice);
  return {std::move(name), std::move(g), std::move(lattice), std::move(d)};
}

std::string factors_name(const std::vector<std::size_t>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "x" : "") + std::string("C") + std::to_string(factors[i]);
  return out.empty() ? "1" : out;
}

// Abelian groups of order n by invariant factors, k1 | k2 | ..., k1 >= 2.
void abelian_types(std::size_t n, std::size_t min_factor, std::vector<std::size_t>& current,
                   std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    out.push_back(current);
    return;
  }
  for (std::size_t k = min_factor; k <= n; k += min_factor) {
    if (n % k != 0) continue;
    const std::size_t rest = n / k;
    if (rest != 1 && rest % k != 0) continue;
    current.push_back(k);
    abelian_types(rest, k, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::size_t>> noncyclic_abelian_types(std::size_t n) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> current;
  abelian_types(n, 2, current, all);
  std::erase_if(all, [](const auto& t) { return t.size() < 2; });
  return all;
}

// One element of order two per 2-height in the abelian group with these
// invariant factors. Elements of order two with equal height lie in one
// automorphism orbit, so Dic(A, y) over this list covers every isomorphism type.
std::vector<oracle::Element> order_two_by_height(std::span<const std::size_t> factors) {
  const auto a = oracle::build_abelian(factors);
  std::vector<oracle::Element> power(a.order());
  std::iota(power.begin(), power.end(), oracle::Element{0});
  std::vector<oracle::Element> out;
  std::vector<oracle::Element> pending = oracle::order_two_elements(factors);
  while (!pending.empty()) {
    // power[x] = x^(2^k); pending elements outside the image have height k.
    std::vector<char> in_image(a.order(), 0);
    for (auto p : power) in_image[p] = 1;
    for (auto& p : power) p = a.mul(p, p);
    std::vector<char> in_next(a.order(), 0);
    for (auto p : power) in_next[p] = 1;
    std::vector<oracle::Element> still;
    bool taken = false;
    for (auto y : pending) {
      if (in_next[y]) {
        still.push_back(y);
      } else if (in_image[y] && !taken) {
        out.push_back(y);
        taken = true;
      }
    }
    pending = std::move(still);
  }
  return out;
}

// Records the first failure of one invariant.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  InvariantResult done() { return std::move(result_); }

 private:
  InvariantResult result_;
};

bool delta_at_most(const Natural& d1, const Natural& o1, const Natural& d2, const Natural& o2) {
  // d1/o1 <= d2/o2
  return d1 * o2 <= d2 * o1;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    if (r.passed) {
      os << "PASS  " << r.name << "  (" << r.checked << " checks)\n";
    } else {
      os << "FAIL  " << r.name << "  (" << r.checked << " checks): " << r.counterexample << '\n';
    }
  }
  os << (all_passed() ? "all invariants passed" : "verification FAILED") << '\n';
  return os.str();
}

VerifyReport run_verify(std::size_t max_order) {
  if (max_order < 1) throw UsageError("max-order must be positive");
  oracle::check_order_cap(max_order);

  std::vector<CorpusGroup> corpus;
  std::vector<std::size_t> cyclic_idx, dihedral_idx, dicyclic_idx, gen_dihedral_idx, zm_idx, affine_idx;

  for (std::size_t n = 1; n <= max_order; ++n) {
    cyclic_idx.push_back(corpus.size());
    corpus.push_back(analyse("C" + std::to_string(n), oracle::build_cyclic(n)));
  }
  for (std::size_t n = 2; 2 * n <= max_order; ++n) {
    dihedral_idx.push_back(corpus.size());
    corpus.push_back(analyse("D" + std::to_string(2 * n), oracle::build_generalized_dihedral(std::vector{n})));
  }
  std::vector<std::vector<std::size_t>> noncyclic_dih_types;
  for (std::size_t a = 4; 2 * a <= max_order; ++a) {
    for (auto& t : noncyclic_abelian_types(a)) {
      gen_dihedral_idx.push_back(corpus.size());
      corpus.push_back(analyse("Dih(" + factors_name(t) + ")", oracle::build_generalized_dihedral(t)));
      noncyclic_dih_types.push_back(std::move(t));
    }
  }
  std::vector<std::size_t> dicyclic_half;  // n for Dic_4n over cyclic A
  for (std::size_t n = 2; 4 * n <= max_order; ++n) {
    const std::vector<std::size_t> a{2 * n};
    dicyclic_idx.push_back(corpus.size());
    dicyclic_half.push_back(n);
    corpus.push_back(analyse("Dic" + std::to_string(4 * n), oracle::build_generalized_dicyclic(a, static_cast<oracle::Element>(n))));
  }
  std::vector<std::size_t> gen_dicyclic_idx;
  std::vector<std::size_t> gen_dicyclic_a_order;
  for (std::size_t a = 4; 2 * a <= max_order; a += 2) {
    for (const auto& t : noncyclic_abelian_types(a)) {
      for (auto y : order_two_by_height(t)) {
        gen_dicyclic_idx.push_back(corpus.size());
        gen_dicyclic_a_order.push_back(a);
        corpus.push_back(analyse("Dic(" + factors_name(t) + ",y=" + std::to_string(y) + ")",
                                 oracle::build_generalized_dicyclic(t, y)));
      }
    }
  }
  std::vector<ZMTriple> zm_triples;
  for (std::size_t m = 2; m <= max_order; ++m) {
    for (std::size_t n = 1; m * n <= max_order; ++n) {
      for (std::size_t r = 0; r < m; ++r) {
        if (auto t = families::zm_validate(m, n, r)) {
          zm_idx.push_back(corpus.size());
          corpus.push_back(analyse("ZM(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ")",
                                   oracle::build_zm(*t)));
          zm_triples.push_back(*t);
        }
      }
    }
  }
  std::vector<std::size_t> affine_p;
  for (std::size_t p = 2; p * (p - 1) <= max_order; ++p) {
    if (!numtheory::is_prime(p)) continue;
    affine_idx.push_back(corpus.size());
    affine_p.push_back(p);
    corpus.push_back(analyse("Aff(F" + std::to_string(p) + ")", oracle::build_affine_prime(p)));
  }

  VerifyReport report;

  {
    Check c("subgroups contain the identity and satisfy Lagrange");
    for (const auto& g : corpus) {
      for (const auto& s : g.lattice) {
        c.expect(s.contains(0) && g.group.order() % s.order() == 0,
                 [&] { return g.name + " subgroup of order " + std::to_string(s.order()); });
      }
    }
    report.results.push_back(c.done());
  }
  {
    Check c("D(C_n) = D(n)");
    for (auto i : cyclic_idx) {
      const auto& g = corpus[i];
      const Natural expected = numtheory::divisor_sum(g.group.order());
      c.expect(g.divisor_sum == expected,
               [&] { return g.name + ": oracle " + g.divisor_sum.str() + " vs " + expected.str(); });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("delta(G) > 1 for nontrivial G");
    for (const auto& g : corpus) {
      if (g.group.order() == 1) continue;
      c.expect(g.divisor_sum > Natural(g.group.order()), [&] { return g.name + ": D = " + g.divisor_sum.str(); });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("D(G x H) = D(G) D(H) for coprime orders");
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = i + 1; j < corpus.size(); ++j) {
        const auto a = corpus[i].group.order();
        const auto b = corpus[j].group.order();
        if (a == 1 || b == 1 || a * b > max_order || std::gcd(a, b) != 1) continue;
        const auto product = oracle::build_direct_product(corpus[i].group, corpus[j].group);
        const Natural d = oracle::group_divisor_sum(product);
        const Natural expected = corpus[i].divisor_sum * corpus[j].divisor_sum;
        c.expect(d == expected, [&] {
          return corpus[i].name + " x " + corpus[j].name + ": " + d.str() + " vs " + expected.str();
        });
      }
    }
    report.results.push_back(c.done());
  }
  {
    Check c("delta(G/N) <= delta(G) for |G| <= 100");
    for (const auto& g : corpus) {
      if (g.group.order() > 100) continue;
      for (const auto& n : g.lattice) {
        if (!n.is_normal) continue;
        const auto q = oracle::quotient(g.group, n);
        const Natural dq = oracle::group_divisor_sum(q);
        c.expect(delta_at_most(dq, q.order(), g.divisor_sum, g.group.order()), [&] {
          return g.name + " / N(|N|=" + std::to_string(n.order()) + "): D(G/N) = " + dq.str();
        });
      }
    }
    report.results.push_back(c.done());
  }
  {
    Check c("ZM lattice triples match subgroup and normal-subgroup counts (mn <= 200)");
    for (std::size_t k = 0; k < zm_idx.size(); ++k) {
      const auto& g = corpus[zm_idx[k]];
      if (g.group.order() > 200) continue;
      const auto subgroups = families::zm_subgroup_triples(zm_triples[k]).size();
      const auto normals = families::zm_normal_triples(zm_triples[k]).size();
      const auto oracle_normals = static_cast<std::size_t>(
          std::count_if(g.lattice.begin(), g.lattice.end(), [](const auto& s) { return s.is_normal; }));
      c.expect(subgroups == g.lattice.size() && normals == oracle_normals, [&] {
        return g.name + ": |L| " + std::to_string(subgroups) + " vs " + std::to_string(g.lattice.size()) + ", |L'| " +
               std::to_string(normals) + " vs " + std::to_string(oracle_normals);
      });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("ZM closed form = normal-triple sum = oracle");
    for (std::size_t k = 0; k < zm_idx.size(); ++k) {
      const auto& g = corpus[zm_idx[k]];
      std::string error;
      Natural formula;
      try {
        formula = families::zm_divisor_sum(zm_triples[k]);
      } catch (const InvariantError& e) {
        error = e.what();
      }
      c.expect(error.empty() && formula == g.divisor_sum, [&] {
        return error.empty() ? g.name + ": formula " + formula.str() + " vs oracle " + g.divisor_sum.str() : error;
      });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("dihedral closed form = oracle");
    for (auto i : dihedral_idx) {
      const auto& g = corpus[i];
      const Natural n = g.group.order() / 2;
      const Natural formula = families::dihedral_divisor_sum(n);
      const std::vector<std::size_t> cyclic{g.group.order() / 2};
      const Natural via_lattice = families::generalized_dihedral_divisor_sum(cyclic);
      c.expect(formula == g.divisor_sum && via_lattice == g.divisor_sum, [&] {
        return g.name + ": formula " + formula.str() + ", lattice form " + via_lattice.str() + ", oracle " +
               g.divisor_sum.str();
      });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("generalized dihedral lattice form = oracle");
    for (std::size_t k = 0; k < gen_dihedral_idx.size(); ++k) {
      const auto& g = corpus[gen_dihedral_idx[k]];
      const Natural formula = families::generalized_dihedral_divisor_sum(noncyclic_dih_types[k]);
      c.expect(formula == g.divisor_sum,
               [&] { return g.name + ": formula " + formula.str() + " vs oracle " + g.divisor_sum.str(); });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("non-cyclic Dih(A) strictly abundant: D > 2|G| + 1 (|A| <= 32)");
    for (auto i : gen_dihedral_idx) {
      const auto& g = corpus[i];
      if (g.group.order() > 64) continue;
      c.expect(g.divisor_sum > Natural(2 * g.group.order() + 1),
               [&] { return g.name + ": D = " + g.divisor_sum.str(); });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("dicyclic closed form = oracle");
    for (std::size_t k = 0; k < dicyclic_idx.size(); ++k) {
      const auto& g = corpus[dicyclic_idx[k]];
      const Natural formula = families::dicyclic_divisor_sum(dicyclic_half[k]);
      c.expect(formula == g.divisor_sum,
               [&] { return g.name + ": formula " + formula.str() + " vs oracle " + g.divisor_sum.str(); });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("dicyclic lower bound D >= 4n + sum over A1 <= A of |A1|");
    auto check_one = [&](const CorpusGroup& g) {
      const std::size_t half = g.group.order() / 2;  // |A| = 2n
      // A is the coset of index-below-half elements in every dicyclic builder.
      Natural bound = Natural(2 * half);
      for (const auto& s : g.lattice) {
        if (std::all_of(s.elements.begin(), s.elements.end(), [&](auto x) { return x < half; })) {
          bound += Natural(s.order());
        }
      }
      c.expect(g.divisor_sum >= bound, [&] { return g.name + ": D " + g.divisor_sum.str() + " < " + bound.str(); });
    };
    for (auto i : dicyclic_idx) check_one(corpus[i]);
    for (auto i : gen_dicyclic_idx) check_one(corpus[i]);
    report.results.push_back(c.done());
  }
  {
    Check c("affine 1 + q D(q-1) = oracle (prime q)");
    for (std::size_t k = 0; k < affine_idx.size(); ++k) {
      const auto& g = corpus[affine_idx[k]];
      const Natural formula = families::affine_divisor_sum(affine_p[k]);
      c.expect(formula == g.divisor_sum,
               [&] { return g.name + ": formula " + formula.str() + " vs oracle " + g.divisor_sum.str(); });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("nonabelian pq: 1 + q + pq = oracle");
    for (std::size_t k = 0; k < zm_idx.size(); ++k) {
      const auto& t = zm_triples[k];
      const auto& g = corpus[zm_idx[k]];
      // ZM(q, p, r) with q, p prime and r != 1 is the nonabelian group of order pq.
      if (!numtheory::is_prime(t.m()) || !numtheory::is_prime(t.n()) || t.n() >= t.m() || g.group.is_abelian()) {
        continue;
      }
      const Natural formula = families::pq_divisor_sum(t.n(), t.m());
      c.expect(formula == g.divisor_sum,
               [&] { return g.name + ": formula " + formula.str() + " vs oracle " + g.divisor_sum.str(); });
    }
    report.results.push_back(c.done());
  }
  {
    Check c("nilpotent: delta <= 2 iff cyclic with perfect-or-deficient order");
    for (const auto& g : corpus) {
      if (!oracle::is_nilpotent(g.group, g.lattice)) continue;
      const Natural order = g.group.order();
      const bool small_delta = g.divisor_sum <= order * 2;
      const auto number = numtheory::classify_number(order);
      const bool cyclic = g.group.is_cyclic();
      const bool rhs = cyclic && (number.perfect || number.deficient);
      const auto nil = families::nilpotent_classify(order, cyclic);
      const auto actual = families::classify_group(g.divisor_sum, order).kind;
      c.expect(small_delta == rhs && nil.kind == actual, [&] {
        return g.name + ": D = " + g.divisor_sum.str() + ", cyclic = " + (cyclic ? "yes" : "no");
      });
    }
    report.results.push_back(c.done());
  }
  if (max_order >= 12) {
    Check c("Dic12 is Leinster (D = 24)");
    for (std::size_t k = 0; k < dicyclic_idx.size(); ++k) {
      if (dicyclic_half[k] != 3) continue;
      const auto& g = corpus[dicyclic_idx[k]];
      c.expect(g.divisor_sum == Natural(24) &&
                   families::classify_group(g.divisor_sum, 12).kind == families::GroupKind::leinster,
               [&] { return "Dic12: D = " + g.divisor_sum.str(); });
    }
    report.results.push_back(c.done());
  }
  if (max_order >= 42) {
    Check c("ZM(7,6,3): closed form = normal-triple sum = oracle = 85, quasi-Leinster");
    const auto t = *families::zm_validate(7, 6, 3);
    Natural lattice_sum = 0;
    for (const auto& triple : families::zm_normal_triples(t)) lattice_sum += triple.subgroup_order;
    const Natural formula = families::zm_divisor_sum(t);
    const Natural oracle_d = oracle::group_divisor_sum(oracle::build_zm(t));
    c.expect(formula == Natural(85) && lattice_sum == Natural(85) && oracle_d == Natural(85) &&
                 families::classify_group(formula, 42).kind == families::GroupKind::quasi_leinster,
             [&] { return formula.str() + " / " + lattice_sum.str() + " / " + oracle_d.str(); });
    report.results.push_back(c.done());
  }
  return report;
}

}  // namespace leinster::search
