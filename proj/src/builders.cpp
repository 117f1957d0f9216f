#include <numeric>
#include <string>

#include "leinster/errors.hpp"
#include "leinster/group.hpp"
#include "leinster/numtheory.hpp"

namespace leinster::oracle {

namespace {

// Mixed-radix arithmetic on a direct product of cyclic groups.
class AbelianCoords {
 public:
  explicit AbelianCoords(std::span<const std::size_t> factors) : factors_(factors.begin(), factors.end()) {
    // Saturates at cap + 1 so oversized requests fail the cap check, not overflow.
    const std::size_t cap = order_cap();
    for (auto k : factors_) {
      if (k == 0) throw DomainError("cyclic factor orders must be positive");
      order_ = (k > cap || order_ * k > cap) ? cap + 1 : order_ * k;
    }
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * factors_[i];
  }

  std::size_t order() const { return order_; }

  // a + sign*b, sign in {+1, -1}
  Element combine(Element a, Element b, int sign) const {
    Element out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::size_t k = factors_[i];
      const std::size_t da = (a / strides_[i]) % k;
      const std::size_t db = (b / strides_[i]) % k;
      const std::size_t d = sign > 0 ? (da + db) % k : (da + k - db) % k;
      out += static_cast<Element>(d * strides_[i]);
    }
    return out;
  }

  std::size_t element_order(Element a) const {
    std::size_t ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::size_t k = factors_[i];
      const std::size_t d = (a / strides_[i]) % k;
      ord = std::lcm(ord, k / std::gcd(k, d));
    }
    return ord;
  }

 private:
  std::vector<std::size_t> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
};

}  // namespace

FiniteGroup build_cyclic(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  check_order_cap(n);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return FiniteGroup(n, std::move(table));
}

FiniteGroup build_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t a = g.order();
  const std::size_t b = h.order();
  check_order_cap(a * b);
  const std::size_t n = a * b;
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element first = g.mul(static_cast<Element>(x / b), static_cast<Element>(y / b));
      const Element second = h.mul(static_cast<Element>(x % b), static_cast<Element>(y % b));
      table[x * n + y] = static_cast<Element>(first * b + second);
    }
  }
  return FiniteGroup(n, std::move(table));
}

FiniteGroup build_abelian(std::span<const std::size_t> factors) {
  const AbelianCoords coords(factors);
  const std::size_t n = coords.order();
  check_order_cap(n);
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) table[x * n + y] = coords.combine(x, y, +1);
  }
  return FiniteGroup(n, std::move(table));
}

std::vector<Element> order_two_elements(std::span<const std::size_t> factors) {
  const AbelianCoords coords(factors);
  check_order_cap(coords.order());
  std::vector<Element> out;
  for (Element x = 0; x < coords.order(); ++x) {
    if (coords.element_order(x) == 2) out.push_back(x);
  }
  return out;
}

FiniteGroup build_generalized_dihedral(std::span<const std::size_t> factors) {
  const AbelianCoords coords(factors);
  const std::size_t a = coords.order();
  check_order_cap(2 * a);
  const std::size_t n = 2 * a;
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    const Element xa = static_cast<Element>(x % a);
    const bool x_flip = x >= a;
    for (Element y = 0; y < n; ++y) {
      const Element ya = static_cast<Element>(y % a);
      const bool y_flip = y >= a;
      // (a,0)(b,e) = (a+b, e); (a,1)(b,e) = (a-b, 1-e)
      const Element part = coords.combine(xa, ya, x_flip ? -1 : +1);
      const bool flip = x_flip != y_flip;
      table[x * n + y] = static_cast<Element>(part + (flip ? a : 0));
    }
  }
  return FiniteGroup(n, std::move(table));
}

FiniteGroup build_generalized_dicyclic(std::span<const std::size_t> factors, Element y) {
  const AbelianCoords coords(factors);
  const std::size_t a = coords.order();
  check_order_cap(2 * a);
  if (a % 2 != 0 || a <= 2) throw DomainError("dicyclic: |A| must be even and greater than 2");
  if (y >= a || coords.element_order(y) != 2) {
    throw DomainError("dicyclic: y = " + std::to_string(y) + " is not an element of order 2 in A");
  }
  const std::size_t n = 2 * a;
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    const Element xa = static_cast<Element>(x % a);
    const bool x_coset = x >= a;
    for (Element z = 0; z < n; ++z) {
      const Element za = static_cast<Element>(z % a);
      const bool z_coset = z >= a;
      Element out = 0;
      if (!x_coset) {
        out = static_cast<Element>(coords.combine(xa, za, +1) + (z_coset ? a : 0));
      } else if (!z_coset) {
        // a x b = a b^-1 x
        out = static_cast<Element>(coords.combine(xa, za, -1) + a);
      } else {
        // a x b x = a b^-1 x^2 = a b^-1 y
        out = coords.combine(coords.combine(xa, za, -1), y, +1);
      }
      table[x * n + z] = out;
    }
  }
  return FiniteGroup(n, std::move(table));
}

FiniteGroup build_zm(const ZMTriple& t) {
  if (!t.m().fits_u64() || !t.n().fits_u64() || t.m() * t.n() > Natural(order_cap())) {
    throw ResourceError("ZM group order " + (t.m() * t.n()).str() + " exceeds oracle cap " +
                        std::to_string(order_cap()));
  }
  const std::size_t m = t.m().to_u64();
  const std::size_t nn = t.n().to_u64();
  const std::size_t r = m == 1 ? 0 : t.r().to_u64() % m;
  const std::size_t order = m * nn;

  std::vector<std::size_t> r_pow(nn, 1 % m);
  for (std::size_t j = 1; j < nn; ++j) r_pow[j] = r_pow[j - 1] * r % m;

  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t j1 = 0; j1 < nn; ++j1) {
    for (std::size_t i1 = 0; i1 < m; ++i1) {
      const std::size_t x = j1 * m + i1;
      labels[x] = "b^" + std::to_string(j1) + "a^" + std::to_string(i1);
      for (std::size_t j2 = 0; j2 < nn; ++j2) {
        for (std::size_t i2 = 0; i2 < m; ++i2) {
          // a^i b^j = b^j a^(i r^j)
          const std::size_t j = (j1 + j2) % nn;
          const std::size_t i = (i1 * r_pow[j2] + i2) % m;
          table[x * order + j2 * m + i2] = static_cast<Element>(j * m + i);
        }
      }
    }
  }
  return FiniteGroup(order, std::move(table), std::move(labels));
}

FiniteGroup build_affine_prime(const Natural& prime) {
  if (!numtheory::is_prime(prime)) {
    throw DomainError("affine oracle needs a prime field; " + prime.str() + " is not prime");
  }
  if (!prime.fits_u64() || prime * (prime - 1) > Natural(order_cap())) {
    throw ResourceError("affine group order " + (prime * (prime - 1)).str() + " exceeds oracle cap " +
                        std::to_string(order_cap()));
  }
  const std::size_t p = prime.to_u64();
  const std::size_t order = p * (p - 1);
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x / p + 1;
    const std::size_t b = x % p;
    labels[x] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y / p + 1;
      const std::size_t d = y % p;
      // (a,b)(c,d) = (ac, ad + b)
      const std::size_t ac = a * c % p;
      const std::size_t off = (a * d + b) % p;
      table[x * order + y] = static_cast<Element>((ac - 1) * p + off);
    }
  }
  return FiniteGroup(order, std::move(table), std::move(labels));
}

}  // namespace leinster::oracle
