#pragma once

#include <optional>

#include "leinster/natural.hpp"

namespace leinster {

namespace families {
class ZMTripleFactory;
}

/// Parameters (m, n, r) of ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>.
///
/// Only families::zm_validate hands these out, so holding one means
/// gcd(m,n) = gcd(m,r-1) = 1, r^n = 1 (mod m) and r < m whenever m > 1.
class ZMTriple {
 public:
  const Natural& m() const noexcept { return m_; }
  const Natural& n() const noexcept { return n_; }
  const Natural& r() const noexcept { return r_; }

  friend bool operator==(const ZMTriple&, const ZMTriple&) = default;

 private:
  friend class families::ZMTripleFactory;
  ZMTriple(Natural m, Natural n, Natural r) : m_(std::move(m)), n_(std::move(n)), r_(std::move(r)) {}

  Natural m_;
  Natural n_;
  Natural r_;
};

}  // namespace leinster
