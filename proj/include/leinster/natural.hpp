#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "leinster/errors.hpp"

namespace leinster {

/// Arbitrary-precision nonnegative integer.
///
/// Subtraction that would go below zero and division by zero throw
/// DomainError instead of producing a value.
class Natural {
 public:
  Natural() = default;

  template <std::integral T>
  Natural(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw DomainError("negative value for Natural");
      value_ = static_cast<long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  explicit Natural(mpz_class v);

  /// Parses a plain decimal string (digits only, no sign).
  static Natural parse(std::string_view decimal);

  const mpz_class& mpz() const noexcept { return value_; }
  std::string str() const { return value_.get_str(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  bool is_even() const noexcept { return mpz_even_p(value_.get_mpz_t()) != 0; }
  bool fits_u64() const noexcept;
  /// Throws ResourceError when the value does not fit.
  std::uint64_t to_u64() const;
  std::size_t bit_length() const noexcept;

  Natural& operator+=(const Natural& o) { value_ += o.value_; return *this; }
  Natural& operator-=(const Natural& o);
  Natural& operator*=(const Natural& o) { value_ *= o.value_; return *this; }
  Natural& operator/=(const Natural& o);
  Natural& operator%=(const Natural& o);
  Natural& operator++() { ++value_; return *this; }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value_; }

 private:
  mpz_class value_;
};

Natural gcd(const Natural& a, const Natural& b);
Natural pow(const Natural& base, unsigned long exp);
/// base^exp mod m; m must be positive.
Natural powm(const Natural& base, const Natural& exp, const Natural& m);
bool divides(const Natural& d, const Natural& n);

}  // namespace leinster

template <>
struct std::hash<leinster::Natural> {
  std::size_t operator()(const leinster::Natural& n) const noexcept;
};
