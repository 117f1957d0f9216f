#include "leinster/natural.hpp"

#include <cctype>

namespace leinster {

Natural::Natural(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw DomainError("negative value for Natural");
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) throw UsageError("empty number");
  for (char c : decimal) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("not a nonnegative decimal integer: '" + std::string(decimal) + "'");
    }
  }
  return Natural(mpz_class(std::string(decimal), 10));
}

bool Natural::fits_u64() const noexcept {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw ResourceError("value " + str() + " exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

std::size_t Natural::bit_length() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator-=(const Natural& o) {
  if (value_ < o.value_) throw DomainError("natural subtraction underflow: " + str() + " - " + o.str());
  value_ -= o.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& o) {
  if (o.is_zero()) throw DomainError("modulo by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
  return *this;
}

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(g));
}

Natural pow(const Natural& base, unsigned long exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.mpz().get_mpz_t(), exp);
  return Natural(std::move(out));
}

Natural powm(const Natural& base, const Natural& exp, const Natural& m) {
  if (m.is_zero()) throw DomainError("modulus must be positive");
  mpz_class out;
  mpz_powm(out.get_mpz_t(), base.mpz().get_mpz_t(), exp.mpz().get_mpz_t(), m.mpz().get_mpz_t());
  return Natural(std::move(out));
}

bool divides(const Natural& d, const Natural& n) {
  if (d.is_zero()) return n.is_zero();
  return mpz_divisible_p(n.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

}  // namespace leinster

std::size_t std::hash<leinster::Natural>::operator()(const leinster::Natural& n) const noexcept {
  // Low limb is enough to spread the values that appear as parameters.
  const mpz_srcptr z = n.mpz().get_mpz_t();
  return mpz_size(z) == 0 ? 0 : std::hash<mp_limb_t>{}(mpz_getlimbn(z, 0)) ^ mpz_size(z);
}
