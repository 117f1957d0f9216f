#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leinster/natural.hpp"

namespace leinster::numtheory {

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factors sorted ascending; empty for 1.
using Factorization = std::vector<PrimePower>;

struct NumberClass {
  bool perfect = false;
  bool abundant = false;
  bool deficient = false;
  bool almost_perfect = false;  // D(n) = 2n - 1
  bool quasi_perfect = false;   // D(n) = 2n + 1
};

struct FactorOptions {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 2'000'000;  // per cofactor, summed over restarts
  int primality_rounds = 40;
};

/// Sum of all divisors of n, n included.
Natural divisor_sum(const Natural& n);
Natural divisor_sum(const Factorization& f);

NumberClass classify_number(const Natural& n);

/// Deterministic below 2^64, Miller-Rabin with `rounds` seeded bases above.
bool is_prime(const Natural& n, int rounds = 40);

/// Throws ResourceError ("factorization gave up") when the effort cap is hit.
Factorization factorize(const Natural& n, const FactorOptions& opts = {});

/// All divisors, ascending.
std::vector<Natural> divisors(const Natural& n);
std::vector<Natural> divisors(const Factorization& f);

/// (p, k) with n = p^k and p prime, if such a pair exists.
std::optional<PrimePower> prime_power_decompose(const Natural& n);

/// True iff 2^r - 1 is prime.
bool lucas_lehmer(unsigned r);

/// 2^(r-1) (2^r - 1) when 2^r - 1 is prime.
std::optional<Natural> even_perfect(unsigned r);

/// First known Mersenne exponents, each re-checked by lucas_lehmer on first use.
std::span<const unsigned> mersenne_exponents();

struct PerfectPlusOneHit {
  unsigned index = 0;  // 1-based position among even perfect numbers
  Natural perfect;
  Natural prime;
};

/// Even perfect numbers P_i (i <= count) with P_i + 1 a prime power.
/// Throws UsageError when count exceeds the exponent list and
/// InvariantError if a hit is a prime power with exponent above one.
std::vector<PerfectPlusOneHit> perfect_plus_one(unsigned count);

/// Least d >= 1 with r^d = 1 (mod m).
Natural mult_order(const Natural& r, const Natural& m);

/// Carmichael exponent lambda(m).
Natural carmichael(const Natural& m);

}  // namespace leinster::numtheory
