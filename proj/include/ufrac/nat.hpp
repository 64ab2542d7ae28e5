#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ufrac {

// Arbitrary-precision nonnegative integer. GMP keeps the representation
// canonical (no leading zero limbs), so comparison is a total order.
using Nat = mpz_class;

// Exact decimal digit count; digits(0) = 1.
std::size_t decimal_digits(const Nat& n);

// Cheap upper estimate of the digit count (exact or one too large).
// Suitable for cap checks where a slop of one digit is irrelevant.
std::size_t approx_digits(const Nat& n);

// Parses a plain decimal string. Rejects signs, whitespace and junk.
Nat parse_nat(const std::string& text);

Nat nat_pow(const Nat& base, unsigned long exp);

inline Nat nat_gcd(const Nat& a, const Nat& b) { return Nat(gcd(a, b)); }
inline Nat nat_lcm(const Nat& a, const Nat& b) { return Nat(lcm(a, b)); }

bool fits_u64(const Nat& n);
std::uint64_t to_u64(const Nat& n);

}  // namespace ufrac
