#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace stnf {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Parses "n", "-n", or "n/d".
Rational parse_rational(const std::string& text);

// "n" when the denominator is one, "n/d" otherwise.
std::string to_string(const Rational& r);

int sign(const Rational& r);
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
Rational abs_of(const Rational& r);

// 2^k (k may be negative).
Rational pow2(long k);

std::size_t hash_value(const Rational& r);

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return hash_value(r); }
};

}  // namespace stnf
