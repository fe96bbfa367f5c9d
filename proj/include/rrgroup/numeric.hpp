#pragma once

#include <gmpxx.h>

#include <string>

namespace rrgroup {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

/// num / den in canonical form. mpq_class(num, den) alone does not reduce.
inline Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "num/den" in lowest terms; integers keep the "/1".
std::string to_string(const Rational& value);

/// Natural logarithm of a positive big integer, exact to double precision
/// even when the value overflows a double.
double log_bigint(const BigInt& value);

/// Returns the numerator of `value`, throwing std::logic_error if the
/// denominator is not 1. `what` names the quantity in the message.
BigInt require_integer(const Rational& value, const char* what);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace rrgroup
