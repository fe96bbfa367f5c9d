#include "rrgroup/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rrgroup {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double log_bigint(const BigInt& value) {
  if (sgn(value) <= 0) throw std::domain_error("log of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

BigInt require_integer(const Rational& value, const char* what) {
  if (value.get_den() != 1) {
    throw std::logic_error(std::string(what) + " is not integral: " + to_string(value));
  }
  return value.get_num();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

}  // namespace rrgroup
