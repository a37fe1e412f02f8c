#pragma once

#include <gmpxx.h>

#include <string>

namespace catpascal {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
  Rational c(x);
  c.canonicalize();
  return c.get_str();
}

BigInt binomial(long n, long k);
BigInt catalan(long n);
BigInt factorial(long n);

}  // namespace catpascal
