#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "json.hpp"

namespace randomplay {

// All probabilities and expectations are exact rationals. GMP keeps
// mpq_class canonical (lowest terms, positive denominator) through
// arithmetic; only raw numerator/denominator assignment needs an explicit
// canonicalize, which make_rational takes care of.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

/// "num/den" with an explicit slash even for integers ("3/1").
std::string to_fraction_string(const Rational& q);

/// Decimal approximation with the given number of significant digits.
std::string approx_string(const Rational& q, int significant_digits = 12);

/// {"num": "...", "den": "...", "approx": "..."}; num/den exact decimal
/// strings, approx 12 significant digits.
nlohmann::json rational_to_json(const Rational& q);

}  // namespace randomplay
