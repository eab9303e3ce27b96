#pragma once

#include <gmpxx.h>

#include <string>

namespace novlag {

// Coefficients live in Q. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace novlag
