#pragma once

#include <gmpxx.h>

#include <string>

namespace gspan {

using Integer = mpz_class;
using Rational = mpq_class;

// Throws ArgumentError on a zero denominator.
Rational makeRational(const Integer& numerator, const Integer& denominator);

// "num/den", or just "num" when the denominator is 1.
std::string toString(const Rational& q);
std::string toString(const Integer& z);

}  // namespace gspan
