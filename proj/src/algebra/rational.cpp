#include "gspan/algebra/rational.hpp"

#include "gspan/errors.hpp"

namespace gspan {

Rational makeRational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ArgumentError("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string toString(const Integer& z) { return z.get_str(); }

std::string toString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace gspan
