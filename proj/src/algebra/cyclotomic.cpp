#include "gspan/algebra/cyclotomic.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "gspan/errors.hpp"

namespace gspan {

namespace {

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact division by a monic polynomial.
IntPolynomial divideExact(IntPolynomial num, const IntPolynomial& den) {
  std::size_t dn = den.size() - 1;
  IntPolynomial q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw Error("cyclotomic division left a remainder");
  return q;
}

}  // namespace

IntPolynomial cyclotomicPolynomial(unsigned m) {
  if (m == 0) throw ArgumentError("cyclotomic polynomial of order 0");
  IntPolynomial num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  IntPolynomial den{1};
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) den = multiply(den, cyclotomicPolynomial(d));
  return divideExact(std::move(num), den);
}

CyclotomicField::CyclotomicField(unsigned conductor)
    : m_(conductor), modulus_(cyclotomicPolynomial(conductor)) {
  std::size_t deg = degree();
  std::vector<Rational> current(deg, 0);
  current[0] = 1;
  for (unsigned k = 0; k < m_; ++k) {
    powers_.push_back(current);
    // multiply by x and reduce the x^deg term using the monic modulus
    std::vector<Rational> next(deg, 0);
    Rational top = current[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) next[i] = current[i - 1];
    next[0] = 0;
    for (std::size_t i = 0; i < deg; ++i) next[i] -= top * Rational(modulus_[i]);
    current = std::move(next);
  }
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field)
    : field_(std::move(field)), coeffs_(field_->degree(), 0) {}

CyclotomicNumber CyclotomicNumber::fromRational(std::shared_ptr<const CyclotomicField> field,
                                                const Rational& q) {
  CyclotomicNumber x(std::move(field));
  x.coeffs_[0] = q;
  x.coeffs_[0].canonicalize();
  return x;
}

CyclotomicNumber CyclotomicNumber::rootOfUnity(std::shared_ptr<const CyclotomicField> field,
                                               std::int64_t k) {
  std::int64_t m = field->conductor();
  auto r = static_cast<std::size_t>(((k % m) + m) % m);
  CyclotomicNumber x(field);
  x.coeffs_ = field->power(r);
  return x;
}

bool CyclotomicNumber::isZero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::isRational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CyclotomicNumber::requireSameField(const CyclotomicNumber& other) const {
  if (conductor() != other.conductor())
    throw GroupMismatchError("cyclotomic numbers of conductors " + std::to_string(conductor()) +
                             " and " + std::to_string(other.conductor()));
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other) {
  requireSameField(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other) {
  requireSameField(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& s) {
  Rational scalar = s;
  scalar.canonicalize();
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.requireSameField(b);
  CyclotomicNumber result(a.field_);
  const auto& field = *a.field_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      Rational c = a.coeffs_[i] * b.coeffs_[j];
      const auto& reduced = field.power(i + j);
      for (std::size_t k = 0; k < reduced.size(); ++k)
        if (reduced[k] != 0) result.coeffs_[k] += c * reduced[k];
    }
  }
  return result;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
}

std::string CyclotomicNumber::render() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = toString(c);
    } else {
      std::string power = i == 1 ? "z" : "z^" + std::to_string(i);
      if (c == 1) term = power;
      else if (c == -1) term = "-" + power;
      else term = toString(c) + "*" + power;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::complex<double> CyclotomicNumber::approximate() const {
  double angle = 2.0 * std::numbers::pi / conductor();
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) sum += coeffs_[i].get_d() * std::polar(1.0, angle * static_cast<double>(i));
  return sum;
}

std::string CyclotomicNumber::decimal() const {
  auto z = approximate();
  auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "%.12g%+.12gi", clean(z.real()), clean(z.imag()));
  return buffer;
}

}  // namespace gspan
