#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "gspan/algebra/rational.hpp"

namespace gspan {

// Coefficients from the constant term upward.
using IntPolynomial = std::vector<Integer>;

// Phi_m, computed as (x^m - 1) divided by Phi_d for every proper divisor d.
IntPolynomial cyclotomicPolynomial(unsigned m);

// Q(zeta_m) presented as Q[x] / Phi_m.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned conductor);

  unsigned conductor() const { return m_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  const IntPolynomial& modulus() const { return modulus_; }
  // x^k reduced modulo Phi_m, for 0 <= k < m.
  const std::vector<Rational>& power(std::size_t k) const { return powers_[k % m_]; }

 private:
  unsigned m_;
  IntPolynomial modulus_;
  std::vector<std::vector<Rational>> powers_;
};

class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(std::shared_ptr<const CyclotomicField> field);
  static CyclotomicNumber fromRational(std::shared_ptr<const CyclotomicField> field,
                                       const Rational& q);
  // zeta_m^k.
  static CyclotomicNumber rootOfUnity(std::shared_ptr<const CyclotomicField> field,
                                      std::int64_t k);

  const CyclotomicField& field() const { return *field_; }
  unsigned conductor() const { return field_->conductor(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool isZero() const;
  bool isRational() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& other);
  CyclotomicNumber& operator-=(const CyclotomicNumber& other);
  CyclotomicNumber& operator*=(const Rational& s);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  // Polynomial in z, e.g. "1/2 + 3*z^2"; zero renders as "0".
  std::string render() const;
  std::complex<double> approximate() const;
  // 12 significant digits, e.g. "0.5+0.866025403784i".
  std::string decimal() const;

 private:
  void requireSameField(const CyclotomicNumber& other) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

}  // namespace gspan
