#ifndef MOULDS_QPOLY_HPP
#define MOULDS_QPOLY_HPP

#include <string>
#include <vector>

#include "moulds/rational.hpp"

namespace moulds {

// Dense integer-coefficient polynomial in the formal parameter q,
// coefficients stored low degree first, no trailing zeros.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(long value) : c_{Integer(value)} { trim(); }          // NOLINT implicit
  ZPoly(Integer value) : c_{std::move(value)} { trim(); }     // NOLINT implicit
  explicit ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ZPoly monomial(const Integer& coeff, int degree);
  static ZPoly q_power(int degree) { return monomial(1, degree); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& operator[](int d) const;
  Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }

  Integer content() const;  // gcd of coefficients, sign of leading coefficient
  ZPoly primitive_part() const;

  ZPoly operator-() const;
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator*(const Integer& k) const;
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }
  bool operator!=(const ZPoly& o) const { return c_ != o.c_; }
  bool operator<(const ZPoly& o) const;  // total order for canonical sorting

  ZPoly pow(int e) const;
  Rational eval(const Rational& q0) const;

  // exact division, throws InvalidInputError when the remainder is nonzero
  ZPoly div_exact(const ZPoly& d) const;
  // remainder of this modulo d, computed over the rationals and rescaled;
  // only used where divisibility is the question, so exactness is checked
  bool divisible_by(const ZPoly& d) const;

  std::string str() const;  // "q^3-2q+1"

 private:
  void trim();
  std::vector<Integer> c_;
};

ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Gaussian binomial [n choose k]_q via the Pascal recurrence (stays integral)
ZPoly q_binomial(int n, int k);
// [n]_q = 1 + q + ... + q^{n-1}
ZPoly q_integer(int n);
// n-th cyclotomic polynomial
ZPoly cyclotomic(int n);

// Rational function in q: num/den with integer polynomial parts, reduced by
// their polynomial gcd, gcd(content(num), content(den)) = 1 and positive
// leading denominator coefficient. A field, so moulds and FQSym elements can
// carry these as coefficients through the same code paths as plain rationals.
class QRatCoeff {
 public:
  QRatCoeff() : num_(), den_(1) {}
  QRatCoeff(long v) : num_(v), den_(1) {}                   // NOLINT implicit
  QRatCoeff(const Rational& r);                             // NOLINT implicit
  QRatCoeff(ZPoly numerator) : num_(std::move(numerator)), den_(1) {}  // NOLINT
  QRatCoeff(ZPoly numerator, ZPoly denominator);

  static QRatCoeff q() { return QRatCoeff(ZPoly::q_power(1)); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }

  QRatCoeff operator-() const;
  QRatCoeff operator+(const QRatCoeff& o) const;
  QRatCoeff operator-(const QRatCoeff& o) const;
  QRatCoeff operator*(const QRatCoeff& o) const;
  QRatCoeff operator/(const QRatCoeff& o) const;
  QRatCoeff& operator+=(const QRatCoeff& o) { return *this = *this + o; }
  QRatCoeff& operator-=(const QRatCoeff& o) { return *this = *this - o; }
  QRatCoeff& operator*=(const QRatCoeff& o) { return *this = *this * o; }
  QRatCoeff& operator/=(const QRatCoeff& o) { return *this = *this / o; }
  bool operator==(const QRatCoeff& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRatCoeff& o) const { return !(*this == o); }
  bool operator<(const QRatCoeff& o) const;

  QRatCoeff inverse() const;
  QRatCoeff pow(int e) const;
  Rational eval(const Rational& q0) const;  // PoleError when den(q0) = 0

  std::string str() const;  // "q^2+1" or "(q^2+1)/(q+1)"

 private:
  void reduce();
  ZPoly num_, den_;
};

inline bool is_zero(const QRatCoeff& k) { return k.is_zero(); }
inline bool is_one(const QRatCoeff& k) { return k == QRatCoeff(1); }
inline std::string to_string(const QRatCoeff& k) { return k.str(); }

// coefficient-ring hooks shared by the templated mould / FQSym code
template <class K>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static Rational from_rational(const Rational& r) { return r; }
  static const char* ring_name() { return "Q"; }
};

template <>
struct CoeffTraits<QRatCoeff> {
  static QRatCoeff from_rational(const Rational& r) { return QRatCoeff(r); }
  static const char* ring_name() { return "Q(q)"; }
};

}  // namespace moulds

#endif
