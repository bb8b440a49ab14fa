#ifndef MOULDS_POWER_SERIES_HPP
#define MOULDS_POWER_SERIES_HPP

#include <vector>

#include "moulds/rational.hpp"

namespace moulds {

// Truncated power series over Q with exact coefficients c_0..c_N.
// All operations stay within the common truncation degree.
class PowerSeries {
 public:
  explicit PowerSeries(int max_degree);
  PowerSeries(int max_degree, std::vector<Rational> coeffs);
  static PowerSeries constant(int max_degree, const Rational& c);
  static PowerSeries t(int max_degree);

  int max_degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const;
  void set_coeff(int k, const Rational& v);
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  bool operator==(const PowerSeries& o) const { return c_ == o.c_; }
  bool operator!=(const PowerSeries& o) const { return !(*this == o); }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator-() const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries scaled(const Rational& c) const;

  PowerSeries inverse() const;             // needs c_0 != 0
  PowerSeries operator/(const PowerSeries& o) const { return *this * o.inverse(); }
  PowerSeries log() const;                 // needs c_0 == 1
  PowerSeries exp() const;                 // needs c_0 == 0
  PowerSeries compose(const PowerSeries& g) const;  // needs g(0) == 0

 private:
  void require_same_degree(const PowerSeries& o) const;
  std::vector<Rational> c_;  // index = degree
};

// g with f(g(t)) = t up to degree N; f(0) = 0 and f'(0) != 0 required
PowerSeries series_compose_inverse(const PowerSeries& f, int N);

}  // namespace moulds

#endif
