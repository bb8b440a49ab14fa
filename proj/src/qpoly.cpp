#include "moulds/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "moulds/errors.hpp"

namespace moulds {

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::monomial(const Integer& coeff, int degree) {
  if (degree < 0) throw InvalidInputError("monomial degree must be nonnegative");
  std::vector<Integer> v(static_cast<size_t>(degree) + 1, Integer(0));
  v.back() = coeff;
  return ZPoly(std::move(v));
}

const Integer& ZPoly::operator[](int d) const {
  static const Integer zero(0);
  if (d < 0 || d >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(d)];
}

Integer ZPoly::content() const {
  Integer g(0);
  for (const Integer& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (!c_.empty() && c_.back() < 0) g = -g;
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  std::vector<Integer> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] / g;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-() const {
  std::vector<Integer> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return ZPoly(std::move(v));
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<Integer> v(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return ZPoly();
  std::vector<Integer> v(c_.size() + o.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const Integer& k) const {
  std::vector<Integer> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * k;
  return ZPoly(std::move(v));
}

bool ZPoly::operator<(const ZPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

ZPoly ZPoly::pow(int e) const {
  if (e < 0) throw InvalidInputError("negative polynomial power");
  ZPoly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Rational ZPoly::eval(const Rational& q0) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + Rational(c_[i]);
  return acc;
}

namespace {

// quotient/remainder over Q; exact integer polynomial division checks both
// that the remainder vanishes and that the quotient has integer entries
struct QDiv {
  std::vector<Rational> quot, rem;
};

QDiv rational_divmod(const ZPoly& a, const ZPoly& d) {
  if (d.is_zero()) throw NonInvertibleError("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs().size());
  for (size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(a.coeffs()[i]);
  int da = a.degree(), dd = d.degree();
  std::vector<Rational> quot(da >= dd ? static_cast<size_t>(da - dd) + 1 : 0, Rational(0));
  Rational lead(d.leading());
  for (int k = da - dd; k >= 0; --k) {
    Rational c = rem[static_cast<size_t>(k + dd)] / lead;
    quot[static_cast<size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(k + j)] -= c * Rational(d.coeffs()[static_cast<size_t>(j)]);
  }
  QDiv out;
  out.quot = std::move(quot);
  out.rem = std::move(rem);
  return out;
}

}  // namespace

ZPoly ZPoly::div_exact(const ZPoly& d) const {
  QDiv qd = rational_divmod(*this, d);
  for (const Rational& r : qd.rem)
    if (r != 0) throw InvalidInputError("inexact polynomial division");
  std::vector<Integer> v(qd.quot.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (qd.quot[i].get_den() != 1)
      throw InvalidInputError("inexact polynomial division");
    v[i] = qd.quot[i].get_num();
  }
  return ZPoly(std::move(v));
}

bool ZPoly::divisible_by(const ZPoly& d) const {
  QDiv qd = rational_divmod(*this, d);
  for (const Rational& r : qd.rem)
    if (r != 0) return false;
  return true;
}

std::string ZPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Integer& c = (*this)[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    Integer a = abs(c);
    if (a != 1 || d == 0) os << a.get_str();
    if (d >= 1) os << 'q';
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) return ZPoly();
  if (a.is_zero()) return b.content() < 0 ? -b : b;
  if (b.is_zero()) return a.content() < 0 ? -a : a;
  Integer cg;
  {
    Integer ca = abs(a.content()), cb = abs(b.content());
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  // primitive remainder sequence on the primitive parts
  ZPoly u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    // pseudo-remainder: lc(v)^(deg u - deg v + 1) * u mod v stays integral
    ZPoly r = u;
    Integer lv = v.leading();
    while (!r.is_zero() && r.degree() >= v.degree()) {
      int shift = r.degree() - v.degree();
      r = r * lv - v * ZPoly::monomial(r.leading(), shift);
    }
    u = v;
    v = r.is_zero() ? ZPoly() : r.primitive_part();
  }
  ZPoly g = u.primitive_part();
  if (g.leading() < 0) g = -g;
  return g * cg;
}

ZPoly q_integer(int n) {
  if (n < 0) throw InvalidInputError("q_integer of negative n");
  return ZPoly(std::vector<Integer>(static_cast<size_t>(n), Integer(1)));
}

ZPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) return ZPoly();
  std::vector<ZPoly> row{ZPoly(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<ZPoly> next(static_cast<size_t>(i) + 1);
    next[0] = ZPoly(1);
    next[static_cast<size_t>(i)] = ZPoly(1);
    for (int j = 1; j < i; ++j)
      next[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j - 1)] +
          ZPoly::q_power(j) * row[static_cast<size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

ZPoly cyclotomic(int n) {
  if (n < 1) throw InvalidInputError("cyclotomic index must be positive");
  if (n == 1) return ZPoly(std::vector<Integer>{Integer(-1), Integer(1)});
  ZPoly p = ZPoly::q_power(n) - ZPoly(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = p.div_exact(cyclotomic(d));
  return p;
}

QRatCoeff::QRatCoeff(const Rational& r)
    : num_(Integer(r.get_num())), den_(Integer(r.get_den())) {}

QRatCoeff::QRatCoeff(ZPoly numerator, ZPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw NonInvertibleError("zero denominator in q-coefficient");
  reduce();
}

void QRatCoeff::reduce() {
  if (num_.is_zero()) {
    den_ = ZPoly(1);
    return;
  }
  ZPoly g = gcd(num_, den_);
  if (g.degree() > 0 || g.leading() != 1) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer cn = abs(num_.content()), cd = den_.content(), cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (cg > 1) {
    num_ = num_.div_exact(ZPoly(cg));
    den_ = den_.div_exact(ZPoly(cg));
  }
}

QRatCoeff QRatCoeff::operator-() const {
  QRatCoeff r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

QRatCoeff QRatCoeff::operator+(const QRatCoeff& o) const {
  return QRatCoeff(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRatCoeff QRatCoeff::operator-(const QRatCoeff& o) const { return *this + (-o); }

QRatCoeff QRatCoeff::operator*(const QRatCoeff& o) const {
  return QRatCoeff(num_ * o.num_, den_ * o.den_);
}

QRatCoeff QRatCoeff::operator/(const QRatCoeff& o) const {
  return *this * o.inverse();
}

bool QRatCoeff::operator<(const QRatCoeff& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

QRatCoeff QRatCoeff::inverse() const {
  if (is_zero()) throw NonInvertibleError("inverse of zero q-coefficient");
  return QRatCoeff(den_, num_);
}

QRatCoeff QRatCoeff::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QRatCoeff r(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Rational QRatCoeff::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (d == 0) throw PoleError("q-coefficient denominator vanishes at the given q");
  return num_.eval(q0) / d;
}

std::string QRatCoeff::str() const {
  if (is_polynomial()) return num_.str();
  auto wrap = [](const ZPoly& p) {
    std::string s = p.str();
    bool atom = s.find('+') == std::string::npos &&
                s.find('-', 1) == std::string::npos && s[0] != '-';
    return atom ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace moulds
