#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moulds/errors.hpp"
#include "moulds/qpoly.hpp"
#include "moulds/rational.hpp"

using namespace moulds;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0/5") == 0);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("2/"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("make_rational reduces") {
  CHECK(make_rational(Integer(2), Integer(2)) == 1);
  CHECK(make_rational(Integer(4), Integer(-6)) == Rational(-2, 3));
  CHECK(to_string(make_rational(Integer(4), Integer(-6))) == "-2/3");
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("rat_pow") {
  CHECK(rat_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rat_pow(Rational(2, 3), 0) == 1);
  CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("probe values stay in the window") {
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 200; ++i) {
    Rational v = random_probe_value(rng);
    CHECK(v >= 1);
    CHECK(v <= 10000);
    CHECK(v.get_den() == 1);
  }
  auto pt = random_probe_point(rng, 5);
  CHECK(pt.size() == 5);
}

TEST_CASE("ZPoly arithmetic") {
  ZPoly q = ZPoly::monomial(Integer(1), 1);
  ZPoly p = q * q + q - ZPoly(Integer(2));  // q^2 + q - 2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(1)) == 0);
  CHECK(p.eval(Rational(-2)) == 0);
  CHECK(p.str() == "q^2+q-2");
  CHECK((q - q).is_zero());
  CHECK(q.pow(3).str() == "q^3");

  ZPoly a = (q + ZPoly(Integer(1))) * (q - ZPoly(Integer(1)));
  CHECK(a.str() == "q^2-1");
  CHECK(a.divisible_by(q + ZPoly(Integer(1))));
  CHECK(a.div_exact(q + ZPoly(Integer(1))) == q - ZPoly(Integer(1)));
  CHECK_FALSE(a.divisible_by(q + ZPoly(Integer(2))));
}

TEST_CASE("ZPoly gcd and content") {
  ZPoly q = ZPoly::monomial(Integer(1), 1);
  ZPoly a = (q + ZPoly(Integer(1))).pow(2) * ZPoly(Integer(6));
  ZPoly b = (q + ZPoly(Integer(1))) * (q + ZPoly(Integer(2))) * ZPoly(Integer(4));
  ZPoly g = gcd(a, b);
  // gcd is primitive up to the integer content gcd
  CHECK(g.divisible_by(q + ZPoly(Integer(1))));
  CHECK(a.divisible_by(g));
  CHECK(b.divisible_by(g));
  CHECK(a.content() == 6);
  CHECK(a.primitive_part() == (q + ZPoly(Integer(1))).pow(2));
}

TEST_CASE("q-integers and q-binomials") {
  // oracle: [n]_q = 1 + q + ... + q^{n-1}, [n k]_q by the Pascal recursion
  ZPoly q = ZPoly::monomial(Integer(1), 1);
  CHECK(q_integer(1) == ZPoly(Integer(1)));
  CHECK(q_integer(3).str() == "q^2+q+1");
  CHECK(q_binomial(3, 1).str() == "q^2+q+1");
  CHECK(q_binomial(4, 2).str() == "q^4+q^3+2q^2+q+1");
  CHECK(q_binomial(5, 0) == ZPoly(Integer(1)));
  CHECK(q_binomial(5, 5) == ZPoly(Integer(1)));
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      // [n k] = [n-1 k] + q^{n-k} [n-1 k-1]
      ZPoly lhs = q_binomial(n, k);
      ZPoly rhs = q_binomial(n - 1, k) +
                  q.pow(n - k) * q_binomial(n - 1, k - 1);
      CHECK(lhs == rhs);
      // specializing q = 1 gives the plain binomial
      CHECK(lhs.eval(Rational(1)) == Rational(binomial(n, k)));
    }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1).str() == "q-1");
  CHECK(cyclotomic(2).str() == "q+1");
  CHECK(cyclotomic(3).str() == "q^2+q+1");
  CHECK(cyclotomic(4).str() == "q^2+1");
  CHECK(cyclotomic(6).str() == "q^2-q+1");
  // product over divisors of n reconstructs q^n - 1
  ZPoly q = ZPoly::monomial(Integer(1), 1);
  for (int n = 1; n <= 8; ++n) {
    ZPoly prod(Integer(1));
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == q.pow(n) - ZPoly(Integer(1)));
  }
}

TEST_CASE("QRatCoeff field operations") {
  QRatCoeff q = QRatCoeff::q();
  QRatCoeff half(Rational(1, 2));
  CHECK(half.str() == "1/2");
  CHECK((q * q - QRatCoeff(1)).str() == "q^2-1");
  QRatCoeff r = (q * q - QRatCoeff(1)) / (q - QRatCoeff(1));
  CHECK(r.str() == "q+1");  // reduced on construction
  CHECK(r.is_polynomial());
  QRatCoeff s = QRatCoeff(1) / (q + QRatCoeff(1));
  CHECK((s * (q + QRatCoeff(1))).str() == "1");
  CHECK((q - q).is_zero());
  CHECK(q.pow(3).str() == "q^3");
  CHECK(q.pow(0).str() == "1");
  CHECK(q.inverse().str() == "1/q");
  CHECK_THROWS_AS(QRatCoeff(0).inverse(), NonInvertibleError);
  CHECK(q.eval(Rational(3, 2)) == Rational(3, 2));
  QRatCoeff t = QRatCoeff(1) / (q - QRatCoeff(2));
  CHECK_THROWS_AS(t.eval(Rational(2)), PoleError);
  CHECK(t.eval(Rational(3)) == 1);
}

TEST_CASE("coefficient traits") {
  CHECK(CoeffTraits<Rational>::from_rational(Rational(2, 3)) == Rational(2, 3));
  CHECK(CoeffTraits<QRatCoeff>::from_rational(Rational(2, 3)).str() == "2/3");
  CHECK(std::string(CoeffTraits<Rational>::ring_name()) == "Q");
  CHECK(std::string(CoeffTraits<QRatCoeff>::ring_name()) == "Q(q)");
}
