#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "moulds/errors.hpp"
#include "moulds/fqsym.hpp"
#include "moulds/nct.hpp"
#include "moulds/permutation.hpp"
#include "moulds/power_series.hpp"
#include "moulds/textio.hpp"
#include "moulds/tree.hpp"

using namespace moulds;

namespace {

NifForest NF(const std::string& s) { return nif_parse(s); }

const long kTreeCounts[] = {0, 1, 2, 7, 30, 143, 728};
const long kForestCounts[] = {1, 1, 3, 12, 55, 273, 1428};

}  // namespace

TEST_CASE("forest parsing and printing") {
  NifForest f = NF("2(1,3)");
  REQUIRE(f.size() == 1);
  CHECK(f[0].label == 2);
  REQUIRE(f[0].children.size() == 2);
  CHECK(f[0].children[0].label == 1);
  CHECK(f[0].children[1].label == 3);
  CHECK(nif_size(f) == 3);
  CHECK(subtree_interval(f[0]) == std::pair<int, int>(1, 3));

  for (const char* s : {"1", "1(2)", "2(1)", "2(1,3)", "1,2", "2(1),3",
                        "3(1(2),4(5))", "1(3(2),4),5"}) {
    CHECK(nif_str(NF(s)) == s);
  }
  // children and components are reordered by interval start
  CHECK(nif_str(NF("2(3,1)")) == "2(1,3)");
  CHECK(nif_str(NF("3,2(1)")) == "2(1),3");
  CHECK(nif_str(NF(" 2 ( 1 , 3 ) ")) == "2(1,3)");

  CHECK_THROWS_AS(NF(""), ParseError);
  CHECK_THROWS_AS(NF("2(1,3"), ParseError);
  CHECK_THROWS_AS(NF("2(1 3)"), ParseError);
  CHECK_THROWS_AS(NF("x"), ParseError);
  CHECK_THROWS_AS(NF("1)"), ParseError);
}

TEST_CASE("forest validation") {
  CHECK(validate_nif(NF("1")));
  CHECK(validate_nif(NF("2(1,3)")));
  CHECK(validate_nif(NF("2(1),3")));
  CHECK(validate_nif(NF("3(1(2),4(5))")));
  // parse checks syntax only; these fail the structural rules
  CHECK_FALSE(validate_nif(NF("5")));         // labels must be 1..n
  CHECK_FALSE(validate_nif(NF("1(1)")));      // duplicate label
  CHECK_FALSE(validate_nif(NF("2(1,4),3")));  // subtree {1,2,4} not an interval
  CHECK_FALSE(validate_nif(NF("1(3),2")));
  // components must tile 1..n left to right
  NifForest out_of_order{NifNode{2, {}}, NifNode{1, {}}};
  CHECK_FALSE(validate_nif(out_of_order));
}

TEST_CASE("enumeration counts and recurrences") {
  std::vector<long> t{0}, f{1};
  for (int n = 1; n <= 6; ++n) {
    auto trees = enumerate_nit(n);
    auto forests = enumerate_nif(n);
    t.push_back(static_cast<long>(trees.size()));
    f.push_back(static_cast<long>(forests.size()));
    CHECK(t[n] == kTreeCounts[n]);
    CHECK(f[n] == kForestCounts[n]);
    std::set<std::string> seen;
    for (const auto& g : forests) {
      CHECK(validate_nif(g));
      CHECK(seen.insert(nif_str(g)).second);
    }
  }
  CHECK(static_cast<long>(enumerate_nif(0).size()) == 1);
  // a tree is a root with a forest on each side of its label
  for (int n = 1; n <= 6; ++n) {
    long conv = 0;
    for (int i = 0; i < n; ++i) conv += f[i] * f[n - 1 - i];
    CHECK(t[n] == conv);
  }
  // a forest is its first tree followed by a forest
  for (int n = 1; n <= 6; ++n) {
    long conv = 0;
    for (int k = 1; k <= n; ++k) conv += t[k] * f[n - k];
    CHECK(f[n] == conv);
  }
  CHECK_THROWS_AS(enumerate_nif(-1), InvalidInputError);
  CHECK_THROWS_AS(enumerate_nit(0), InvalidInputError);
}

TEST_CASE("chord representation") {
  NonCrossingTree t = nif_to_nct(NF("2(1,3)"));
  CHECK(t.n == 3);
  CHECK(t.edges ==
        std::set<std::pair<int, int>>{{0, 1}, {2, 3}, {0, 3}});
  CHECK(validate_nct(t));
  CHECK(nct_to_nif(t) == NF("2(1,3)"));

  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_nif(n)) {
      NonCrossingTree c = nif_to_nct(g);
      CHECK(validate_nct(c));
      CHECK(nct_to_nif(c) == g);
    }

  NonCrossingTree crossing{3, {{0, 2}, {1, 3}, {0, 3}}};
  CHECK_FALSE(validate_nct(crossing));
  NonCrossingTree cyclic{3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK_FALSE(validate_nct(cyclic));
  NonCrossingTree short_one{2, {{0, 1}}};
  CHECK_FALSE(validate_nct(short_one));
  CHECK_THROWS_AS(nct_to_nif(crossing), InvalidInputError);
  CHECK_THROWS_AS(nif_to_nct(NF("5")), InvalidInputError);
}

TEST_CASE("forest moulds decompose over linear extensions") {
  CHECK(equal(nif_mould(NF("2(1,3)")),
              parse_mould("1 / [u1][u3][u1+u2+u3]")));
  CHECK(linear_extensions(NF("2(1,3)")) ==
        std::set<Permutation>{parse_perm("132"), parse_perm("312")});
  CHECK(linear_extensions(NF("1,2")) ==
        std::set<Permutation>{parse_perm("12"), parse_perm("21")});
  CHECK_THROWS_AS(nif_mould(NF("5")), InvalidInputError);
  CHECK_THROWS_AS(linear_extensions(NF("5")), InvalidInputError);

  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_nif(n)) {
      FQSymElt<Rational> dec = decompose_fsym(nif_mould(g));
      auto exts = linear_extensions(g);
      CHECK(dec.coeffs().size() == exts.size());
      for (const auto& sigma : exts) CHECK(dec.coeff(sigma) == 1);
    }
}

TEST_CASE("Tamari order") {
  const long counts[] = {0, 1, 3, 13, 68};
  for (int n = 1; n <= 4; ++n) {
    TamariOrder order(n);
    CHECK(static_cast<long>(order.trees().size()) ==
          static_cast<long>(enumerate_trees(n).size()));
    for (const auto& t : order.trees()) {
      CHECK(order.leq(left_comb(n), t));
      CHECK(order.leq(t, right_comb(n)));
      for (const auto& s : order.trees())
        if (order.leq(s, t) && order.leq(t, s)) CHECK(s == t);
    }
    CHECK(order.interval_count() == counts[n]);
  }
  TamariOrder order(2);
  CHECK_FALSE(order.leq(right_comb(2), left_comb(2)));
  CHECK_THROWS_AS(order.leq(left_comb(3), right_comb(3)), InvalidInputError);
}

TEST_CASE("linear extensions fill a Tamari interval") {
  TamariIntervalReport rep = tamari_interval_of(NF("2(1,3)"));
  CHECK(rep.is_interval);
  CHECK(rep.shapes == std::set<BinaryTree>{BinaryTree::parse("((o,o),(o,o))")});
  CHECK(rep.tmin == rep.tmax);
  CHECK(rep.sigma_min == parse_perm("132"));
  CHECK(rep.sigma_max == parse_perm("312"));
  CHECK(rep.min_avoids_312);
  CHECK(rep.max_avoids_132);

  TamariIntervalReport two = tamari_interval_of(NF("1,2"));
  CHECK(two.is_interval);
  CHECK(two.shapes.size() == 2);
  CHECK(two.tmin == left_comb(2));
  CHECK(two.tmax == right_comb(2));

  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_nif(n)) {
      TamariIntervalReport r = tamari_interval_of(g);
      CHECK(r.is_interval);
      CHECK(r.min_avoids_312);
      CHECK(r.max_avoids_132);
      // the extensions are exactly the sylvester classes of the interval
      std::set<Permutation> from_classes;
      for (const auto& t : r.shapes) {
        auto cls = sylvester_class(t);
        from_classes.insert(cls.begin(), cls.end());
      }
      CHECK(from_classes == linear_extensions(g));
    }
}

TEST_CASE("L-algebra half products") {
  NifNode x{1, {}};
  CHECK(nif_str({lalg_prec(x, x)}) == "1(2)");
  CHECK(nif_str({lalg_succ(x, x)}) == "2(1)");
  CHECK(nif_str({lalg_prec(lalg_succ(x, x), x)}) == "2(1,3)");
  // the L-algebra relation (a > b) < c = a > (b < c), all small operands
  std::vector<NifNode> small;
  for (int n = 1; n <= 2; ++n)
    for (const auto& t : enumerate_nit(n)) small.push_back(t);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small)
        CHECK(lalg_prec(lalg_succ(a, b), c) == lalg_succ(a, lalg_prec(b, c)));
  CHECK_THROWS_AS(lalg_prec(NifNode{3, {}}, x), InvalidInputError);

  for (int n = 1; n <= 6; ++n)
    CHECK(lalg_basis_count(n) == Integer(kTreeCounts[n]));
  CHECK_THROWS_AS(lalg_basis_count(0), InvalidInputError);
}

TEST_CASE("power series arithmetic") {
  PowerSeries t = PowerSeries::t(6);
  PowerSeries one = PowerSeries::constant(6, Rational(1));
  CHECK((one + t).coeff(0) == 1);
  CHECK((one + t) * (one - t) == one - t * t);
  CHECK((one + t).scaled(Rational(3)).coeff(1) == 3);
  CHECK(-t == t.scaled(Rational(-1)));
  CHECK(PowerSeries(6).is_zero());

  // 1/(1-t) is the geometric series
  PowerSeries geo = (one - t).inverse();
  for (int k = 0; k <= 6; ++k) CHECK(geo.coeff(k) == 1);
  CHECK((one - t) * geo == one);
  // log and exp are mutually inverse where defined
  CHECK(geo.log().coeff(3) == Rational(1, 3));
  CHECK(geo.log().exp() == geo);
  CHECK((t + t * t).exp().log() == t + t * t);
  // substitution golden: (1/(1-t)) o (t^2) = 1/(1-t^2)
  CHECK(geo.compose(t * t) == (one - t * t).inverse());

  PowerSeries s(3);
  s.set_coeff(2, Rational(5));
  CHECK(s.coeff(2) == 5);
  CHECK_THROWS_AS(s.coeff(7), IndexError);
  CHECK_THROWS_AS(s.set_coeff(-1, Rational(1)), IndexError);
  CHECK_THROWS_AS(PowerSeries(-1), InvalidInputError);
  CHECK_THROWS_AS(PowerSeries::t(0), InvalidInputError);
  CHECK_THROWS_AS(t + PowerSeries::t(4), InvalidInputError);
  CHECK_THROWS_AS(t.inverse(), NonInvertibleError);
  CHECK_THROWS_AS(t.log(), InvalidInputError);
  CHECK_THROWS_AS(one.exp(), InvalidInputError);
  CHECK_THROWS_AS(t.compose(one), InvalidInputError);
}

TEST_CASE("compositional inverse counts the trees") {
  // the generating series dictated by the two enumeration recurrences
  PowerSeries f(7, {Rational(0), Rational(-1), Rational(2), Rational(-1)});
  PowerSeries g = series_compose_inverse(f, 7);
  CHECK(f.compose(g) == PowerSeries::t(7));
  CHECK(g.compose(f) == PowerSeries::t(7));
  for (int n = 1; n <= 6; ++n) {
    Rational c = g.coeff(n);
    Rational a = c < 0 ? Rational(-c) : c;
    CHECK(a == Rational(kTreeCounts[n]));
  }

  PowerSeries h(5, {Rational(0), Rational(1), Rational(1), Rational(3)});
  PowerSeries hinv = series_compose_inverse(h, 5);
  CHECK(h.compose(hinv) == PowerSeries::t(5));
  CHECK(hinv.compose(h) == PowerSeries::t(5));

  CHECK_THROWS_AS(series_compose_inverse(PowerSeries::constant(4, Rational(1)), 4),
                  InvalidInputError);
  CHECK_THROWS_AS(series_compose_inverse(PowerSeries(4), 4), NonInvertibleError);
}
