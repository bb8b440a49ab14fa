#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "moulds/errors.hpp"
#include "moulds/fqsym.hpp"
#include "moulds/permutation.hpp"
#include "moulds/textio.hpp"
#include "moulds/tree.hpp"

using namespace moulds;

namespace {

BinaryTree T(const std::string& s) { return BinaryTree::parse(s); }

RatMould constant_one() {
  FractionTerm<Rational> t;
  t.coeff = Rational(1);
  return RatMould(0, {t});
}

// sum of tree_mould over all trees with n internal nodes
RatMould catalan_sum(int n) {
  RatMould acc(n);
  for (const auto& t : enumerate_trees(n)) acc = acc + tree_mould(t);
  return acc;
}

}  // namespace

TEST_CASE("tree construction and printing") {
  BinaryTree leaf;
  CHECK(leaf.is_leaf());
  CHECK(leaf.nodes() == 0);
  CHECK(leaf.str() == "o");
  CHECK_THROWS_AS(leaf.left(), InvalidInputError);

  BinaryTree one = BinaryTree::node(leaf, leaf);
  CHECK(one.nodes() == 1);
  CHECK(one.str() == "(o,o)");
  CHECK(one.left().is_leaf());

  BinaryTree t = BinaryTree::node(one, BinaryTree::node(one, leaf));
  CHECK(t.nodes() == 4);
  CHECK(t.str() == "((o,o),((o,o),o))");
  CHECK(t.right().left() == one);
}

TEST_CASE("tree parsing round-trips") {
  for (const char* s : {"o", "(o,o)", "((o,o),o)", "(o,(o,o))",
                        "((o,o),((o,o),o))", "((o,(o,o)),(o,o))"}) {
    BinaryTree t = T(s);
    CHECK(t.str() == s);
    CHECK(T(t.str()) == t);
  }
  CHECK(T(" ( o , o ) ").str() == "(o,o)");
  CHECK_THROWS_AS(T(""), ParseError);
  CHECK_THROWS_AS(T("(o,o"), ParseError);
  CHECK_THROWS_AS(T("(o o)"), ParseError);
  CHECK_THROWS_AS(T("(o,o)x"), ParseError);
  CHECK_THROWS_AS(T("x"), ParseError);
}

TEST_CASE("enumeration counts the Catalan numbers") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) {
    auto trees = enumerate_trees(n);
    CHECK(static_cast<int>(trees.size()) == catalan[n]);
    std::set<BinaryTree> distinct(trees.begin(), trees.end());
    CHECK(distinct.size() == trees.size());
    for (const auto& t : trees) CHECK(t.nodes() == n);
  }
  CHECK_THROWS_AS(enumerate_trees(-1), InvalidInputError);
}

TEST_CASE("combs") {
  CHECK(left_comb(0).is_leaf());
  CHECK(left_comb(3).str() == "(((o,o),o),o)");
  CHECK(right_comb(3).str() == "(o,(o,(o,o)))");
  // combs carry the two monotone permutations
  for (int n = 1; n <= 5; ++n) {
    Word up(static_cast<size_t>(n)), down(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      up[static_cast<size_t>(i)] = i + 1;
      down[static_cast<size_t>(i)] = n - i;
    }
    CHECK(equal(tree_mould(left_comb(n)), perm_mould<Rational>(up)));
    CHECK(equal(tree_mould(right_comb(n)), perm_mould<Rational>(down)));
  }
}

TEST_CASE("tree mould golden value") {
  RatMould m = tree_mould(T("((o,o),((o,o),o))"));
  CHECK(m.arity() == 4);
  CHECK(equal(m, parse_mould("1 / [u1][u3][u3+u4][u1+u2+u3+u4]")));
  CHECK(tree_mould(BinaryTree::leaf()).arity() == 0);
}

TEST_CASE("grafting matches the mould-level operations") {
  BinaryTree dot = T("(o,o)");
  CHECK(tree_over(dot, dot) == T("((o,o),o)"));
  CHECK(tree_under(dot, dot) == T("(o,(o,o))"));
  // grafting a tree onto a leaf, either way, is the tree itself
  CHECK(tree_over(T("((o,o),o)"), BinaryTree::leaf()) == T("((o,o),o)"));
  CHECK(tree_under(BinaryTree::leaf(), T("(o,(o,o))")) == T("(o,(o,o))"));
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (const auto& a : enumerate_trees(p))
        for (const auto& b : enumerate_trees(q)) {
          CHECK(equal(tree_mould(tree_over(a, b)),
                      over(tree_mould(a), tree_mould(b))));
          CHECK(equal(tree_mould(tree_under(a, b)),
                      under(tree_mould(a), tree_mould(b))));
        }
}

TEST_CASE("decreasing tree shapes") {
  CHECK(decreasing_tree_shape(Word{}).is_leaf());
  CHECK(decreasing_tree_shape(Word{7}) == T("(o,o)"));
  CHECK(decreasing_tree_shape(Word{2, 4, 1, 3}) == T("((o,o),((o,o),o))"));
  CHECK(decreasing_tree_shape(Word{1, 2, 3}) == left_comb(3));
  CHECK(decreasing_tree_shape(Word{3, 2, 1}) == right_comb(3));
}

TEST_CASE("sylvester classes partition the permutations") {
  // class sizes at n = 3, in enumeration order
  std::vector<size_t> sizes;
  for (const auto& t : enumerate_trees(3)) sizes.push_back(sylvester_class(t).size());
  std::multiset<size_t> got(sizes.begin(), sizes.end());
  CHECK(got == std::multiset<size_t>{1, 1, 1, 2, 1});

  for (int n = 1; n <= 5; ++n) {
    std::set<Permutation> seen;
    Integer total(0);
    for (const auto& t : enumerate_trees(n)) {
      auto cls = sylvester_class(t);
      CHECK(Integer(static_cast<long>(cls.size())) == hook_count(t));
      for (const auto& sigma : cls) CHECK(seen.insert(sigma).second);
      total += static_cast<long>(cls.size());
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("hook length counts") {
  CHECK(hook_count(BinaryTree::leaf()) == 1);
  CHECK(hook_count(left_comb(5)) == 1);
  CHECK(hook_count(right_comb(5)) == 1);
  CHECK(hook_count(T("((o,o),(o,o))")) == 2);
  CHECK(hook_count(T("((o,o),((o,o),o))")) == 3);
}

TEST_CASE("tree moulds sum their sylvester class") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(n)) {
      FQSymElt<Rational> dec = decompose_fsym(tree_mould(t));
      auto cls = sylvester_class(t);
      CHECK(dec.coeffs().size() == cls.size());
      for (const auto& sigma : cls) CHECK(dec.coeff(sigma) == 1);
    }
}

TEST_CASE("corolla composition") {
  RatMould one = constant_one();
  CHECK(equal(corolla_compose(one, one), perm_mould<Rational>(parse_perm("1"))));
  CHECK(equal(corolla_compose(tree_mould(T("(o,o)")), one),
              perm_mould<Rational>(parse_perm("12"))));
  CHECK(equal(corolla_compose(one, tree_mould(T("(o,o)"))),
              perm_mould<Rational>(parse_perm("21"))));
  // the generating fixed point: grafting a pair of forests of every split
  // under a fresh root produces exactly the trees of the next size
  for (int n = 1; n <= 5; ++n) {
    RatMould rhs(n);
    for (int p = 0; p < n; ++p)
      rhs = rhs + corolla_compose(catalan_sum(p), catalan_sum(n - 1 - p));
    CHECK(equal(catalan_sum(n), rhs));
  }
}
