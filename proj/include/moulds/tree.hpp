#ifndef MOULDS_TREE_HPP
#define MOULDS_TREE_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "moulds/mould.hpp"
#include "moulds/permutation.hpp"
#include "moulds/rational.hpp"

namespace moulds {

// Complete planar binary tree, leaf-terminated. Immutable value type;
// subtrees are shared. nodes() counts internal nodes.
class BinaryTree {
 public:
  BinaryTree() = default;  // leaf
  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree node(BinaryTree l, BinaryTree r);

  bool is_leaf() const { return !p_; }
  int nodes() const { return p_ ? p_->size : 0; }
  BinaryTree left() const;
  BinaryTree right() const;

  std::string str() const;
  static BinaryTree parse(const std::string& text);

  bool operator==(const BinaryTree& o) const;
  bool operator!=(const BinaryTree& o) const { return !(*this == o); }
  bool operator<(const BinaryTree& o) const;

 private:
  struct Node {
    std::shared_ptr<const Node> l, r;
    int size;
  };
  explicit BinaryTree(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

std::vector<BinaryTree> enumerate_trees(int n);
BinaryTree left_comb(int n);
BinaryTree right_comb(int n);

// single fraction 1/prod over internal nodes of (sum of u_j, j in the node's
// subtree), nodes numbered 1..n in infix order
RatMould tree_mould(const BinaryTree& t);

// shape of the decreasing tree of a word with distinct letters
BinaryTree decreasing_tree_shape(const Word& w);

// permutations sigma whose inverse has a decreasing tree of this shape
std::set<Permutation> sylvester_class(const BinaryTree& t);

Integer hook_count(const BinaryTree& t);

// graft onto the leftmost / rightmost leaf
BinaryTree tree_over(const BinaryTree& t1, const BinaryTree& t2);
BinaryTree tree_under(const BinaryTree& t1, const BinaryTree& t2);

// mould of the one-node tree with the operands grafted on its two leaves:
// f(u_1..u_p) g(u_{p+2}..u_{p+q+1}) / (u_1+...+u_{p+q+1})
template <class K>
Mould<K> corolla_compose(const Mould<K>& f, const Mould<K>& g) {
  int p = f.arity(), q = g.arity();
  int total = p + q + 1;
  std::vector<LinearForm> fimg, gimg;
  for (int w = 1; w <= p; ++w) fimg.push_back(LinearForm::var(w));
  for (int w = 1; w <= q; ++w) gimg.push_back(LinearForm::var(w + p + 1));
  FractionTerm<K> root;
  root.coeff = CoeffTraits<K>::from_rational(Rational(1));
  root.denom.push_back(LinearForm::sum_range(1, total));
  Mould<K> rootm(total, {std::move(root)});
  return f.substitute(fimg, total).multiply(g.substitute(gimg, total)).multiply(rootm);
}

}  // namespace moulds

#endif
