#include "moulds/tree.hpp"

#include <algorithm>

#include "moulds/errors.hpp"

namespace moulds {

BinaryTree BinaryTree::node(BinaryTree l, BinaryTree r) {
  int size = l.nodes() + r.nodes() + 1;
  return BinaryTree(
      std::make_shared<const Node>(Node{std::move(l.p_), std::move(r.p_), size}));
}

BinaryTree BinaryTree::left() const {
  if (!p_) throw InvalidInputError("leaf has no subtrees");
  return BinaryTree(p_->l);
}

BinaryTree BinaryTree::right() const {
  if (!p_) throw InvalidInputError("leaf has no subtrees");
  return BinaryTree(p_->r);
}

std::string BinaryTree::str() const {
  if (!p_) return "o";
  return "(" + left().str() + "," + right().str() + ")";
}

bool BinaryTree::operator==(const BinaryTree& o) const {
  if (p_ == o.p_) return true;
  if (!p_ || !o.p_) return false;
  return p_->size == o.p_->size && left() == o.left() && right() == o.right();
}

bool BinaryTree::operator<(const BinaryTree& o) const {
  if (nodes() != o.nodes()) return nodes() < o.nodes();
  if (is_leaf() || *this == o) return false;
  if (!(left() == o.left())) return left() < o.left();
  return right() < o.right();
}

namespace {

BinaryTree parse_tree(const std::string& s, size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size())
    throw ParseError("unexpected end of tree at position " + std::to_string(pos));
  if (s[pos] == 'o') {
    ++pos;
    return BinaryTree::leaf();
  }
  if (s[pos] != '(')
    throw ParseError("expected 'o' or '(' at position " + std::to_string(pos));
  ++pos;
  BinaryTree l = parse_tree(s, pos);
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size() || s[pos] != ',')
    throw ParseError("expected ',' at position " + std::to_string(pos));
  ++pos;
  BinaryTree r = parse_tree(s, pos);
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size() || s[pos] != ')')
    throw ParseError("expected ')' at position " + std::to_string(pos));
  ++pos;
  return BinaryTree::node(std::move(l), std::move(r));
}

}  // namespace

BinaryTree BinaryTree::parse(const std::string& text) {
  size_t pos = 0;
  BinaryTree t = parse_tree(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size())
    throw ParseError("trailing characters at position " + std::to_string(pos));
  return t;
}

std::vector<BinaryTree> enumerate_trees(int n) {
  if (n < 0) throw InvalidInputError("negative tree size");
  std::vector<std::vector<BinaryTree>> by_size(static_cast<size_t>(n) + 1);
  by_size[0] = {BinaryTree::leaf()};
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i)
      for (const auto& l : by_size[static_cast<size_t>(i)])
        for (const auto& r : by_size[static_cast<size_t>(k - 1 - i)])
          by_size[static_cast<size_t>(k)].push_back(BinaryTree::node(l, r));
  return by_size[static_cast<size_t>(n)];
}

BinaryTree left_comb(int n) {
  BinaryTree t;
  for (int k = 0; k < n; ++k) t = BinaryTree::node(t, BinaryTree::leaf());
  return t;
}

BinaryTree right_comb(int n) {
  BinaryTree t;
  for (int k = 0; k < n; ++k) t = BinaryTree::node(BinaryTree::leaf(), t);
  return t;
}

namespace {

// infix label ranges: the subtree of the node labelled r spans [lo, hi]
void subtree_ranges(const BinaryTree& t, int offset,
                    std::vector<std::pair<int, int>>& out) {
  if (t.is_leaf()) return;
  int lo = offset + 1;
  int hi = offset + t.nodes();
  out.emplace_back(lo, hi);
  subtree_ranges(t.left(), offset, out);
  subtree_ranges(t.right(), offset + t.left().nodes() + 1, out);
}

}  // namespace

RatMould tree_mould(const BinaryTree& t) {
  int n = t.nodes();
  std::vector<std::pair<int, int>> ranges;
  subtree_ranges(t, 0, ranges);
  FractionTerm<Rational> term;
  term.coeff = Rational(1);
  for (const auto& [lo, hi] : ranges)
    term.denom.push_back(LinearForm::sum_range(lo, hi));
  return RatMould(n, {std::move(term)});
}

BinaryTree decreasing_tree_shape(const Word& w) {
  if (w.empty()) return BinaryTree::leaf();
  auto mx = std::max_element(w.begin(), w.end());
  Word l(w.begin(), mx), r(std::next(mx), w.end());
  return BinaryTree::node(decreasing_tree_shape(l), decreasing_tree_shape(r));
}

std::set<Permutation> sylvester_class(const BinaryTree& t) {
  std::set<Permutation> out;
  for (const Permutation& sigma : all_permutations(t.nodes()))
    if (decreasing_tree_shape(inverse_perm(sigma)) == t) out.insert(sigma);
  return out;
}

namespace {
void hook_product(const BinaryTree& t, Integer& acc) {
  if (t.is_leaf()) return;
  acc *= t.nodes();
  hook_product(t.left(), acc);
  hook_product(t.right(), acc);
}
}  // namespace

Integer hook_count(const BinaryTree& t) {
  Integer prod(1);
  hook_product(t, prod);
  return factorial(t.nodes()) / prod;
}

BinaryTree tree_over(const BinaryTree& t1, const BinaryTree& t2) {
  if (t2.is_leaf()) return t1;
  return BinaryTree::node(tree_over(t1, t2.left()), t2.right());
}

BinaryTree tree_under(const BinaryTree& t1, const BinaryTree& t2) {
  if (t1.is_leaf()) return t2;
  return BinaryTree::node(t1.left(), tree_under(t1.right(), t2));
}

}  // namespace moulds
