#include "moulds/nct.hpp"

#include <algorithm>
#include <numeric>

#include "moulds/errors.hpp"

namespace moulds {

namespace {

void collect_labels(const NifNode& t, std::vector<int>& out) {
  out.push_back(t.label);
  for (const auto& c : t.children) collect_labels(c, out);
}

int subtree_count(const NifNode& t) {
  int n = 1;
  for (const auto& c : t.children) n += subtree_count(c);
  return n;
}

void sort_children(NifNode& t) {
  for (auto& c : t.children) sort_children(c);
  std::sort(t.children.begin(), t.children.end(),
            [](const NifNode& a, const NifNode& b) {
              return subtree_interval(a).first < subtree_interval(b).first;
            });
}

}  // namespace

int nif_size(const NifForest& f) {
  int n = 0;
  for (const auto& t : f) n += subtree_count(t);
  return n;
}

std::pair<int, int> subtree_interval(const NifNode& t) {
  std::vector<int> labels;
  collect_labels(t, labels);
  auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
  return {*lo, *hi};
}

namespace {

void node_str(const NifNode& t, std::string& out) {
  out += std::to_string(t.label);
  if (t.children.empty()) return;
  out += "(";
  for (size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ",";
    node_str(t.children[i], out);
  }
  out += ")";
}

NifNode parse_node(const std::string& s, size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError("expected node label at position " + std::to_string(pos));
  NifNode t;
  t.label = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    t.label = t.label * 10 + (s[pos] - '0');
    ++pos;
  }
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos < s.size() && s[pos] == '(') {
    ++pos;
    for (;;) {
      t.children.push_back(parse_node(s, pos));
      while (pos < s.size() && s[pos] == ' ') ++pos;
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')' at position " + std::to_string(pos));
    }
  }
  return t;
}

}  // namespace

std::string nif_str(const NifForest& f) {
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    node_str(f[i], out);
  }
  return out;
}

NifForest nif_parse(const std::string& text) {
  size_t pos = 0;
  NifForest f;
  for (;;) {
    f.push_back(parse_node(text, pos));
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos != text.size())
    throw ParseError("trailing characters at position " + std::to_string(pos));
  for (auto& t : f) sort_children(t);
  std::sort(f.begin(), f.end(), [](const NifNode& a, const NifNode& b) {
    return subtree_interval(a).first < subtree_interval(b).first;
  });
  return f;
}

namespace {

bool intervals_ok(const NifNode& t) {
  auto [lo, hi] = subtree_interval(t);
  if (hi - lo + 1 != subtree_count(t)) return false;
  for (const auto& c : t.children)
    if (!intervals_ok(c)) return false;
  for (size_t i = 1; i < t.children.size(); ++i)
    if (subtree_interval(t.children[i - 1]).first >
        subtree_interval(t.children[i]).first)
      return false;
  return true;
}

}  // namespace

bool validate_nif(const NifForest& f) {
  int n = nif_size(f);
  std::vector<int> labels;
  for (const auto& t : f) collect_labels(t, labels);
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x : labels) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = true;
  }
  int next = 1;
  for (const auto& t : f) {
    if (!intervals_ok(t)) return false;
    auto [lo, hi] = subtree_interval(t);
    if (lo != next) return false;  // components must tile 1..n in order
    next = hi + 1;
  }
  return next == n + 1;
}

namespace {

std::vector<NifForest> forests_on(int a, int b);

std::vector<NifNode> trees_on(int a, int b) {
  std::vector<NifNode> out;
  for (int r = a; r <= b; ++r)
    for (const auto& lf : forests_on(a, r - 1))
      for (const auto& rf : forests_on(r + 1, b)) {
        NifNode t;
        t.label = r;
        t.children = lf;
        t.children.insert(t.children.end(), rf.begin(), rf.end());
        out.push_back(std::move(t));
      }
  return out;
}

std::vector<NifForest> forests_on(int a, int b) {
  if (a > b) return {NifForest{}};
  std::vector<NifForest> out;
  for (int c = a; c <= b; ++c)
    for (const auto& first : trees_on(a, c))
      for (const auto& rest : forests_on(c + 1, b)) {
        NifForest f{first};
        f.insert(f.end(), rest.begin(), rest.end());
        out.push_back(std::move(f));
      }
  return out;
}

}  // namespace

std::vector<NifForest> enumerate_nif(int n) {
  if (n < 0) throw InvalidInputError("negative size");
  return forests_on(1, n);
}

std::vector<NifNode> enumerate_nit(int n) {
  if (n < 1) throw InvalidInputError("tree needs at least one node");
  return trees_on(1, n);
}

namespace {

void collect_chords(const NifNode& t, std::set<std::pair<int, int>>& edges) {
  auto [lo, hi] = subtree_interval(t);
  edges.emplace(lo - 1, hi);
  for (const auto& c : t.children) collect_chords(c, edges);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<size_t>(ra)] = rb;
    return true;
  }
};

}  // namespace

bool validate_nct(const NonCrossingTree& t) {
  if (t.n < 0 || static_cast<int>(t.edges.size()) != t.n) return false;
  UnionFind uf(t.n + 1);
  for (const auto& [a, b] : t.edges) {
    if (a < 0 || b > t.n || a >= b) return false;
    if (!uf.unite(a, b)) return false;  // cycle
  }
  for (const auto& e : t.edges)
    for (const auto& f : t.edges) {
      if (e >= f) continue;
      auto [a, b] = e;
      auto [c, d] = f;
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  return true;  // n edges, no cycle => spanning
}

NonCrossingTree nif_to_nct(const NifForest& f) {
  if (!validate_nif(f)) throw InvalidInputError("not a non-interleaving forest");
  NonCrossingTree t;
  t.n = nif_size(f);
  for (const auto& c : f) collect_chords(c, t.edges);
  return t;
}

NifForest nct_to_nif(const NonCrossingTree& t) {
  if (!validate_nct(t)) throw InvalidInputError("not a non-crossing spanning tree");
  // chord (a,b) carries the label interval [a+1, b]; non-crossing makes the
  // family laminar, so nesting builds the forest
  std::vector<std::pair<int, int>> ivals;
  ivals.reserve(t.edges.size());
  for (const auto& [a, b] : t.edges) ivals.emplace_back(a + 1, b);
  std::sort(ivals.begin(), ivals.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second > y.second;  // outer interval first
  });
  std::vector<NifNode> nodes(ivals.size());
  std::vector<std::vector<size_t>> kids(ivals.size());
  std::vector<size_t> stack;
  std::vector<size_t> roots;
  for (size_t i = 0; i < ivals.size(); ++i) {
    while (!stack.empty() && ivals[stack.back()].second < ivals[i].first)
      stack.pop_back();
    if (!stack.empty()) {
      if (ivals[i].second > ivals[stack.back()].second)
        throw InvalidInputError("chord intervals are not laminar");
      kids[stack.back()].push_back(i);
    } else {
      roots.push_back(i);
    }
    stack.push_back(i);
  }
  // each node's label is the unique point of its interval no child covers
  auto build = [&](auto&& self, size_t i) -> NifNode {
    NifNode out;
    std::vector<bool> covered(
        static_cast<size_t>(ivals[i].second - ivals[i].first + 1), false);
    for (size_t k : kids[i]) {
      out.children.push_back(self(self, k));
      for (int x = ivals[k].first; x <= ivals[k].second; ++x)
        covered[static_cast<size_t>(x - ivals[i].first)] = true;
    }
    int label = 0, free_points = 0;
    for (int x = ivals[i].first; x <= ivals[i].second; ++x)
      if (!covered[static_cast<size_t>(x - ivals[i].first)]) {
        ++free_points;
        label = x;
      }
    if (free_points != 1)
      throw InvalidInputError("chord set does not define unique node labels");
    out.label = label;
    return out;
  };
  NifForest f;
  for (size_t r : roots) f.push_back(build(build, r));
  if (!validate_nif(f))
    throw InvalidInputError("chord set does not assemble into a forest");
  return f;
}

namespace {
void collect_forms(const NifNode& t, std::vector<LinearForm>& denom) {
  auto [lo, hi] = subtree_interval(t);
  denom.push_back(LinearForm::sum_range(lo, hi));
  for (const auto& c : t.children) collect_forms(c, denom);
}
}  // namespace

RatMould nif_mould(const NifForest& f) {
  if (!validate_nif(f)) throw InvalidInputError("not a non-interleaving forest");
  FractionTerm<Rational> term;
  term.coeff = Rational(1);
  for (const auto& t : f) collect_forms(t, term.denom);
  return RatMould(nif_size(f), {std::move(term)});
}

std::set<Permutation> linear_extensions(const NifForest& f) {
  if (!validate_nif(f)) throw InvalidInputError("not a non-interleaving forest");
  int n = nif_size(f);
  // parent pointers and pending-children counts drive the topological walk
  std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
  std::vector<int> pending(static_cast<size_t>(n) + 1, 0);
  auto scan = [&](auto&& self, const NifNode& t) -> void {
    pending[static_cast<size_t>(t.label)] =
        static_cast<int>(t.children.size());
    for (const auto& c : t.children) {
      parent[static_cast<size_t>(c.label)] = t.label;
      self(self, c);
    }
  };
  for (const auto& t : f) scan(scan, t);
  std::set<Permutation> out;
  Permutation word;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == n) {
      out.insert(word);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (pending[static_cast<size_t>(v)] != 0) continue;
      pending[static_cast<size_t>(v)] = -1;  // placed
      int p = parent[static_cast<size_t>(v)];
      if (p) --pending[static_cast<size_t>(p)];
      word.push_back(v);
      self(self);
      word.pop_back();
      if (p) ++pending[static_cast<size_t>(p)];
      pending[static_cast<size_t>(v)] = 0;
    }
  };
  rec(rec);
  return out;
}

namespace {

// all results of one right rotation somewhere in t
void rotations_up(const BinaryTree& t, std::vector<BinaryTree>& out) {
  if (t.is_leaf()) return;
  const BinaryTree& l = t.left();
  const BinaryTree& r = t.right();
  if (!l.is_leaf())
    out.push_back(BinaryTree::node(l.left(), BinaryTree::node(l.right(), r)));
  std::vector<BinaryTree> sub;
  rotations_up(l, sub);
  for (auto& s : sub) out.push_back(BinaryTree::node(s, r));
  sub.clear();
  rotations_up(r, sub);
  for (auto& s : sub) out.push_back(BinaryTree::node(l, s));
}

}  // namespace

TamariOrder::TamariOrder(int n) : trees_(enumerate_trees(n)) {
  for (size_t i = 0; i < trees_.size(); ++i) index_[trees_[i]] = i;
  size_t m = trees_.size();
  leq_.assign(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i) {
    // breadth-first closure upward from trees_[i]
    std::vector<size_t> frontier{i};
    leq_[i][i] = true;
    while (!frontier.empty()) {
      std::vector<size_t> next;
      for (size_t j : frontier) {
        std::vector<BinaryTree> ups;
        rotations_up(trees_[j], ups);
        for (const auto& u : ups) {
          size_t k = index_.at(u);
          if (!leq_[i][k]) {
            leq_[i][k] = true;
            next.push_back(k);
          }
        }
      }
      frontier = std::move(next);
    }
  }
}

bool TamariOrder::leq(const BinaryTree& a, const BinaryTree& b) const {
  auto ia = index_.find(a);
  auto ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end())
    throw InvalidInputError("tree size does not match this Tamari order");
  return leq_[ia->second][ib->second];
}

long TamariOrder::interval_count() const {
  long count = 0;
  for (const auto& row : leq_)
    for (bool v : row) count += v ? 1 : 0;
  return count;
}

TamariIntervalReport tamari_interval_of(const NifForest& f) {
  int n = nif_size(f);
  std::set<Permutation> exts = linear_extensions(f);
  TamariIntervalReport rep;
  for (const auto& sigma : exts)
    rep.shapes.insert(decreasing_tree_shape(inverse_perm(sigma)));
  // weak-order extremes: inversion sets of all extensions are intersected
  // and united; the extensions realizing those sets are the endpoints
  std::set<std::pair<int, int>> inter, uni;
  bool first = true;
  std::map<Permutation, std::set<std::pair<int, int>>> inv;
  for (const auto& sigma : exts) {
    auto s = inversion_pairs(sigma);
    if (first) {
      inter = s;
      first = false;
    } else {
      std::set<std::pair<int, int>> tmp;
      std::set_intersection(inter.begin(), inter.end(), s.begin(), s.end(),
                            std::inserter(tmp, tmp.begin()));
      inter = std::move(tmp);
    }
    uni.insert(s.begin(), s.end());
    inv.emplace(sigma, std::move(s));
  }
  bool have_min = false, have_max = false;
  for (const auto& [sigma, s] : inv) {
    if (s == inter) {
      rep.sigma_min = sigma;
      have_min = true;
    }
    if (s == uni) {
      rep.sigma_max = sigma;
      have_max = true;
    }
  }
  if (!have_min || !have_max)
    throw InvalidInputError("linear extensions are not a weak-order interval");
  rep.tmin = decreasing_tree_shape(inverse_perm(rep.sigma_min));
  rep.tmax = decreasing_tree_shape(inverse_perm(rep.sigma_max));
  rep.min_avoids_312 = avoids_pattern(rep.sigma_min, {3, 1, 2});
  rep.max_avoids_132 = avoids_pattern(rep.sigma_max, {1, 3, 2});
  TamariOrder order(n);
  std::set<BinaryTree> box;
  for (const auto& t : order.trees())
    if (order.leq(rep.tmin, t) && order.leq(t, rep.tmax)) box.insert(t);
  rep.is_interval = (box == rep.shapes);
  return rep;
}

namespace {

NifNode shift_labels(const NifNode& t, int offset) {
  NifNode r;
  r.label = t.label + offset;
  for (const auto& c : t.children) r.children.push_back(shift_labels(c, offset));
  return r;
}

void require_nit(const NifNode& t) {
  if (!validate_nif(NifForest{t}))
    throw InvalidInputError("operand is not a non-interleaving tree");
}

}  // namespace

NifNode lalg_prec(const NifNode& t1, const NifNode& t2) {
  require_nit(t1);
  require_nit(t2);
  NifNode r = t1;
  r.children.push_back(shift_labels(t2, subtree_count(t1)));
  sort_children(r);
  return r;
}

NifNode lalg_succ(const NifNode& t1, const NifNode& t2) {
  require_nit(t1);
  require_nit(t2);
  NifNode r = shift_labels(t2, subtree_count(t1));
  r.children.push_back(t1);
  sort_children(r);
  return r;
}

// bicolored complete binary trees with n leaves avoiding a right edge from a
// succ-colored node down to a prec-colored node
Integer lalg_basis_count(int n) {
  if (n < 1) throw InvalidInputError("basis count needs n >= 1");
  std::vector<Integer> total(static_cast<size_t>(n) + 1, Integer(0));
  std::vector<Integer> succ(static_cast<size_t>(n) + 1, Integer(0));
  total[1] = 1;  // bare leaf
  for (int m = 2; m <= n; ++m) {
    Integer cp(0), cs(0);
    for (int i = 1; i < m; ++i) {
      int j = m - i;
      cp += total[static_cast<size_t>(i)] * total[static_cast<size_t>(j)];
      Integer right_ok = (j == 1) ? Integer(1) : succ[static_cast<size_t>(j)];
      cs += total[static_cast<size_t>(i)] * right_ok;
    }
    succ[static_cast<size_t>(m)] = cs;
    total[static_cast<size_t>(m)] = cp + cs;
  }
  return total[static_cast<size_t>(n)];
}

}  // namespace moulds
