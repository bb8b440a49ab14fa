#ifndef MOULDS_NCT_HPP
#define MOULDS_NCT_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "moulds/mould.hpp"
#include "moulds/permutation.hpp"
#include "moulds/power_series.hpp"
#include "moulds/tree.hpp"

namespace moulds {

// Labeled rooted tree in which every subtree's label set is an integer
// interval. Children are kept sorted by the start of their interval.
struct NifNode {
  int label = 0;
  std::vector<NifNode> children;

  bool operator==(const NifNode& o) const {
    return label == o.label && children == o.children;
  }
  bool operator!=(const NifNode& o) const { return !(*this == o); }
  bool operator<(const NifNode& o) const {
    if (label != o.label) return label < o.label;
    return children < o.children;
  }
};

// components in increasing label-interval order
using NifForest = std::vector<NifNode>;

int nif_size(const NifForest& f);
std::pair<int, int> subtree_interval(const NifNode& t);  // [min,max] labels

std::string nif_str(const NifForest& f);
NifForest nif_parse(const std::string& text);  // syntax only; validate separately

bool validate_nif(const NifForest& f);
std::vector<NifForest> enumerate_nif(int n);
std::vector<NifNode> enumerate_nit(int n);  // single-component forests

// spanning tree on the vertices 0..n of a polygon, chords (a,b) with a < b
struct NonCrossingTree {
  int n = 0;  // number of chords; vertices run 0..n
  std::set<std::pair<int, int>> edges;

  bool operator==(const NonCrossingTree& o) const {
    return n == o.n && edges == o.edges;
  }
};

bool validate_nct(const NonCrossingTree& t);

// node with subtree interval [a,b]  <->  chord (a-1, b)
NonCrossingTree nif_to_nct(const NifForest& f);
NifForest nct_to_nif(const NonCrossingTree& t);

// product over nodes of 1/(sum of u_j over the node's subtree)
RatMould nif_mould(const NifForest& f);

// words listing all labels with every node after its children
std::set<Permutation> linear_extensions(const NifForest& f);

// Tamari order on binary trees with n internal nodes; covers are single
// right rotations (A^B)^C -> A^(B^C)
class TamariOrder {
 public:
  explicit TamariOrder(int n);
  const std::vector<BinaryTree>& trees() const { return trees_; }
  bool leq(const BinaryTree& a, const BinaryTree& b) const;
  long interval_count() const;

 private:
  std::vector<BinaryTree> trees_;
  std::map<BinaryTree, size_t> index_;
  std::vector<std::vector<bool>> leq_;  // leq_[i][j] : trees_[i] <= trees_[j]
};

struct TamariIntervalReport {
  std::set<BinaryTree> shapes;  // sylvester shapes of the linear extensions
  BinaryTree tmin, tmax;
  Permutation sigma_min, sigma_max;  // weak-order extremes of the extensions
  bool is_interval = false;
  bool min_avoids_312 = false;
  bool max_avoids_132 = false;
};

TamariIntervalReport tamari_interval_of(const NifForest& f);

// L-algebra half-products on single-component forests: labels of t2 are
// shifted past t1, then one root is grafted under the other
NifNode lalg_prec(const NifNode& t1, const NifNode& t2);
NifNode lalg_succ(const NifNode& t1, const NifNode& t2);
Integer lalg_basis_count(int n);

}  // namespace moulds

#endif
