#ifndef MOULDS_PERMUTATION_HPP
#define MOULDS_PERMUTATION_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace moulds {

// one-line notation, values 1..n
using Permutation = std::vector<int>;
using Word = std::vector<int>;

bool is_permutation(const Word& w);
Permutation inverse_perm(const Permutation& p);
std::vector<Permutation> all_permutations(int n);
Permutation identity_perm(int n);

int descent_number(const Permutation& p);   // #{i : p_i > p_{i+1}}
int major_index(const Permutation& p);      // sum of descent positions
int saillance_count(const Permutation& p);  // left-to-right maxima

// value pairs (a, b) with a < b and b appearing before a
std::set<std::pair<int, int>> inversion_pairs(const Word& w);

// classical pattern containment (pattern given in one-line notation)
bool contains_pattern(const Word& w, const Word& pattern);
inline bool avoids_pattern(const Word& w, const Word& pattern) {
  return !contains_pattern(w, pattern);
}

// all interleavings of two words with disjoint letters (OverlapError otherwise)
std::vector<Word> shuffle(const Word& a, const Word& b);

// permutations shaped (strictly decreasing)(1)(strictly increasing);
// exactly the descent sets {1,...,d}, one permutation per subset of {2..n}
std::vector<Permutation> valley_permutations(int n);

std::string perm_str(const Permutation& p);       // "2413", commas past n = 9
Permutation parse_perm(const std::string& text);  // accepts both spellings

}  // namespace moulds

#endif
