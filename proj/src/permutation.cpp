#include "moulds/permutation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "moulds/errors.hpp"

namespace moulds {

bool is_permutation(const Word& w) {
  int n = static_cast<int>(w.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x : w) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = true;
  }
  return true;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation inv(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    inv[static_cast<size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

Permutation identity_perm(int n) {
  Permutation p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p = identity_perm(n);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int descent_number(const Permutation& p) {
  int d = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) ++d;
  return d;
}

int major_index(const Permutation& p) {
  int maj = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) maj += static_cast<int>(i) + 1;
  return maj;
}

int saillance_count(const Permutation& p) {
  int count = 0, best = 0;
  for (int x : p)
    if (x > best) {
      best = x;
      ++count;
    }
  return count;
}

std::set<std::pair<int, int>> inversion_pairs(const Word& w) {
  std::set<std::pair<int, int>> inv;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) inv.insert({w[j], w[i]});
  return inv;
}

bool contains_pattern(const Word& w, const Word& pattern) {
  size_t k = pattern.size();
  if (k == 0) return true;
  if (w.size() < k) return false;
  std::vector<size_t> idx(k, 0);
  // enumerate increasing index tuples; fine for the length-3 patterns used here
  std::function<bool(size_t, size_t)> rec = [&](size_t depth, size_t start) {
    if (depth == k) {
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b)
          if ((pattern[a] < pattern[b]) != (w[idx[a]] < w[idx[b]])) return false;
      return true;
    }
    for (size_t i = start; i + (k - depth) <= w.size(); ++i) {
      idx[depth] = i;
      if (rec(depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

std::vector<Word> shuffle(const Word& a, const Word& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) throw OverlapError("shuffle operands share the letter " + std::to_string(x));
  std::vector<Word> out;
  Word current;
  current.reserve(a.size() + b.size());
  std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
    if (i == a.size() && j == b.size()) {
      out.push_back(current);
      return;
    }
    if (i < a.size()) {
      current.push_back(a[i]);
      rec(i + 1, j);
      current.pop_back();
    }
    if (j < b.size()) {
      current.push_back(b[j]);
      rec(i, j + 1);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Permutation> valley_permutations(int n) {
  std::vector<Permutation> out;
  int subsets = 1 << (n - 1);
  for (int mask = 0; mask < subsets; ++mask) {
    Permutation w;
    for (int x = n; x >= 2; --x)
      if (mask & (1 << (x - 2))) w.push_back(x);
    w.push_back(1);
    for (int x = 2; x <= n; ++x)
      if (!(mask & (1 << (x - 2)))) w.push_back(x);
    out.push_back(std::move(w));
  }
  return out;
}

std::string perm_str(const Permutation& p) {
  std::ostringstream os;
  if (p.size() <= 9) {
    for (int x : p) os << x;
  } else {
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) os << ',';
      os << p[i];
    }
  }
  return os.str();
}

Permutation parse_perm(const std::string& text) {
  if (text.empty()) throw ParseError("empty permutation");
  Permutation p;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ParseError("bad digit in permutation: " + text);
      p.push_back(ch - '0');
    }
  } else {
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
      try {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        p.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad entry in permutation: " + item);
      }
    }
  }
  if (!is_permutation(p)) throw ParseError("not a permutation of 1..n: " + text);
  return p;
}

}  // namespace moulds
