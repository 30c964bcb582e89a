#include "balexp/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace balexp::words {

std::map<char, std::size_t> parikh(WordView w) {
  std::map<char, std::size_t> counts;
  for (char c : w) ++counts[c];
  return counts;
}

std::vector<std::size_t> occurrences(WordView text, WordView pattern) {
  std::vector<std::size_t> pos;
  if (pattern.empty()) {
    pos.resize(text.size() + 1);
    for (std::size_t i = 0; i <= text.size(); ++i) pos[i] = i;
    return pos;
  }
  std::size_t from = 0;
  while (from + pattern.size() <= text.size()) {
    std::size_t i = text.find(pattern, from);
    if (i == WordView::npos) break;
    pos.push_back(i);
    from = i + 1;
  }
  return pos;
}

std::vector<Word> return_words_bruteforce(WordView text, WordView w) {
  std::vector<std::size_t> pos = occurrences(text, w);
  if (pos.size() < 2) {
    throw std::invalid_argument(
        "return_words_bruteforce: pattern occurs fewer than twice");
  }
  std::vector<Word> result;
  std::set<WordView> seen;
  for (std::size_t t = 0; t + 1 < pos.size(); ++t) {
    WordView r = text.substr(pos[t], pos[t + 1] - pos[t]);
    if (seen.insert(r).second) result.emplace_back(r);
  }
  return result;
}

FractionalPower max_fractional_power(WordView text, std::size_t max_root_len) {
  if (text.empty()) {
    throw std::invalid_argument("max_fractional_power: empty text");
  }
  const std::size_t n = text.size();
  FractionalPower best{Word(1, text[0]), mpq_class(1), 0, 1};

  for (std::size_t r = 1; r <= std::min(max_root_len, n); ++r) {
    // For fixed root length r, a maximal run of positions p with
    // text[p] == text[p - r] spanning [s, s + t) yields the factor
    // z = text[s - r .. s + t) of exponent (r + t) / r; the longest run
    // dominates every shorter one, and among equal runs the leftmost wins.
    std::size_t run = 0;
    std::size_t best_t = 0, best_s = r;
    for (std::size_t p = r; p < n; ++p) {
      run = (text[p] == text[p - r]) ? run + 1 : 0;
      if (run > best_t) {
        best_t = run;
        best_s = p + 1 - run;
      }
    }
    mpq_class e(static_cast<unsigned long>(r + best_t),
                static_cast<unsigned long>(r));
    e.canonicalize();
    if (e > best.exponent) {
      best = {Word(text.substr(best_s - r, r)), e, best_s - r, r + best_t};
    }
  }
  return best;
}

std::set<Word> factor_set(WordView text, std::size_t n) {
  std::set<Word> factors;
  if (n > text.size()) return factors;
  for (std::size_t i = 0; i + n <= text.size(); ++i) {
    factors.emplace(text.substr(i, n));
  }
  return factors;
}

namespace {

struct Extensions {
  std::set<char> left, right;
};

// Extension sets of every factor of length <= max_len, observed inside text.
std::map<Word, Extensions> all_extensions(WordView text, std::size_t max_len) {
  std::map<Word, Extensions> ext;
  for (std::size_t len = 0; len <= std::min(max_len, text.size()); ++len) {
    for (std::size_t i = 0; i + len <= text.size(); ++i) {
      auto& e = ext[Word(text.substr(i, len))];
      if (i > 0) e.left.insert(text[i - 1]);
      if (i + len < text.size()) e.right.insert(text[i + len]);
    }
  }
  return ext;
}

}  // namespace

std::vector<Word> bispecials_bruteforce(WordView text, std::size_t max_len) {
  std::vector<Word> result;
  for (auto& [w, e] : all_extensions(text, max_len)) {
    if (e.left.size() >= 2 && e.right.size() >= 2) result.push_back(w);
  }
  std::sort(result.begin(), result.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return result;
}

bool ExtensionGraph::is_tree() const {
  const std::size_t vertices = left.size() + right.size();
  if (vertices == 0 || edges.size() != vertices - 1) return false;

  // Union-find over left letters (index in `left`) and right letters
  // (offset by left.size()).
  std::vector<std::size_t> parent(vertices);
  for (std::size_t i = 0; i < vertices; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index_left = [&](char c) {
    return static_cast<std::size_t>(
        std::find(left.begin(), left.end(), c) - left.begin());
  };
  auto index_right = [&](char c) {
    return left.size() + static_cast<std::size_t>(std::find(right.begin(),
                                                            right.end(), c) -
                                                  right.begin());
  };
  std::size_t components = vertices;
  for (auto& [a, b] : edges) {
    std::size_t x = find(index_left(a)), y = find(index_right(b));
    if (x == y) return false;  // cycle
    parent[x] = y;
    --components;
  }
  return components == 1;
}

ExtensionGraph extension_graph(WordView text, WordView w) {
  ExtensionGraph g;
  std::set<char> left, right;
  for (std::size_t i : occurrences(text, w)) {
    if (i > 0) left.insert(text[i - 1]);
    if (i + w.size() < text.size()) right.insert(text[i + w.size()]);
    if (i > 0 && i + w.size() < text.size()) {
      g.edges.emplace(text[i - 1], text[i + w.size()]);
    }
  }
  g.left.assign(left.begin(), left.end());
  g.right.assign(right.begin(), right.end());
  return g;
}

}  // namespace balexp::words
