#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "balexp/words.hpp"

using namespace balexp::words;

namespace {

// Classical Fibonacci word prefix, a convenient aperiodic test text.
const Word kFib = "abaababaabaababaababaabaababaab";

Word random_word(std::mt19937& rng, std::size_t len, int letters) {
  std::uniform_int_distribution<int> d(0, letters - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w += static_cast<char>('a' + d(rng));
  return w;
}

std::vector<std::size_t> occurrences_naive(WordView text, WordView pat) {
  std::vector<std::size_t> out;
  if (pat.size() > text.size()) return out;
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i) {
    if (text.substr(i, pat.size()) == pat) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("parikh counts letters") {
  auto p = parikh("abaab");
  CHECK(p.size() == 2);
  CHECK(p['a'] == 3);
  CHECK(p['b'] == 2);
  CHECK(parikh("").empty());
}

TEST_CASE("parikh is additive under concatenation") {
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    Word u = random_word(rng, 20, 3), v = random_word(rng, 30, 3);
    auto pu = parikh(u), pv = parikh(v), puv = parikh(u + v);
    for (auto& [c, n] : pv) pu[c] += n;
    CHECK(pu == puv);
  }
}

TEST_CASE("occurrences: frozen cases") {
  CHECK(occurrences("abaab", "a") == std::vector<std::size_t>{0, 2, 3});
  CHECK(occurrences("aaaa", "aa") == std::vector<std::size_t>{0, 1, 2});
  CHECK(occurrences("abc", "d").empty());
  CHECK(occurrences("ab", "") == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("occurrences agrees with the naive scan") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    Word text = random_word(rng, 200, 2);
    Word pat = random_word(rng, 1 + it % 5, 2);
    CHECK(occurrences(text, pat) == occurrences_naive(text, pat));
  }
}

TEST_CASE("return words of a bispecial factor of the Fibonacci word") {
  // The two return words of abaaba, in order of first appearance.
  auto rw = return_words_bruteforce(kFib, "abaaba");
  CHECK(rw == std::vector<Word>{"abaab", "aba"});
  CHECK_THROWS_AS(return_words_bruteforce("abc", "ab"), std::invalid_argument);
}

TEST_CASE("max_fractional_power: frozen cases") {
  auto p = max_fractional_power("aaaa", 4);
  CHECK(p.root == "a");
  CHECK(p.exponent == mpq_class(4));

  p = max_fractional_power("ababa", 5);
  CHECK(p.root == "ab");
  CHECK(p.exponent == mpq_class(5, 2));
  CHECK(p.position == 0);
  CHECK(p.length == 5);

  // Tie on the exponent: the shortest root wins.
  p = max_fractional_power("aabaab", 6);
  CHECK(p.exponent == mpq_class(2));
  CHECK(p.root == "a");
  CHECK(p.position == 0);

  CHECK_THROWS_AS(max_fractional_power("", 1), std::invalid_argument);
}

TEST_CASE("max_fractional_power finds planted cubes") {
  std::mt19937 rng(13);
  for (int it = 0; it < 30; ++it) {
    Word w = random_word(rng, 3 + it % 4, 3);
    Word text = random_word(rng, 10, 3) + w + w + w + random_word(rng, 10, 3);
    auto p = max_fractional_power(text, text.size() / 2);
    CHECK(p.exponent >= 3);
  }
}

TEST_CASE("exponent never decreases on longer prefixes") {
  mpq_class prev = 0;
  for (std::size_t n : {8u, 16u, 24u, 31u}) {
    auto p = max_fractional_power(kFib.substr(0, n), n / 2);
    CHECK(p.exponent >= prev);
    prev = p.exponent;
  }
}

TEST_CASE("factor_set: frozen cases") {
  CHECK(factor_set("banana", 3) == std::set<Word>{"ana", "ban", "nan"});
  CHECK(factor_set("abc", 0) == std::set<Word>{""});
  CHECK(factor_set("abc", 5).empty());
}

TEST_CASE("bispecials of the Fibonacci prefix are palindromic prefixes") {
  auto bs = bispecials_bruteforce(kFib, 8);
  auto has = [&](const Word& w) {
    return std::find(bs.begin(), bs.end(), w) != bs.end();
  };
  CHECK(has(""));
  CHECK(has("a"));
  CHECK(has("aba"));
  CHECK(has("abaaba"));
  for (const auto& w : bs) {
    CHECK(Word(w.rbegin(), w.rend()) == w);   // palindrome
    CHECK(kFib.substr(0, w.size()) == w);     // prefix
  }
}

TEST_CASE("extension graph of a Sturmian bispecial is a tree") {
  auto eg = extension_graph(kFib, "aba");
  CHECK(eg.left == std::vector<char>{'a', 'b'});
  CHECK(eg.right == std::vector<char>{'a', 'b'});
  CHECK(eg.edges == std::set<std::pair<char, char>>{
                        {'a', 'a'}, {'a', 'b'}, {'b', 'a'}});
  CHECK(eg.is_tree());
}

TEST_CASE("extension graph with a cycle is not a tree") {
  auto eg = extension_graph("aaababbaa", "a");
  CHECK(eg.edges.size() == 4);
  CHECK_FALSE(eg.is_tree());
}
