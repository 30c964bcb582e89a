// Finite-word primitives: Parikh vectors, occurrences, return words,
// fractional powers, bispecial factors and extension graphs.
//
// Words are byte strings; each byte is one letter. Multi-character letter
// names exist only at the serialization boundary (see colouring.hpp).
// Everything in this header is computed directly from an explicit word, so
// these routines double as the brute-force oracle for the closed-form layers.

#ifndef BALEXP_WORDS_HPP
#define BALEXP_WORDS_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace balexp::words {

using Word = std::string;
using WordView = std::string_view;

// Letter -> number of occurrences. Letters absent from w are absent from the map.
std::map<char, std::size_t> parikh(WordView w);

// All (overlapping) occurrence positions of pattern in text, 0-based, increasing.
// The empty pattern occurs at every position 0..|text|.
std::vector<std::size_t> occurrences(WordView text, WordView pattern);

// Return words of w in text: the distinct words text[i..j) for consecutive
// occurrences i < j of w, in order of first appearance.
// Throws std::invalid_argument when w occurs fewer than twice.
std::vector<Word> return_words_bruteforce(WordView text, WordView w);

// A factor z of the text equal to a fractional power root^exponent with
// exponent = |z| / |root| >= 1.
struct FractionalPower {
  Word root;
  mpq_class exponent;
  std::size_t position = 0;  // start of z in the text
  std::size_t length = 0;    // |z|
};

// Maximal exponent over all factors z = x^e with 1 <= |x| <= max_root_len.
// Ties are broken toward the shortest root, then the leftmost occurrence.
// O(|text| * max_root_len). Throws std::invalid_argument on empty text.
FractionalPower max_fractional_power(WordView text, std::size_t max_root_len);

// Distinct factors of the given length (the whole factor set if n > |text|
// yields the empty set; n == 0 yields {""}).
std::set<Word> factor_set(WordView text, std::size_t n);

// Factors w with |w| <= max_len having at least two left and two right
// extensions inside the text (the empty word qualifies when the text uses at
// least two letters). Sorted by length, then lexicographically.
std::vector<Word> bispecials_bruteforce(WordView text, std::size_t max_len);

// Bipartite extension graph of w observed in text: left letters a with aw a
// factor, right letters b with wb a factor, and edges (a, b) for awb.
struct ExtensionGraph {
  std::vector<char> left;
  std::vector<char> right;
  std::set<std::pair<char, char>> edges;

  // Connected with #edges == #vertices - 1, viewed as an undirected
  // bipartite graph on the disjoint union of left and right letters.
  bool is_tree() const;
};

ExtensionGraph extension_graph(WordView text, WordView w);

}  // namespace balexp::words

#endif  // BALEXP_WORDS_HPP
