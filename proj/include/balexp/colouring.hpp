// Colouring of Sturmian sequences by constant gap sequences. A recurrent
// aperiodic balanced sequence is exactly colour(u, y, y'): the standard
// Sturmian sequence u of some slope with every 'a' replaced by the next
// letter of y and every 'b' by the next letter of y'. The projection pi maps
// the coloured sequence back to u. This module also carries the structural
// closed forms: preimage counts, the dendric threshold, factor complexity
// and return word counts.

#ifndef BALEXP_COLOURING_HPP
#define BALEXP_COLOURING_HPP

#include <cstddef>
#include <string>

#include "balexp/constant_gap.hpp"
#include "balexp/sturmian.hpp"
#include "balexp/words.hpp"

namespace balexp::colouring {

using constant_gap::ConstantGapSeq;
using sturmian::Slope;
using words::Word;
using words::WordView;

// A balanced sequence: slope + the two colouring sequences. y colours 'a'
// (the less frequent letter), yp colours 'b'. Alphabets must be disjoint;
// shifts rotate the colouring start and satisfy 0 <= shift < Per.
class BalancedSpec {
 public:
  BalancedSpec(Slope slope, ConstantGapSeq y, ConstantGapSeq yp,
               long shift_y = 0, long shift_yp = 0);

  // JSON object with fields slope (string, as Slope::parse), y, yp (letter
  // strings), and optional shift_y, shift_yp. Throws ValidationError.
  static BalancedSpec parse(const std::string& json_text);
  std::string render() const;

  const Slope& slope() const { return slope_; }
  const ConstantGapSeq& y() const { return y_; }
  const ConstantGapSeq& yp() const { return yp_; }
  long shift_y() const { return shift_y_; }
  long shift_yp() const { return shift_yp_; }

  bool is_y_letter(char c) const { return y_.letter_gaps().count(c) != 0; }
  bool is_yp_letter(char c) const { return yp_.letter_gaps().count(c) != 0; }
  // Per(y) * Per(yp), the constant of the structural formulas.
  long per_product() const { return y_.per() * yp_.per(); }

 private:
  Slope slope_;
  ConstantGapSeq y_, yp_;
  long shift_y_, shift_yp_;
};

// First `length` letters of the balanced sequence.
Word colour_prefix(const BalancedSpec& spec, std::size_t length);

// Letterwise projection: y-letters to 'a', yp-letters to 'b'. A morphism.
// Throws ValidationError on a letter from neither alphabet.
Word project(const BalancedSpec& spec, WordView v);

struct StructuralCount {
  long value = 0;
  // True when |u|_a > beta(y) and |u|_b > beta(yp), the regime where the
  // count is the constant given by the closed formula.
  bool long_regime = false;
};

// Number of coloured copies of a base-language factor u with the given
// Parikh counts: complexity_y(|u|_a) * complexity_yp(|u|_b). In the long
// regime this is Per(y) * Per(yp).
StructuralCount preimage_count(const BalancedSpec& spec, WordView u);

// Smallest n such that every base factor of length n has more than beta(y)
// a's and more than beta(yp) b's; from there on extension graphs of coloured
// factors are trees and the complexity is affine.
long dendric_threshold(const BalancedSpec& spec);

// Factor complexity of the balanced sequence. For n >= dendric_threshold the
// closed form Per(y) * Per(yp) * (n + 1); below, the exact sum of preimage
// counts over the n + 1 base factors (long_regime false).
StructuralCount complexity(const BalancedSpec& spec, long n);

// Number of return words to a coloured copy of u: 1 + Per(y) * Per(yp) when
// u is in the long regime. Outside it the formula does not apply and value
// is meaningless (long_regime false, value 0).
StructuralCount return_word_count(const BalancedSpec& spec, WordView u);

}  // namespace balexp::colouring

#endif  // BALEXP_COLOURING_HPP
