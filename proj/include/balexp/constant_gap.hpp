// Constant gap sequences: periodic sequences in which every letter recurs at
// a fixed distance. They are the colouring material for balanced sequences;
// the quantities exposed here (Per, letter gaps, gap sets, beta) drive the
// congruence conditions and short-factor bounds of the exponent machinery.

#ifndef BALEXP_CONSTANT_GAP_HPP
#define BALEXP_CONSTANT_GAP_HPP

#include <map>
#include <set>
#include <vector>

#include "balexp/words.hpp"

namespace balexp::constant_gap {

using words::Word;
using words::WordView;

class ConstantGapSeq {
 public:
  // Validates that word^omega has a constant gap for every letter. The word
  // may be any whole number of minimal periods. Throws ValidationError with
  // a witness letter otherwise.
  static ConstantGapSeq validate(WordView word);

  // One minimal period, in the rotation the input started with.
  const Word& period_word() const { return period_; }
  long per() const { return static_cast<long>(period_.size()); }
  const std::map<char, long>& letter_gaps() const { return letter_gaps_; }
  // Length of the longest bispecial factor of the periodic language (0 when
  // only the empty word, or nothing at all, is bispecial).
  long beta() const { return beta_; }

  // Letter at position i of the infinite sequence.
  char at(std::size_t i) const { return period_[i % period_.size()]; }

  bool is_factor(WordView u) const;

  // lcm of the letter gaps occurring in u; gap(epsilon) = 1.
  // Throws ValidationError when u is not a factor.
  long gap_of_factor(WordView u) const;

  // { gap_of_factor(u) : u factor of length n }; equals {per} for n > beta.
  std::set<long> gap_set(long n) const;

  // Number of distinct factors of length n; equals per for all n >= per.
  long complexity(long n) const;

 private:
  explicit ConstantGapSeq(Word period);

  Word period_;
  std::map<char, long> letter_gaps_;
  long beta_ = 0;
  std::vector<std::set<long>> gap_sets_;   // index n = 0..per
  std::vector<long> complexities_;         // index n = 0..per
};

}  // namespace balexp::constant_gap

#endif  // BALEXP_CONSTANT_GAP_HPP
