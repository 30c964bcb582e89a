#include "balexp/constant_gap.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "balexp/errors.hpp"

namespace balexp::constant_gap {

namespace {

std::size_t minimal_period(WordView w) {
  // The periods of an infinite periodic sequence are closed under gcd, so
  // the minimal one divides |w|; period d <=> rotating by d fixes w.
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < w.size() && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return d;
  }
  return w.size();
}

}  // namespace

ConstantGapSeq ConstantGapSeq::validate(WordView word) {
  if (word.empty()) throw ValidationError("constant gap: empty period");
  Word period(word.substr(0, minimal_period(word)));

  std::map<char, std::vector<long>> positions;
  for (std::size_t i = 0; i < period.size(); ++i) {
    positions[period[i]].push_back(static_cast<long>(i));
  }
  const long per = static_cast<long>(period.size());
  for (auto& [letter, pos] : positions) {
    // Cyclic gaps: successive differences plus the wrap-around one.
    long expected = pos.size() == 1 ? per : pos[1] - pos[0];
    for (std::size_t t = 0; t + 1 < pos.size(); ++t) {
      long g = pos[t + 1] - pos[t];
      if (g != expected) {
        throw ValidationError("constant gap: letter '" +
                              std::string(1, letter) + "' has gaps " +
                              std::to_string(expected) + " and " +
                              std::to_string(g));
      }
    }
    long wrap = pos.front() + per - pos.back();
    if (wrap != expected) {
      throw ValidationError("constant gap: letter '" + std::string(1, letter) +
                            "' has gaps " + std::to_string(expected) +
                            " and " + std::to_string(wrap));
    }
  }
  return ConstantGapSeq(std::move(period));
}

ConstantGapSeq::ConstantGapSeq(Word period) : period_(std::move(period)) {
  const long per = this->per();
  for (char c : period_) {
    if (!letter_gaps_.count(c)) {
      long count = static_cast<long>(std::count(period_.begin(), period_.end(), c));
      letter_gaps_[c] = per / count;
    }
  }

  // Every factor of length <= per occurs at one of the per cyclic phases;
  // three concatenated periods expose both extensions of each occurrence.
  Word triple = period_ + period_ + period_;
  beta_ = 0;
  for (long n = 1; n < per; ++n) {
    std::map<WordView, std::pair<std::set<char>, std::set<char>>> ext;
    for (long i = per; i < 2 * per; ++i) {
      WordView u(triple.data() + i, static_cast<std::size_t>(n));
      auto& [left, right] = ext[u];
      left.insert(triple[static_cast<std::size_t>(i - 1)]);
      right.insert(triple[static_cast<std::size_t>(i + n)]);
    }
    for (auto& [u, lr] : ext) {
      if (lr.first.size() >= 2 && lr.second.size() >= 2) beta_ = n;
    }
  }

  gap_sets_.resize(static_cast<std::size_t>(per) + 1);
  gap_sets_[0] = {1};
  complexities_.resize(static_cast<std::size_t>(per) + 1);
  complexities_[0] = 1;
  for (long n = 1; n <= per; ++n) {
    std::set<WordView> seen;
    for (long i = 0; i < per; ++i) {
      WordView u(triple.data() + i, static_cast<std::size_t>(n));
      seen.insert(u);
      gap_sets_[static_cast<std::size_t>(n)].insert(gap_of_factor(u));
    }
    complexities_[static_cast<std::size_t>(n)] = static_cast<long>(seen.size());
  }
}

bool ConstantGapSeq::is_factor(WordView u) const {
  if (u.empty()) return true;
  for (std::size_t phase = 0; phase < period_.size(); ++phase) {
    bool ok = true;
    for (std::size_t t = 0; t < u.size() && ok; ++t) {
      ok = u[t] == period_[(phase + t) % period_.size()];
    }
    if (ok) return true;
  }
  return false;
}

long ConstantGapSeq::gap_of_factor(WordView u) const {
  if (!is_factor(u)) {
    throw ValidationError("gap_of_factor: not a factor of the periodic "
                          "language");
  }
  long g = 1;
  for (char c : u) g = std::lcm(g, letter_gaps_.at(c));
  return g;
}

std::set<long> ConstantGapSeq::gap_set(long n) const {
  if (n < 0) throw ValidationError("gap_set: negative length");
  if (n > per()) return {per()};
  return gap_sets_[static_cast<std::size_t>(n)];
}

long ConstantGapSeq::complexity(long n) const {
  if (n < 0) throw ValidationError("complexity: negative length");
  if (n > per()) return per();
  return complexities_[static_cast<std::size_t>(n)];
}

}  // namespace balexp::constant_gap
