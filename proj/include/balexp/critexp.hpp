// Critical exponent E and asymptotic critical exponent E* of a balanced
// sequence, computed exactly. Repetitions of long factors are governed by
// return words to coloured copies of Sturmian bispecial factors; those group
// into finitely many classes (i, m) on which the candidate-return set S, the
// convergent-ratio limit L_i and hence the asymptotic contribution E*(i, m)
// are constant. Short factors are handled by a finite explicit universe. E
// is the maximum of the short-factor bound, the class limits, and finitely
// many pre-limit index values I(N, m).

#ifndef BALEXP_CRITEXP_HPP
#define BALEXP_CRITEXP_HPP

#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "balexp/colouring.hpp"
#include "balexp/quadratic.hpp"
#include "balexp/words.hpp"

namespace balexp::critexp {

using colouring::BalancedSpec;
using quadratic::QuadNum;
using words::Word;
using words::WordView;

// Candidate return composition: k copies of the more frequent Sturmian
// return word r and l copies of the less frequent s. Members of the sets
// S(u) and S(i, m); always 1 <= k + l <= Per(y) * Per(yp).
struct SVector {
  long l = 0;
  long k = 0;
  auto operator<=>(const SVector&) const = default;
};

// Smallest h at least the canonical preperiod length with
// p_h + p_{h-1} - 1 > beta(y) and q_h + q_{h-1} - 1 > beta(yp): from index h
// on, every bispecial factor is long enough for the class machinery.
long min_preperiod_h(const BalancedSpec& spec);

// Number of equivalence classes: the smallest i > 0 such that h + i and h
// agree mod the period length and have congruent convergent pairs
// (p, q) at N-1 and N modulo (Per(y), Per(yp)).
long class_count_H(const BalancedSpec& spec, long h);

// S(i, m) for class 0 <= i < H, 0 <= m < a_{h+i+1}: vectors satisfying the
// congruence condition modulo (Per(y), Per(yp)), the factor-existence
// inequality for the derived slope theta_{i,m}, and the size cap.
std::set<SVector> set_S_class(const BalancedSpec& spec, long i, long m,
                              long h);

// S(u) for a non-empty factor u of the base Sturmian sequence, via the
// shortest bispecial extension of u; the congruence moduli come from the gap
// sets of u itself. Throws ValidationError when u is not a factor.
std::set<SVector> set_S_factor(const BalancedSpec& spec, WordView u);

// Pareto-minimal elements under componentwise <=. Maxima over S of the
// ratios below are attained on this front.
std::set<SVector> hat_reduce(const std::set<SVector>& s);

// Length of the shortest return word to a coloured copy of u:
// min { k |r| + l |s| } over S(u), with r, s the return words of the
// shortest bispecial extension of u. Returns 0 when S(u) is empty (no
// repetition crosses u; its exponent contribution is neutral).
mpz_class shortest_return_length(const BalancedSpec& spec, WordView u);

// I(N, m) = 1 + max over S of ((1+m) Q_N + Q_{N-1} - 2) /
// ((k + l m) Q_N + l Q_{N-1}), the exact repetition index of the coloured
// bispecial (N, m). Neutral value 1 for empty S.
QuadNum index_I(const BalancedSpec& spec, long N, long m,
                const std::set<SVector>& S);

// E*(i, m) = 1 + max over S_hat(i, m) of (1 + m + L_i)/(k + l m + l L_i);
// neutral value 1 for empty S.
QuadNum E_star_class(const BalancedSpec& spec, long i, long m);

// E*(v): the exact maximum of E*(i, m) over all classes.
QuadNum E_star(const BalancedSpec& spec);

// Smallest N0 with |lambda|^{N0 H / M} |Q_{h+i-1} - L_i Q_{h+i}| <= 2 L_i;
// beyond it I(h+i+NH, m) <= E*(i, m), so only N < N0 need explicit checks.
long cutoff_N0(const BalancedSpec& spec, long i);

// Projections to examine for the short-factor bound: all non-empty factors u
// with |u|_a <= beta(y) or |u|_b <= beta(yp), together with the bispecial
// prefixes of index N < h. Sorted by length, then lexicographically.
std::vector<Word> short_factor_universe(const BalancedSpec& spec, long h);

// E^short(v) = 1 + max over the universe of |u| / shortest_return_length(u).
QuadNum E_short(const BalancedSpec& spec);

struct ClassEntry {
  long i = 0;
  long m = 0;
  std::set<SVector> S_hat;
  QuadNum L;
  QuadNum Estar_im;
  long N0 = 0;
  std::vector<mpq_class> I_values;  // I(h+i+NH, m) for 0 <= N < N0
  bool S_empty = false;
};

struct ShortEntry {
  Word projection;
  mpz_class ret_len;  // 0 when S(u) is empty
  mpq_class ratio;    // |u| / ret_len, 0 when S(u) is empty
};

struct ExponentReport {
  QuadNum E, Estar, E_short;
  long h = 0;
  long H = 0;
  std::vector<ClassEntry> classes;
  std::vector<ShortEntry> short_table;
  std::string attained_by;
  // Per(y) * Per(yp) == 1: the sequence is Sturmian up to renaming and E,
  // E* come from the closed Sturmian formulas instead of the class table.
  bool sturmian_fallback = false;
};

// Full analysis: E = max(E_short, max over classes of max(E*(i,m),
// I(h+i+NH, m) for N < N0)), with every comparison exact.
ExponentReport E_total(const BalancedSpec& spec);

// Report JSON as documented in the README (exact values plus display-only
// decimal approximations).
std::string render_report(const ExponentReport& rep);

// JSON object text {"a","b","c","D","approx"} for one exact value, the same
// shape used inside render_report.
std::string quad_json_text(const QuadNum& x);

}  // namespace balexp::critexp

#endif  // BALEXP_CRITEXP_HPP
