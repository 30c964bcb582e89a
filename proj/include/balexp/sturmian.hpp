// Standard Sturmian sequences with eventually periodic continued fraction
// slope: convergents, prefix generation, bispecial factors and their return
// word data, and the closed forms for the (asymptotic) critical exponent.
//
// Conventions: theta = [0; a1, a2, ...] in (0, 1) is the slope, the letter
// 'a' is the less frequent one, the sequence starts with 'b', and Parikh
// pairs are ordered (count of a, count of b). Convergents are indexed from
// N = -1 with p(-1) = 1, p(0) = 0, q(-1) = 0, q(0) = 1, Q = p + q.

#ifndef BALEXP_STURMIAN_HPP
#define BALEXP_STURMIAN_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "balexp/quadratic.hpp"
#include "balexp/words.hpp"

namespace balexp::sturmian {

using quadratic::QuadNum;
using words::Word;

// Parikh pair (|w|_a, |w|_b).
struct Vec2 {
  mpz_class a, b;

  Vec2 operator+(const Vec2& o) const { return {a + o.a, b + o.b}; }
  Vec2 operator-(const Vec2& o) const { return {a - o.a, b - o.b}; }
  bool operator==(const Vec2& o) const = default;
};

// Eventually periodic continued fraction [0; a1..ah, (z0..z{M-1})], stored in
// canonical form: all coefficients >= 1, the period primitive, and trailing
// preperiod coefficients matching the rotating period tail absorbed into the
// period. Construction canonicalizes; the value is unchanged.
class Slope {
 public:
  Slope(std::vector<long> pre, std::vector<long> per);

  // Text form "0;a1,...,ah;(z0,...,zM-1)"; empty preperiod "0;;(z0,...)".
  // Throws std::invalid_argument on malformed input.
  static Slope parse(std::string_view text);
  std::string render() const;

  const std::vector<long>& pre() const { return pre_; }
  const std::vector<long>& per() const { return per_; }
  std::size_t preperiod_len() const { return pre_.size(); }
  std::size_t period_len() const { return per_.size(); }

  // Coefficient a_i, i >= 1.
  long coeff(std::size_t i) const;

  QuadNum value() const;

  bool operator==(const Slope& o) const = default;

 private:
  std::vector<long> pre_, per_;
};

// Lazily extended convergent tables p_N, q_N, Q_N = p_N + q_N for N >= -1.
class Convergents {
 public:
  explicit Convergents(Slope slope);

  const Slope& slope() const { return slope_; }
  // By value: the cache grows lazily, so references into it would not
  // survive a later call within the same expression.
  mpz_class p(long n);
  mpz_class q(long n);
  mpz_class Q(long n);

 private:
  void ensure(long n);

  Slope slope_;
  std::vector<mpz_class> p_, q_;  // index 0 holds N = -1
};

// The n-th bispecial factor corresponds to the pair (N, m) with
// n = a_1 + ... + a_N + m, 0 <= m < a_{N+1}; n = 0 is the empty word.
struct BispecialParams {
  long N = 0;
  long m = 0;
};

BispecialParams bispecial_params(const Slope& slope, long n);

// Return word data of the n-th bispecial factor b: r is the more frequent
// return word, s the less frequent one, and Psi(b) = Psi(r) + Psi(s) - (1,1).
struct BispecialData {
  BispecialParams params;
  Vec2 psi_r, psi_s, psi_b;
  mpz_class len_r, len_s, len_b;
  Slope derived_slope;  // [0; a_{N+1} - m, a_{N+2}, ...]
};

BispecialData bispecial_data(const Slope& slope, long n);
BispecialData bispecial_data(const Slope& slope, BispecialParams params);

// Prefix of the standard Sturmian sequence of the given slope (starts with
// 'b'); built from the standard word recursion s_n = s_{n-1}^{a_n} s_{n-2}.
Word generate_prefix(const Slope& slope, std::size_t length);

// Smallest prefix length whose factor set of length n is complete, i.e. has
// exactly n + 1 elements.
std::size_t saturated_prefix_len(const Slope& slope, std::size_t n);

// Whether the language contains a factor w with |w|_b = k and |w|_a = l;
// exactly the criterion (k-1)theta - 1 < l < (k+1)theta + 1.
bool factor_exists(const QuadNum& theta, long k, long l);
bool factor_exists(const Slope& slope, long k, long l);

// Largest k with factor_exists(theta, k, l), and the symmetric bound.
long max_k_for_l(const QuadNum& theta, long l);
long max_l_for_k(const QuadNum& theta, long k);

struct SturmianExponents {
  QuadNum E;      // 2 + sup_N { a_{N+1} + (Q_{N-1} - 2) / Q_N }
  QuadNum Estar;  // 2 + max_i { z_i + L_i }
  bool attained;  // whether the sup defining E is attained at a finite N
};

SturmianExponents sturmian_exponents(const Slope& slope);

}  // namespace balexp::sturmian

#endif  // BALEXP_STURMIAN_HPP
