#include "balexp/sturmian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace balexp::sturmian {

namespace {

// Smallest period of the cyclic word per (per is a power of its primitive
// rotation root exactly when a strict divisor of |per| is a cyclic period).
std::size_t primitive_root_len(const std::vector<long>& per) {
  for (std::size_t d = 1; d < per.size(); ++d) {
    if (per.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t j = d; j < per.size() && ok; ++j) ok = per[j] == per[j - d];
    if (ok) return d;
  }
  return per.size();
}

}  // namespace

Slope::Slope(std::vector<long> pre, std::vector<long> per)
    : pre_(std::move(pre)), per_(std::move(per)) {
  if (per_.empty()) throw std::invalid_argument("Slope: empty period");
  for (long z : per_) {
    if (z < 1) throw std::invalid_argument("Slope: coefficient < 1");
  }
  for (long a : pre_) {
    if (a < 1) throw std::invalid_argument("Slope: coefficient < 1");
  }
  per_.resize(primitive_root_len(per_));
  // Absorb preperiod coefficients that merely repeat the period's last
  // element under right rotation: [0; ..., c, (z0..z{M-1}, c)] with the final
  // preperiod coefficient equal to z_{M-1}.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    per_.insert(per_.begin(), per_.back());
    per_.pop_back();
  }
}

Slope Slope::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("Slope: malformed \"" + std::string(text) +
                                "\", expected 0;a1,...;(z0,...)");
  };
  std::size_t s1 = text.find(';');
  if (s1 == std::string_view::npos) fail();
  std::size_t s2 = text.find(';', s1 + 1);
  if (s2 == std::string_view::npos) fail();
  if (text.substr(0, s1) != "0") fail();

  auto parse_list = [&](std::string_view part) {
    std::vector<long> out;
    while (!part.empty()) {
      std::size_t comma = part.find(',');
      std::string item(part.substr(0, comma));
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
        fail();
      }
      out.push_back(std::stol(item));
      if (comma == std::string_view::npos) break;
      part.remove_prefix(comma + 1);
      if (part.empty()) fail();
    }
    return out;
  };

  std::string_view per_part = text.substr(s2 + 1);
  if (per_part.size() < 3 || per_part.front() != '(' || per_part.back() != ')') {
    fail();
  }
  per_part.remove_prefix(1);
  per_part.remove_suffix(1);
  return Slope(parse_list(text.substr(s1 + 1, s2 - s1 - 1)),
               parse_list(per_part));
}

std::string Slope::render() const {
  std::string out = "0;";
  for (std::size_t i = 0; i < pre_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pre_[i]);
  }
  out += ";(";
  for (std::size_t i = 0; i < per_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(per_[i]);
  }
  out += ')';
  return out;
}

long Slope::coeff(std::size_t i) const {
  if (i < 1) throw std::out_of_range("Slope::coeff: index starts at 1");
  if (i <= pre_.size()) return pre_[i - 1];
  return per_[(i - pre_.size() - 1) % per_.size()];
}

QuadNum Slope::value() const { return quadratic::periodic_cf_value(pre_, per_); }

Convergents::Convergents(Slope slope) : slope_(std::move(slope)) {
  p_ = {1, 0};  // p_{-1}, p_0
  q_ = {0, 1};  // q_{-1}, q_0
}

void Convergents::ensure(long n) {
  while (static_cast<long>(p_.size()) - 2 < n) {
    std::size_t next = p_.size();  // holds index N = next - 1
    long a = slope_.coeff(next - 1);
    p_.push_back(a * p_[next - 1] + p_[next - 2]);
    q_.push_back(a * q_[next - 1] + q_[next - 2]);
  }
}

mpz_class Convergents::p(long n) {
  if (n < -1) throw std::out_of_range("Convergents: index < -1");
  ensure(n);
  return p_[static_cast<std::size_t>(n + 1)];
}

mpz_class Convergents::q(long n) {
  if (n < -1) throw std::out_of_range("Convergents: index < -1");
  ensure(n);
  return q_[static_cast<std::size_t>(n + 1)];
}

mpz_class Convergents::Q(long n) { return p(n) + q(n); }

BispecialParams bispecial_params(const Slope& slope, long n) {
  if (n < 0) throw std::invalid_argument("bispecial_params: n < 0");
  long N = 0;
  long acc = 0;
  while (acc + slope.coeff(N + 1) <= n) {
    acc += slope.coeff(N + 1);
    ++N;
  }
  return {N, n - acc};
}

BispecialData bispecial_data(const Slope& slope, BispecialParams params) {
  auto [N, m] = params;
  if (N < 0 || m < 0 || m >= slope.coeff(N + 1)) {
    throw std::invalid_argument("bispecial_data: bad (N, m)");
  }
  Convergents cv(slope);

  // Derived slope [0; a_{N+1} - m, a_{N+2}, ...]: the tail of the expansion
  // with the first coefficient reduced by m, repackaged as preperiod plus a
  // rotation of the original period.
  const long h0 = static_cast<long>(slope.preperiod_len());
  const long M = static_cast<long>(slope.period_len());
  std::vector<long> pre{slope.coeff(N + 1) - m};
  for (long j = N + 2; j <= h0; ++j) pre.push_back(slope.coeff(j));
  const long start = std::max(N + 1, h0) - h0;  // coeff index offset into period
  std::vector<long> per(slope.period_len());
  for (long t = 0; t < M; ++t) {
    per[static_cast<std::size_t>(t)] =
        slope.per()[static_cast<std::size_t>((start + t) % M)];
  }
  if (pre[0] < 1) {
    // a_{N+1} == m is excluded above, so the reduced head stays >= 1.
    throw std::logic_error("bispecial_data: empty head");
  }

  BispecialData d{params,
                  Vec2{cv.p(N), cv.q(N)},
                  Vec2{m * cv.p(N) + cv.p(N - 1), m * cv.q(N) + cv.q(N - 1)},
                  Vec2{},
                  0,
                  0,
                  0,
                  Slope(std::move(pre), std::move(per))};
  d.psi_b = d.psi_r + d.psi_s - Vec2{1, 1};
  d.len_r = d.psi_r.a + d.psi_r.b;
  d.len_s = d.psi_s.a + d.psi_s.b;
  d.len_b = d.len_r + d.len_s - 2;
  return d;
}

BispecialData bispecial_data(const Slope& slope, long n) {
  if (n < 1) throw std::invalid_argument("bispecial_data: n < 1");
  return bispecial_data(slope, bispecial_params(slope, n));
}

Word generate_prefix(const Slope& slope, std::size_t length) {
  Word prev = "a";  // s_{-1}
  Word cur = "b";   // s_0
  for (std::size_t n = 1; cur.size() < length; ++n) {
    Word next;
    long a = slope.coeff(n);
    for (long t = 0; t < a && next.size() < length; ++t) next += cur;
    next += prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.resize(std::min(cur.size(), length));
  return cur;
}

std::size_t saturated_prefix_len(const Slope& slope, std::size_t n) {
  if (n == 0) return 0;
  auto count = [&](std::size_t len) {
    Word prefix = generate_prefix(slope, len);
    return words::factor_set(prefix, n).size();
  };
  std::size_t hi = std::max<std::size_t>(4 * n, 16);
  while (count(hi) < n + 1) {
    if (hi > (1u << 26)) {
      throw std::logic_error("saturated_prefix_len: complexity n+1 not reached");
    }
    hi *= 2;
  }
  std::size_t lo = n;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (count(mid) == n + 1) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

bool factor_exists(const QuadNum& theta, long k, long l) {
  if (k < 0 || l < 0) return false;
  QuadNum kl(l);
  return QuadNum(k - 1) * theta - QuadNum(1) < kl &&
         kl < QuadNum(k + 1) * theta + QuadNum(1);
}

bool factor_exists(const Slope& slope, long k, long l) {
  return factor_exists(slope.value(), k, l);
}

long max_k_for_l(const QuadNum& theta, long l) {
  // factor_exists is true on a contiguous nonempty range of k, which need
  // not start at 0: find the range, then walk to its upper end.
  long k = 0;
  while (!factor_exists(theta, k, l)) ++k;
  while (factor_exists(theta, k + 1, l)) ++k;
  return k;
}

long max_l_for_k(const QuadNum& theta, long k) {
  long l = 0;
  while (!factor_exists(theta, k, l)) ++l;
  while (factor_exists(theta, k, l + 1)) ++l;
  return l;
}

SturmianExponents sturmian_exponents(const Slope& slope) {
  const std::size_t M = slope.period_len();
  const std::size_t h0 = slope.preperiod_len();
  Convergents cv(slope);

  QuadNum lambda_abs =
      quadratic::nondominant_eigen(quadratic::period_matrix(slope.per(), 0))
          .lambda.abs();

  // Per residue class i the terms a_{N+1} + (Q_{N-1} - 2)/Q_N with
  // N = h0 + i + tM converge to z_i + L_i, and exceed the limit only while
  // |lambda|^t |Q_{h0+i-1} - L_i Q_{h0+i}| > 2. Scan that finite range.
  QuadNum limit_max;
  long t_scan = 0;
  for (std::size_t i = 0; i < M; ++i) {
    QuadNum L = quadratic::limit_L(quadratic::period_matrix(slope.per(), i));
    QuadNum lim = QuadNum(slope.per()[i]) + L;
    if (i == 0 || lim > limit_max) limit_max = lim;
    QuadNum disc =
        QuadNum(cv.Q(static_cast<long>(h0 + i) - 1)) -
        L * QuadNum(cv.Q(static_cast<long>(h0 + i)));
    QuadNum bound = disc.abs();
    long t = 0;
    while (bound > QuadNum(2)) {
      bound = bound * lambda_abs;
      ++t;
    }
    t_scan = std::max(t_scan, t);
  }

  const long n_scan = static_cast<long>(h0) +
                      static_cast<long>(M) * (t_scan + 1);
  QuadNum finite_max(-1);
  for (long N = 0; N < n_scan; ++N) {
    QuadNum term =
        QuadNum(slope.coeff(static_cast<std::size_t>(N) + 1)) +
        (QuadNum(cv.Q(N - 1)) - QuadNum(2)) / QuadNum(cv.Q(N));
    if (term > finite_max) finite_max = term;
  }

  SturmianExponents e;
  e.attained = finite_max >= limit_max;
  e.E = QuadNum(2) + (e.attained ? finite_max : limit_max);
  e.Estar = QuadNum(2) + limit_max;
  return e;
}

}  // namespace balexp::sturmian
