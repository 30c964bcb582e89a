#include "balexp/critexp.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "balexp/errors.hpp"
#include "balexp/sturmian.hpp"

namespace balexp::critexp {

using sturmian::Slope;

namespace {

std::pair<long, long> parikh_ab(WordView u) {
  long na = 0, nb = 0;
  for (char c : u) {
    if (c == 'a') {
      ++na;
    } else if (c == 'b') {
      ++nb;
    } else {
      throw ValidationError("base-language word must be over {a, b}");
    }
  }
  return {na, nb};
}

// Limit L_i of Q_{N-1}/Q_N along class i: from the period matrix rotated so
// that its first factor is the step for a_{h+i+1}.
QuadNum class_limit(const BalancedSpec& spec, long h, long i) {
  const auto& per = spec.slope().per();
  const long M = static_cast<long>(per.size());
  const long h0 = static_cast<long>(spec.slope().preperiod_len());
  const auto rot = static_cast<std::size_t>(((h - h0 + i) % M + M) % M);
  return quadratic::limit_L(quadratic::period_matrix(per, rot));
}

bool aligned(const mpz_class& v, const std::set<long>& gaps) {
  for (long g : gaps) {
    if (v % g == 0) return true;
  }
  return false;
}

// S = S_1 /\ S_2 /\ S_3 for a bispecial factor with the given return-word
// data; the congruence moduli are the gap sets of the factor u whose
// coloured copies are being crossed (the bispecial extension of u for short
// u, u itself for long bispecials).
std::set<SVector> set_S_impl(const BalancedSpec& spec,
                             const sturmian::BispecialData& bd,
                             const std::set<long>& gaps_a,
                             const std::set<long>& gaps_b) {
  std::set<SVector> out;
  const long cap = spec.per_product();
  const QuadNum theta = bd.derived_slope.value();
  for (long l = 0; l <= cap; ++l) {
    for (long k = (l == 0 ? 1 : 0); k + l <= cap; ++k) {
      mpz_class ca = k * bd.psi_r.a + l * bd.psi_s.a;
      mpz_class cb = k * bd.psi_r.b + l * bd.psi_s.b;
      if (!aligned(ca, gaps_a) || !aligned(cb, gaps_b)) continue;
      if (!sturmian::factor_exists(theta, k, l)) continue;
      out.insert({l, k});
    }
  }
  return out;
}

struct FactorAnalysis {
  sturmian::BispecialData data;  // of the shortest bispecial extension
  std::set<SVector> S;
};

// Extends u in forced directions until both extension sets have size two;
// for a standard Sturmian sequence this closure is the shortest bispecial
// extension, and its return words are conjugates of the return words to u.
FactorAnalysis analyze_factor(const BalancedSpec& spec, WordView u) {
  if (u.empty()) throw ValidationError("factor must be non-empty");
  auto [na, nb] = parikh_ab(u);
  const Slope& slope = spec.slope();

  Word b(u);
  {
    std::size_t len = sturmian::saturated_prefix_len(slope, b.size());
    if (sturmian::generate_prefix(slope, len).find(b) == Word::npos) {
      throw ValidationError("not a factor of the base Sturmian sequence");
    }
  }
  while (true) {
    std::size_t len = sturmian::saturated_prefix_len(slope, b.size() + 1);
    Word prefix = sturmian::generate_prefix(slope, len);
    auto eg = words::extension_graph(prefix, b);
    if (eg.left.size() >= 2 && eg.right.size() >= 2) break;
    if (eg.right.size() == 1) {
      b += eg.right[0];
    } else if (eg.left.size() == 1) {
      b.insert(b.begin(), eg.left[0]);
    } else {
      throw std::logic_error("factor without extension");
    }
    if (b.size() > 100000) {
      throw std::logic_error("bispecial extension did not close");
    }
  }

  // Bispecial factors are the palindromic prefixes; identify (N, m) by
  // length along the bispecial enumeration.
  std::optional<sturmian::BispecialData> bd;
  const auto target = static_cast<long>(b.size());
  for (long n = 1; !bd; ++n) {
    auto cand = sturmian::bispecial_data(slope, n);
    if (cand.len_b == target) {
      bd = std::move(cand);
    } else if (cand.len_b > target) {
      throw std::logic_error("extension length matches no bispecial factor");
    }
  }

  std::set<SVector> S =
      set_S_impl(spec, *bd, spec.y().gap_set(na), spec.yp().gap_set(nb));
  return {std::move(*bd), std::move(S)};
}

QuadNum estar_from(long m, const QuadNum& L, const std::set<SVector>& S) {
  if (S.empty()) return QuadNum(1);
  const QuadNum num = QuadNum(1 + m) + L;
  std::optional<QuadNum> best;
  for (const auto& v : S) {
    QuadNum den = QuadNum(v.k + v.l * m) + QuadNum(v.l) * L;
    QuadNum val = num / den;
    if (!best || val > *best) best = val;
  }
  return QuadNum(1) + *best;
}

}  // namespace

long min_preperiod_h(const BalancedSpec& spec) {
  sturmian::Convergents cv(spec.slope());
  long h = static_cast<long>(spec.slope().preperiod_len());
  while (!(cv.p(h) + cv.p(h - 1) - 1 > spec.y().beta() &&
           cv.q(h) + cv.q(h - 1) - 1 > spec.yp().beta())) {
    ++h;
  }
  return h;
}

long class_count_H(const BalancedSpec& spec, long h) {
  const long M = static_cast<long>(spec.slope().period_len());
  const long pa = spec.y().per();
  const long pb = spec.yp().per();
  const long cap = M * pa * pa * pb * pb;
  sturmian::Convergents cv(spec.slope());
  auto congruent = [&](long n1, long n2) {
    return (cv.p(n1) - cv.p(n2)) % pa == 0 && (cv.q(n1) - cv.q(n2)) % pb == 0;
  };
  for (long i = M; i <= cap; i += M) {
    if (congruent(h + i - 1, h - 1) && congruent(h + i, h)) return i;
  }
  throw std::logic_error("class count exceeded its theoretical bound");
}

std::set<SVector> set_S_class(const BalancedSpec& spec, long i, long m,
                              long h) {
  auto bd = sturmian::bispecial_data(spec.slope(),
                                     sturmian::BispecialParams{h + i, m});
  return set_S_impl(spec, bd, {spec.y().per()}, {spec.yp().per()});
}

std::set<SVector> set_S_factor(const BalancedSpec& spec, WordView u) {
  return analyze_factor(spec, u).S;
}

std::set<SVector> hat_reduce(const std::set<SVector>& s) {
  std::set<SVector> out;
  for (const auto& v : s) {
    bool dominated = false;
    for (const auto& w : s) {
      if (w != v && w.l <= v.l && w.k <= v.k) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(v);
  }
  return out;
}

mpz_class shortest_return_length(const BalancedSpec& spec, WordView u) {
  FactorAnalysis fa = analyze_factor(spec, u);
  if (fa.S.empty()) return 0;
  std::optional<mpz_class> best;
  for (const auto& v : fa.S) {
    mpz_class len = v.k * fa.data.len_r + v.l * fa.data.len_s;
    if (!best || len < *best) best = std::move(len);
  }
  return *best;
}

QuadNum index_I(const BalancedSpec& spec, long N, long m,
                const std::set<SVector>& S) {
  if (S.empty()) return QuadNum(1);
  sturmian::Convergents cv(spec.slope());
  const mpz_class num = (1 + m) * cv.Q(N) + cv.Q(N - 1) - 2;
  // The numerator is common to all of S, so the maximum is the minimal
  // denominator.
  std::optional<mpz_class> den;
  for (const auto& v : S) {
    mpz_class d = (v.k + v.l * m) * cv.Q(N) + v.l * cv.Q(N - 1);
    if (!den || d < *den) den = std::move(d);
  }
  mpq_class q(num, *den);
  q.canonicalize();
  return QuadNum(1) + QuadNum(q);
}

QuadNum E_star_class(const BalancedSpec& spec, long i, long m) {
  const long h = min_preperiod_h(spec);
  return estar_from(m, class_limit(spec, h, i),
                    set_S_class(spec, i, m, h));
}

QuadNum E_star(const BalancedSpec& spec) {
  const long h = min_preperiod_h(spec);
  const long H = class_count_H(spec, h);
  std::optional<QuadNum> best;
  for (long i = 0; i < H; ++i) {
    const QuadNum L = class_limit(spec, h, i);
    const long z = spec.slope().coeff(static_cast<std::size_t>(h + i + 1));
    for (long m = 0; m < z; ++m) {
      QuadNum val = estar_from(m, L, set_S_class(spec, i, m, h));
      if (!best || val > *best) best = std::move(val);
    }
  }
  return *best;
}

long cutoff_N0(const BalancedSpec& spec, long i) {
  const long h = min_preperiod_h(spec);
  const long H = class_count_H(spec, h);
  const long M = static_cast<long>(spec.slope().period_len());
  const long h0 = static_cast<long>(spec.slope().preperiod_len());
  const auto rot = static_cast<std::size_t>(((h - h0 + i) % M + M) % M);
  const auto mat = quadratic::period_matrix(spec.slope().per(), rot);
  const QuadNum L = quadratic::limit_L(mat);
  const QuadNum lam_abs = quadratic::nondominant_eigen(mat).lambda.abs();
  QuadNum mu = 1;
  for (long t = 0; t < H / M; ++t) mu = mu * lam_abs;  // |lambda|^{H/M} < 1

  sturmian::Convergents cv(spec.slope());
  const QuadNum bound = QuadNum(2) * L;
  QuadNum cur =
      (QuadNum(cv.Q(h + i - 1)) - L * QuadNum(cv.Q(h + i))).abs();
  long n0 = 0;
  while (cur > bound) {
    cur = cur * mu;
    if (++n0 > 1000000) throw std::logic_error("cutoff search diverged");
  }
  return n0;
}

std::vector<Word> short_factor_universe(const BalancedSpec& spec, long h) {
  const Slope& slope = spec.slope();
  const QuadNum theta = slope.value();
  std::set<Word> uni;

  // Factors whose a-count or b-count is within the bispecial range of the
  // corresponding colouring sequence. Their length is bounded exactly.
  long maxlen = 0;
  for (long l = 0; l <= spec.y().beta(); ++l) {
    maxlen = std::max(maxlen, l + sturmian::max_k_for_l(theta, l));
  }
  for (long k = 0; k <= spec.yp().beta(); ++k) {
    maxlen = std::max(maxlen, k + sturmian::max_l_for_k(theta, k));
  }
  if (maxlen > 0) {
    std::size_t len =
        sturmian::saturated_prefix_len(slope, static_cast<std::size_t>(maxlen));
    Word prefix = sturmian::generate_prefix(slope, len);
    for (long n = 1; n <= maxlen; ++n) {
      for (const Word& w :
           words::factor_set(prefix, static_cast<std::size_t>(n))) {
        auto [na, nb] = parikh_ab(w);
        if (na <= spec.y().beta() || nb <= spec.yp().beta()) uni.insert(w);
      }
    }
  }

  // Bispecial prefixes below the class range.
  for (long n = 1;; ++n) {
    auto params = sturmian::bispecial_params(slope, n);
    if (params.N >= h) break;
    auto bd = sturmian::bispecial_data(slope, params);
    uni.insert(
        sturmian::generate_prefix(slope, bd.len_b.get_ui()));
  }

  std::vector<Word> out(uni.begin(), uni.end());
  std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

QuadNum E_short(const BalancedSpec& spec) {
  const long h = min_preperiod_h(spec);
  mpq_class best = 0;
  for (const Word& u : short_factor_universe(spec, h)) {
    mpz_class ret = shortest_return_length(spec, u);
    if (ret == 0) continue;
    mpq_class ratio(static_cast<unsigned long>(u.size()), 1);
    ratio /= mpq_class(ret);
    if (ratio > best) best = ratio;
  }
  return QuadNum(1) + QuadNum(best);
}

ExponentReport E_total(const BalancedSpec& spec) {
  ExponentReport rep;
  rep.h = min_preperiod_h(spec);
  rep.H = class_count_H(spec, rep.h);

  mpq_class best_ratio = 0;
  Word best_short;
  for (const Word& u : short_factor_universe(spec, rep.h)) {
    ShortEntry entry{u, shortest_return_length(spec, u), mpq_class(0)};
    if (entry.ret_len != 0) {
      entry.ratio = mpq_class(static_cast<unsigned long>(u.size()), 1);
      entry.ratio /= mpq_class(entry.ret_len);
    }
    if (entry.ratio > best_ratio) {
      best_ratio = entry.ratio;
      best_short = u;
    }
    rep.short_table.push_back(std::move(entry));
  }
  rep.E_short = QuadNum(1) + QuadNum(best_ratio);

  std::optional<QuadNum> best_estar;
  std::optional<QuadNum> best_class;  // max of E*(i,m) and pre-cutoff I
  long best_i = 0, best_m = 0;
  for (long i = 0; i < rep.H; ++i) {
    const QuadNum L = class_limit(spec, rep.h, i);
    const long n0 = cutoff_N0(spec, i);
    const long z = spec.slope().coeff(static_cast<std::size_t>(rep.h + i + 1));
    for (long m = 0; m < z; ++m) {
      ClassEntry ce;
      ce.i = i;
      ce.m = m;
      ce.N0 = n0;
      ce.L = L;
      auto S = set_S_class(spec, i, m, rep.h);
      ce.S_empty = S.empty();
      ce.S_hat = hat_reduce(S);
      ce.Estar_im = estar_from(m, L, ce.S_hat);

      QuadNum class_value = ce.Estar_im;
      for (long t = 0; t < n0; ++t) {
        QuadNum I = index_I(spec, rep.h + i + t * rep.H, m, ce.S_hat);
        ce.I_values.push_back(I.as_rational());
        if (I > class_value) class_value = I;
      }

      if (!best_estar || ce.Estar_im > *best_estar) best_estar = ce.Estar_im;
      if (!best_class || class_value > *best_class) {
        best_class = class_value;
        best_i = i;
        best_m = m;
      }
      rep.classes.push_back(std::move(ce));
    }
  }
  rep.Estar = *best_estar;

  if (spec.per_product() == 1) {
    // Both colouring sequences are single letters: the balanced sequence is
    // Sturmian up to renaming and the closed Sturmian formulas apply.
    auto se = sturmian::sturmian_exponents(spec.slope());
    rep.sturmian_fallback = true;
    rep.E = se.E;
    rep.Estar = se.Estar;
    rep.attained_by = "sturmian closed form";
    return rep;
  }

  if (*best_class >= rep.E_short) {
    rep.E = *best_class;
    rep.attained_by = "class (i=" + std::to_string(best_i) +
                      ", m=" + std::to_string(best_m) + ")";
  } else {
    rep.E = rep.E_short;
    rep.attained_by = "short factor " + best_short;
  }
  return rep;
}

namespace {

nlohmann::json int_or_string(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

nlohmann::json quad_json(const QuadNum& x) {
  nlohmann::json j;
  j["a"] = int_or_string(x.a());
  j["b"] = int_or_string(x.b());
  j["c"] = int_or_string(x.c());
  j["D"] = int_or_string(x.D());
  j["approx"] = x.approx_string();
  return j;
}

}  // namespace

std::string quad_json_text(const QuadNum& x) { return quad_json(x).dump(); }

std::string render_report(const ExponentReport& rep) {
  nlohmann::json j;
  j["E"] = quad_json(rep.E);
  j["Estar"] = quad_json(rep.Estar);
  j["E_short"] = quad_json(rep.E_short);
  j["h"] = rep.h;
  j["H"] = rep.H;
  j["classes"] = nlohmann::json::array();
  for (const auto& ce : rep.classes) {
    nlohmann::json c;
    c["i"] = ce.i;
    c["m"] = ce.m;
    c["S_hat"] = nlohmann::json::array();
    for (const auto& v : ce.S_hat) {
      c["S_hat"].push_back(nlohmann::json::array({v.l, v.k}));
    }
    c["L"] = quad_json(ce.L);
    c["Estar_im"] = quad_json(ce.Estar_im);
    c["N0"] = ce.N0;
    c["I_values"] = nlohmann::json::array();
    for (const auto& q : ce.I_values) {
      c["I_values"].push_back(q.get_str());
    }
    if (ce.S_empty) c["S_empty"] = true;
    j["classes"].push_back(std::move(c));
  }
  j["short_table"] = nlohmann::json::array();
  for (const auto& se : rep.short_table) {
    nlohmann::json s;
    s["projection"] = se.projection;
    s["ret_len"] = int_or_string(se.ret_len);
    s["ratio"] = se.ratio.get_str();
    j["short_table"].push_back(std::move(s));
  }
  j["attained_by"] = rep.attained_by;
  if (rep.sturmian_fallback) j["sturmian_fallback"] = true;
  return j.dump(2);
}

}  // namespace balexp::critexp
