#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "balexp/colouring.hpp"
#include "balexp/critexp.hpp"
#include "balexp/errors.hpp"
#include "balexp/quadratic.hpp"
#include "balexp/sturmian.hpp"

using namespace balexp::critexp;
using balexp::ValidationError;
using balexp::colouring::BalancedSpec;
using balexp::quadratic::Mat2;
using balexp::quadratic::nondominant_eigen;
using balexp::quadratic::period_matrix;
using balexp::quadratic::QuadNum;
using balexp::sturmian::Convergents;

namespace {

QuadNum qn(long a, long b, long c, long d) {
  return QuadNum(mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d));
}

QuadNum qr(long num, long den) { return QuadNum{mpq_class(num, den)}; }

BalancedSpec x9() {
  return BalancedSpec::parse(
      R"json({"slope":"0;2,3;(2)","y":"01","yp":"234567284365274863254768"})json");
}

BalancedSpec lubka() {
  return BalancedSpec::parse(
      R"json({"slope":"0;3,2;(3,1)","y":"01","yp":"234235"})json");
}

BalancedSpec fib() {
  return BalancedSpec::parse(R"json({"slope":"0;;(1)","y":"34","yp":"0102"})json");
}

BalancedSpec swapped() {
  return BalancedSpec::parse(R"json({"slope":"0;;(1)","y":"0102","yp":"34"})json");
}

BalancedSpec d3() {
  return BalancedSpec::parse(R"json({"slope":"0;1;(2)","y":"0","yp":"12"})json");
}

BalancedSpec d4() {
  return BalancedSpec::parse(R"json({"slope":"0;;(1)","y":"01","yp":"23"})json");
}

using SVec = std::set<SVector>;

}  // namespace

TEST_CASE("preperiod threshold h") {
  CHECK(min_preperiod_h(x9()) == 2);
  CHECK(min_preperiod_h(lubka()) == 2);
  CHECK(min_preperiod_h(d3()) == 2);
  CHECK(min_preperiod_h(d4()) == 2);
  CHECK(min_preperiod_h(fib()) == 2);
  CHECK(min_preperiod_h(swapped()) == 3);
}

TEST_CASE("number of bispecial classes H") {
  CHECK(class_count_H(x9(), 2) == 8);
  CHECK(class_count_H(lubka(), 2) == 6);
  CHECK(class_count_H(d3(), 2) == 1);
  CHECK(class_count_H(d4(), 2) == 3);
  CHECK(class_count_H(fib(), 2) == 6);
}

TEST_CASE("candidate sets of the classes (i, m)") {
  BalancedSpec spec = x9();
  const long h = 2;
  struct Row {
    long i, m;
    SVec want;
  };
  const Row rows[] = {
      {0, 0, {{6, 12}}},  {0, 1, {{16, 24}}}, {1, 0, {{8, 16}}},
      {1, 1, {{16, 22}}}, {2, 0, {{6, 16}}},  {2, 1, {{6, 10}}},
      {3, 0, {{12, 30}}}, {3, 1, {{12, 18}}},
  };
  for (const Row& r : rows) {
    CHECK(hat_reduce(set_S_class(spec, r.i, r.m, h)) == r.want);
  }
  // The classes repeat with period H.
  CHECK(set_S_class(spec, 8, 0, h) == set_S_class(spec, 0, 0, h));
  CHECK(set_S_class(spec, 9, 1, h) == set_S_class(spec, 1, 1, h));
}

TEST_CASE("asymptotic exponent per class and overall") {
  BalancedSpec spec = x9();
  CHECK(E_star_class(spec, 0, 0) == qn(8, -1, 6, 2));
  CHECK(E_star_class(spec, 2, 1) == qn(13, 2, 14, 2));
  CHECK(E_star(spec) == qn(13, 2, 14, 2));
  for (long i = 0; i < 4; ++i) {
    for (long m = 0; m < 2; ++m) {
      CHECK(E_star_class(spec, i + 4, m) == E_star_class(spec, i, m));
    }
  }

  BalancedSpec lub = lubka();
  CHECK(E_star_class(lub, 1, 0) == qn(15, 1, 12, 21));
  CHECK(E_star_class(lub, 0, 2) == qr(3, 2));
  CHECK(E_star(lub) == qn(15, 1, 12, 21));
}

TEST_CASE("candidate set of an explicit factor") {
  CHECK(hat_reduce(set_S_factor(x9(), "b")) == SVec{{2, 4}, {3, 3}});
  CHECK(set_S_factor(lubka(), "bbb") == SVec{{0, 2}, {3, 5}, {3, 7}, {3, 9}});
  CHECK(set_S_factor(lubka(), "ab") == SVec{{0, 2}, {3, 3}, {3, 5}, {6, 6}});
  CHECK_THROWS_AS(set_S_factor(x9(), "aa"), ValidationError);
  CHECK_THROWS_AS(set_S_factor(x9(), ""), ValidationError);
}

TEST_CASE("hat reduction keeps exactly the Pareto-minimal vectors") {
  SVec s = {{0, 2}, {1, 1}, {1, 2}, {2, 2}};
  CHECK(hat_reduce(s) == SVec{{0, 2}, {1, 1}});
  for (const SVector& v : hat_reduce(s)) {
    for (const SVector& w : hat_reduce(s)) {
      const bool dominates = w.l <= v.l && w.k <= v.k;
      if (v != w) CHECK_FALSE(dominates);
    }
  }
  CHECK(hat_reduce({}).empty());
}

TEST_CASE("shortest return lengths over the short-factor universe") {
  BalancedSpec spec = x9();
  const std::pair<const char*, long> want9[] = {
      {"a", 6},    {"b", 8},     {"ab", 26},      {"ba", 26},
      {"bb", 34},  {"bbb", 69},  {"bbabb", 138},  {"bbabbabb", 138},
  };
  for (auto& [u, r] : want9) CHECK(shortest_return_length(spec, u) == r);

  BalancedSpec lub = lubka();
  const std::pair<const char*, long> wantl[] = {
      {"a", 8},   {"b", 3},   {"ab", 8},  {"ba", 8},      {"bb", 4},
      {"abb", 8}, {"bab", 8}, {"bba", 8}, {"bbb", 8},     {"bbbb", 31},
      {"bbbabbb", 8},
  };
  for (auto& [u, r] : wantl) CHECK(shortest_return_length(lub, u) == r);

  CHECK(shortest_return_length(d3(), "bab") == 3);
  CHECK(shortest_return_length(d4(), "bb") == 3);
}

TEST_CASE("short factor universe") {
  CHECK(short_factor_universe(x9(), 2) ==
        std::vector<Word>{"a", "b", "ab", "ba", "bb", "bbb", "bbabb",
                          "bbabbabb"});
  CHECK(short_factor_universe(lubka(), 2) ==
        std::vector<Word>{"a", "b", "ab", "ba", "bb", "abb", "bab", "bba",
                          "bbb", "bbbb", "bbbabbb"});
  CHECK(short_factor_universe(d3(), 2) ==
        std::vector<Word>{"a", "b", "bb", "bab"});
  CHECK(short_factor_universe(d4(), 2) == std::vector<Word>{"a", "b", "bb"});
}

TEST_CASE("short factor exponent") {
  CHECK(E_short(x9()) == qr(7, 6));
  CHECK(E_short(lubka()) == qr(15, 8));
  CHECK(E_short(d3()) == qr(2, 1));
  CHECK(E_short(d4()) == qr(5, 3));
}

TEST_CASE("cutoff N0 beyond which the indices stay below the limit") {
  BalancedSpec spec = x9();
  CHECK(cutoff_N0(spec, 0) == 1);
  for (long i = 1; i < 8; ++i) CHECK(cutoff_N0(spec, i) == 0);
  BalancedSpec lub = lubka();
  CHECK(cutoff_N0(lub, 0) == 1);
  CHECK(cutoff_N0(lub, 1) == 1);
  for (long i = 2; i < 6; ++i) CHECK(cutoff_N0(lub, i) == 0);
}

TEST_CASE("repetition index of coloured bispecial factors") {
  BalancedSpec spec = x9();
  CHECK(index_I(spec, 2, 0, hat_reduce(set_S_class(spec, 0, 0, 2))) ==
        qr(149, 138));
  CHECK(index_I(spec, 2, 1, hat_reduce(set_S_class(spec, 0, 1, 2))) ==
        qr(67, 64));
  CHECK(index_I(spec, 2, 0, {}) == QuadNum(1));

  BalancedSpec lub = lubka();
  CHECK(index_I(lub, 2, 0, set_S_class(lub, 0, 0, 2)) == qr(73, 62));
  CHECK(index_I(lub, 2, 1, set_S_class(lub, 0, 1, 2)) == qr(41, 31));
  CHECK(index_I(lub, 2, 2, set_S_class(lub, 0, 2, 2)) == qr(91, 62));
  CHECK(index_I(lub, 3, 0, set_S_class(lub, 1, 0, 2)) == qr(50, 31));
}

TEST_CASE("full report for the period-24 colouring of slope [0;2,3,(2)]") {
  ExponentReport rep = E_total(x9());
  CHECK(rep.E == qr(7, 6));
  CHECK(rep.Estar == qn(13, 2, 14, 2));
  CHECK(rep.E_short == qr(7, 6));
  CHECK(rep.h == 2);
  CHECK(rep.H == 8);
  CHECK(rep.attained_by == "short factor a");
  CHECK_FALSE(rep.sturmian_fallback);
  REQUIRE(rep.classes.size() == 16);

  const ClassEntry& c00 = rep.classes[0];
  CHECK(c00.i == 0);
  CHECK(c00.m == 0);
  CHECK(c00.S_hat == SVec{{6, 12}});
  CHECK(c00.L == qn(-1, 1, 1, 2));
  CHECK(c00.N0 == 1);
  CHECK(c00.I_values == std::vector<mpq_class>{mpq_class(149, 138)});
  CHECK(rep.classes[1].I_values == std::vector<mpq_class>{mpq_class(67, 64)});
  CHECK(rep.classes[5].i == 2);
  CHECK(rep.classes[5].m == 1);
  CHECK(rep.classes[5].S_hat == SVec{{6, 10}});

  REQUIRE(rep.short_table.size() == 8);
  CHECK(rep.short_table[0].projection == "a");
  CHECK(rep.short_table[0].ret_len == 6);
  CHECK(rep.short_table[0].ratio == mpq_class(1, 6));
}

TEST_CASE("full report for the period-6 colouring of slope [0;3,2,(3,1)]") {
  ExponentReport rep = E_total(lubka());
  CHECK(rep.E == qr(15, 8));
  CHECK(rep.Estar == qn(15, 1, 12, 21));
  CHECK(rep.E_short == qr(15, 8));
  CHECK(rep.h == 2);
  CHECK(rep.H == 6);
  CHECK(rep.attained_by == "short factor bbbabbb");
  REQUIRE(rep.classes.size() == 12);

  CHECK(rep.classes[0].L == qn(-3, 1, 2, 21));
  CHECK(rep.classes[0].I_values == std::vector<mpq_class>{mpq_class(73, 62)});
  CHECK(rep.classes[1].I_values == std::vector<mpq_class>{mpq_class(41, 31)});
  CHECK(rep.classes[2].I_values == std::vector<mpq_class>{mpq_class(91, 62)});
  CHECK(rep.classes[2].Estar_im == qr(3, 2));
  CHECK(rep.classes[3].i == 1);
  CHECK(rep.classes[3].m == 0);
  CHECK(rep.classes[3].L == qn(-3, 1, 6, 21));
  CHECK(rep.classes[3].I_values == std::vector<mpq_class>{mpq_class(50, 31)});
}

TEST_CASE("reports for the two smallest alphabets") {
  ExponentReport r3 = E_total(d3());
  CHECK(r3.E == qn(4, 1, 2, 2));
  CHECK(r3.Estar == qn(4, 1, 2, 2));
  CHECK(r3.E_short == qr(2, 1));
  CHECK(r3.attained_by == "class (i=0, m=1)");
  CHECK(r3.classes.size() == 2);

  ExponentReport r4 = E_total(d4());
  CHECK(r4.E == qn(5, 1, 4, 5));
  CHECK(r4.Estar == qn(5, 1, 4, 5));
  CHECK(r4.E_short == qr(5, 3));
  CHECK(r4.H == 3);
  CHECK(r4.classes.size() == 3);
}

TEST_CASE("single-letter colourings fall back to the Sturmian formulas") {
  BalancedSpec t9 =
      BalancedSpec::parse(R"json({"slope":"0;2,3;(2)","y":"0","yp":"1"})json");
  ExponentReport rep = E_total(t9);
  CHECK(rep.sturmian_fallback);
  CHECK(rep.attained_by == "sturmian closed form");
  CHECK(rep.E == qr(14, 3));
  CHECK(rep.Estar == qn(3, 1, 1, 2));

  BalancedSpec tf =
      BalancedSpec::parse(R"json({"slope":"0;;(1)","y":"0","yp":"1"})json");
  rep = E_total(tf);
  CHECK(rep.sturmian_fallback);
  CHECK(rep.E == qn(5, 1, 2, 5));
  CHECK(rep.Estar == qn(5, 1, 2, 5));
}

TEST_CASE("lower bounds: E >= E* >= 1 + 1/(Per * Per')") {
  for (const BalancedSpec& spec :
       {x9(), lubka(), fib(), swapped(), d3(), d4()}) {
    ExponentReport rep = E_total(spec);
    CHECK(rep.E >= rep.Estar);
    QuadNum bound = QuadNum(1) + QuadNum{mpq_class(1, spec.per_product())};
    CHECK(rep.Estar >= bound);
  }
}

TEST_CASE("E* depends on the colourings only through their periods") {
  CHECK(E_star(lubka()) ==
        E_star(BalancedSpec::parse(
            R"json({"slope":"0;3,2;(3,1)","y":"01","yp":"232425"})json")));
  CHECK(E_star(x9()) ==
        E_star(BalancedSpec::parse(
            R"json({"slope":"0;2,3;(2)","y":"10","yp":"234567284365274863254768"})json")));
}

TEST_CASE("discrepancy contracts by the nondominant eigenvalue per period") {
  // |Q_{h-1+NH} - L Q_{h+NH}| = |lambda|^{NH/M} |Q_{h-1} - L Q_h|, class 0.
  BalancedSpec spec = x9();
  const long h = 2, H = 8;
  Convergents cv(spec.slope());
  QuadNum L = qn(-1, 1, 1, 2);
  QuadNum lam_abs = nondominant_eigen(period_matrix({2}, 0)).lambda.abs();
  QuadNum base = (QuadNum(cv.Q(h - 1)) - L * QuadNum(cv.Q(h))).abs();
  QuadNum factor(1);
  for (long n = 0; n <= 3; ++n) {
    QuadNum lhs =
        (QuadNum(cv.Q(h - 1 + n * H)) - L * QuadNum(cv.Q(h + n * H))).abs();
    CHECK(lhs == factor * base);
    for (long t = 0; t < H; ++t) factor = factor * lam_abs;
  }
}

TEST_CASE("indices beyond the cutoff stay below the class limit") {
  BalancedSpec spec = x9();
  for (long i : {0L, 1L}) {
    for (long m : {0L, 1L}) {
      auto S = hat_reduce(set_S_class(spec, i, m, 2));
      QuadNum estar = E_star_class(spec, i, m);
      long n0 = cutoff_N0(spec, i);
      for (long n = n0; n <= n0 + 2; ++n) {
        CHECK(index_I(spec, 2 + i + n * 8, m, S) <= estar);
      }
    }
  }
}
