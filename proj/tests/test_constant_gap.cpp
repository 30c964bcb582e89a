#include <map>
#include <set>
#include <string>

#include "doctest.h"

#include "balexp/constant_gap.hpp"
#include "balexp/errors.hpp"

using balexp::ValidationError;
using balexp::constant_gap::ConstantGapSeq;

namespace {
const char* kY9 = "234567284365274863254768";  // 7 letters, period 24
}

TEST_CASE("validate accepts constant gap words") {
  for (const char* w : {"01", "0102", "234235", "0", "232425"}) {
    CHECK_NOTHROW(ConstantGapSeq::validate(w));
  }
  CHECK(ConstantGapSeq::validate(kY9).per() == 24);

  // A repeated minimal period is accepted and reduced.
  ConstantGapSeq g = ConstantGapSeq::validate("0101");
  CHECK(g.period_word() == "01");
  CHECK(g.per() == 2);
}

TEST_CASE("validate rejects words with a non-constant letter gap") {
  CHECK_THROWS_AS(ConstantGapSeq::validate("011"), ValidationError);
  CHECK_THROWS_AS(ConstantGapSeq::validate("010"), ValidationError);
  CHECK_THROWS_AS(ConstantGapSeq::validate("0120"), ValidationError);
  CHECK_THROWS_AS(ConstantGapSeq::validate(""), ValidationError);
  try {
    ConstantGapSeq::validate("011");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()) == "constant gap: letter '1' has gaps 1 and 2");
  }
}

TEST_CASE("letter gaps") {
  CHECK(ConstantGapSeq::validate("0102").letter_gaps() ==
        std::map<char, long>{{'0', 2}, {'1', 4}, {'2', 4}});
  CHECK(ConstantGapSeq::validate("234235").letter_gaps() ==
        std::map<char, long>{{'2', 3}, {'3', 3}, {'4', 6}, {'5', 6}});
  CHECK(ConstantGapSeq::validate(kY9).letter_gaps() ==
        std::map<char, long>{{'2', 6}, {'3', 8}, {'4', 6}, {'5', 8},
                             {'6', 6}, {'7', 8}, {'8', 8}});
}

TEST_CASE("beta: length of the longest bispecial factor") {
  CHECK(ConstantGapSeq::validate("0102").beta() == 1);
  CHECK(ConstantGapSeq::validate("234235").beta() == 2);
  CHECK(ConstantGapSeq::validate("232425").beta() == 1);
  CHECK(ConstantGapSeq::validate(kY9).beta() == 1);
  CHECK(ConstantGapSeq::validate("01").beta() == 0);
  CHECK(ConstantGapSeq::validate("0").beta() == 0);
}

TEST_CASE("positions and factors are cyclic") {
  ConstantGapSeq y = ConstantGapSeq::validate("0102");
  CHECK(y.at(0) == '0');
  CHECK(y.at(5) == '1');
  CHECK(y.at(1000003) == '2');
  CHECK(y.is_factor("20"));
  CHECK(y.is_factor("0102010"));
  CHECK_FALSE(y.is_factor("11"));
  CHECK(y.is_factor(""));
}

TEST_CASE("gap of a factor is the lcm of its letter gaps") {
  ConstantGapSeq y = ConstantGapSeq::validate("0102");
  CHECK(y.gap_of_factor("") == 1);
  CHECK(y.gap_of_factor("0") == 2);
  CHECK(y.gap_of_factor("01") == 4);
  CHECK(y.gap_of_factor("2") == 4);
  CHECK_THROWS_AS(y.gap_of_factor("11"), ValidationError);
}

TEST_CASE("gap sets stabilize to {Per} beyond beta") {
  ConstantGapSeq y = ConstantGapSeq::validate("0102");
  CHECK(y.gap_set(0) == std::set<long>{1});
  CHECK(y.gap_set(1) == std::set<long>{2, 4});
  CHECK(y.gap_set(2) == std::set<long>{4});
  CHECK(y.gap_set(9) == std::set<long>{4});

  ConstantGapSeq y9 = ConstantGapSeq::validate(kY9);
  CHECK(y9.gap_set(1) == std::set<long>{6, 8});
  CHECK(y9.gap_set(2) == std::set<long>{24});

  ConstantGapSeq yl = ConstantGapSeq::validate("234235");
  CHECK(yl.gap_set(1) == std::set<long>{3, 6});
  CHECK(yl.gap_set(2) == std::set<long>{3, 6});
  CHECK(yl.gap_set(3) == std::set<long>{6});
}

TEST_CASE("complexity saturates at Per") {
  ConstantGapSeq y = ConstantGapSeq::validate("0102");
  CHECK(y.complexity(0) == 1);
  CHECK(y.complexity(1) == 3);
  CHECK(y.complexity(2) == 4);
  CHECK(y.complexity(3) == 4);
  CHECK(y.complexity(100) == 4);

  ConstantGapSeq y9 = ConstantGapSeq::validate(kY9);
  CHECK(y9.complexity(1) == 7);
  CHECK(y9.complexity(2) == 24);
  CHECK(y9.complexity(24) == 24);
}
