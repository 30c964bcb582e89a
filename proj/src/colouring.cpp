#include "balexp/colouring.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "json.hpp"

#include "balexp/errors.hpp"

namespace balexp::colouring {

BalancedSpec::BalancedSpec(Slope slope, ConstantGapSeq y, ConstantGapSeq yp,
                           long shift_y, long shift_yp)
    : slope_(std::move(slope)),
      y_(std::move(y)),
      yp_(std::move(yp)),
      shift_y_(shift_y),
      shift_yp_(shift_yp) {
  for (const auto& [c, gap] : y_.letter_gaps()) {
    if (yp_.letter_gaps().count(c)) {
      throw ValidationError(std::string("colouring alphabets overlap at '") +
                            c + "'");
    }
  }
  if (shift_y_ < 0 || shift_y_ >= y_.per()) {
    throw ValidationError("shift_y out of range [0, Per(y))");
  }
  if (shift_yp_ < 0 || shift_yp_ >= yp_.per()) {
    throw ValidationError("shift_yp out of range [0, Per(yp))");
  }
}

BalancedSpec BalancedSpec::parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("slope") || !j.contains("y") ||
      !j.contains("yp")) {
    throw ValidationError("spec must be an object with slope, y, yp");
  }
  try {
    Slope slope = Slope::parse(j.at("slope").get<std::string>());
    ConstantGapSeq y = ConstantGapSeq::validate(j.at("y").get<std::string>());
    ConstantGapSeq yp = ConstantGapSeq::validate(j.at("yp").get<std::string>());
    long sy = j.value("shift_y", 0);
    long syp = j.value("shift_yp", 0);
    return BalancedSpec(std::move(slope), std::move(y), std::move(yp), sy,
                        syp);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed spec field: ") + e.what());
  }
}

std::string BalancedSpec::render() const {
  nlohmann::json j;
  j["slope"] = slope_.render();
  j["y"] = y_.period_word();
  j["yp"] = yp_.period_word();
  j["shift_y"] = shift_y_;
  j["shift_yp"] = shift_yp_;
  return j.dump();
}

Word colour_prefix(const BalancedSpec& spec, std::size_t length) {
  Word base = sturmian::generate_prefix(spec.slope(), length);
  Word out;
  out.reserve(base.size());
  std::size_t na = 0, nb = 0;
  for (char c : base) {
    if (c == 'a') {
      out += spec.y().at(static_cast<std::size_t>(spec.shift_y()) + na++);
    } else {
      out += spec.yp().at(static_cast<std::size_t>(spec.shift_yp()) + nb++);
    }
  }
  return out;
}

Word project(const BalancedSpec& spec, WordView v) {
  Word out;
  out.reserve(v.size());
  for (char c : v) {
    if (spec.is_y_letter(c)) {
      out += 'a';
    } else if (spec.is_yp_letter(c)) {
      out += 'b';
    } else {
      throw ValidationError(std::string("letter '") + c +
                            "' is in neither colouring alphabet");
    }
  }
  return out;
}

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

}  // namespace

StructuralCount preimage_count(const BalancedSpec& spec, WordView u) {
  auto [na, nb] = parikh_ab(u);
  StructuralCount r;
  r.long_regime = na > spec.y().beta() && nb > spec.yp().beta();
  r.value = spec.y().complexity(na) * spec.yp().complexity(nb);
  return r;
}

long dendric_threshold(const BalancedSpec& spec) {
  const quadratic::QuadNum theta = spec.slope().value();
  long longest = 0;
  // Longest factor with at most beta(y) a's, and the symmetric bound.
  for (long l = 0; l <= spec.y().beta(); ++l) {
    longest = std::max(longest, l + sturmian::max_k_for_l(theta, l));
  }
  for (long k = 0; k <= spec.yp().beta(); ++k) {
    longest = std::max(longest, k + sturmian::max_l_for_k(theta, k));
  }
  return longest + 1;
}

StructuralCount complexity(const BalancedSpec& spec, long n) {
  if (n < 0) throw ValidationError("complexity: negative length");
  StructuralCount r;
  if (n >= dendric_threshold(spec)) {
    r.long_regime = true;
    r.value = spec.per_product() * (n + 1);
    return r;
  }
  std::size_t len =
      sturmian::saturated_prefix_len(spec.slope(), static_cast<std::size_t>(n));
  Word prefix = sturmian::generate_prefix(spec.slope(), len);
  r.long_regime = false;
  r.value = 0;
  for (const Word& w :
       words::factor_set(prefix, static_cast<std::size_t>(n))) {
    r.value += preimage_count(spec, w).value;
  }
  return r;
}

StructuralCount return_word_count(const BalancedSpec& spec, WordView u) {
  auto [na, nb] = parikh_ab(u);
  StructuralCount r;
  r.long_regime = na > spec.y().beta() && nb > spec.yp().beta();
  r.value = r.long_regime ? 1 + spec.per_product() : 0;
  return r;
}

}  // namespace balexp::colouring
