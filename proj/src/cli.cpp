#include "balexp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "balexp/colouring.hpp"
#include "balexp/critexp.hpp"
#include "balexp/errors.hpp"

namespace balexp::cli {

using colouring::BalancedSpec;
using constant_gap::ConstantGapSeq;
using quadratic::QuadNum;
using sturmian::Slope;
using words::Word;

namespace {

const std::map<std::string, std::string>& fixture_map() {
  static const std::map<std::string, std::string> m = {
      {"x9",
       R"json({"slope":"0;2,3;(2)","y":"01","yp":"234567284365274863254768"})json"},
      {"lubka", R"json({"slope":"0;3,2;(3,1)","y":"01","yp":"234235"})json"},
      {"fib", R"json({"slope":"0;;(1)","y":"34","yp":"0102"})json"},
  };
  return m;
}

struct Expected {
  QuadNum E, Estar;
};

std::optional<Expected> fixture_expected(const std::string& name) {
  if (name == "x9")
    return Expected{QuadNum(7, 0, 6, 0), QuadNum(13, 2, 14, 2)};
  if (name == "lubka")
    return Expected{QuadNum(15, 0, 8, 0), QuadNum(15, 1, 12, 21)};
  return std::nullopt;
}

struct TableRow {
  int d;
  const char* slope;
  const char* y;
  const char* yp;
  QuadNum E, Estar;
};

std::vector<TableRow> table2_rows() {
  return {
      {3, "0;1;(2)", "0", "12", QuadNum(4, 1, 2, 2), QuadNum(4, 1, 2, 2)},
      {4, "0;;(1)", "01", "23", QuadNum(5, 1, 4, 5), QuadNum(5, 1, 4, 5)},
      {5, "0;1;(2)", "01", "2324", QuadNum(3, 0, 2, 0), QuadNum(3, 0, 2, 0)},
      {6, "0;2,1,1;(1,1,1,2)", "0", "123415321435", QuadNum(4, 0, 3, 0),
       QuadNum(4, 0, 3, 0)},
      {7, "0;1,3;(1,2,1)", "01", "234526432546", QuadNum(5, 0, 4, 0),
       QuadNum(5, 0, 4, 0)},
      {8, "0;3,1;(2)", "01", "234526732546237526432576", QuadNum(6, 0, 5, 0),
       QuadNum(12, 3, 14, 2)},
      {9, "0;2,3;(2)", "01", "234567284365274863254768", QuadNum(7, 0, 6, 0),
       QuadNum(13, 2, 14, 2)},
      {10, "0;4,2;(3)", "01", "234567284963254768294365274869",
       QuadNum(8, 0, 7, 0), QuadNum(26, 1, 26, 13)},
  };
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A value that starts with '{' is inline JSON, anything else a file path.
std::string load_json_text(const std::string& arg) {
  auto pos = arg.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && arg[pos] == '{') return arg;
  return read_file(arg);
}

BalancedSpec load_spec(const std::string& spec_arg,
                       const std::string& fixture_arg) {
  if (!fixture_arg.empty()) return BalancedSpec::parse(fixture_spec(fixture_arg));
  if (spec_arg.empty()) throw ValidationError("missing --spec or --fixture");
  return BalancedSpec::parse(load_json_text(spec_arg));
}

mpz_class mpz_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw ValidationError("expected an integer or integer string");
}

QuadNum quad_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") ||
      !j.contains("c") || !j.contains("D")) {
    throw ValidationError("expected {\"a\",\"b\",\"c\",\"D\"}");
  }
  return QuadNum(mpz_from_json(j.at("a")), mpz_from_json(j.at("b")),
                 mpz_from_json(j.at("c")), mpz_from_json(j.at("D")));
}

// Canonical forms make field equality the same as value equality, with no
// same-field restriction.
bool quad_equal(const QuadNum& x, const QuadNum& y) {
  return x.a() == y.a() && x.b() == y.b() && x.c() == y.c() && x.D() == y.D();
}

std::string show(const QuadNum& x) {
  return x.render() + " ~ " + x.approx_string();
}

int cmd_generate(const std::string& slope_str, long length,
                 std::ostream& out) {
  Slope slope = Slope::parse(slope_str);
  out << sturmian::generate_prefix(slope, static_cast<std::size_t>(length))
      << "\n";
  return 0;
}

int cmd_colour(const BalancedSpec& spec, long length, std::ostream& out) {
  out << colouring::colour_prefix(spec, static_cast<std::size_t>(length))
      << "\n";
  return 0;
}

int cmd_analyze(const BalancedSpec& spec, const std::string& format,
                std::ostream& out) {
  auto rep = critexp::E_total(spec);
  if (format == "table") {
    out << "E       = " << show(rep.E) << "\n";
    out << "E*      = " << show(rep.Estar) << "\n";
    out << "E_short = " << show(rep.E_short) << "\n";
    out << "h = " << rep.h << ", H = " << rep.H
        << ", classes = " << rep.classes.size() << "\n";
    out << "attained by " << rep.attained_by << "\n";
    if (rep.sturmian_fallback) out << "sturmian fallback (Per * Per' = 1)\n";
  } else {
    out << critexp::render_report(rep) << "\n";
  }
  return 0;
}

int cmd_asympt(const BalancedSpec& spec, std::ostream& out) {
  auto rep = critexp::E_total(spec);
  nlohmann::json j;
  j["Estar"] = nlohmann::json::parse(critexp::quad_json_text(rep.Estar));
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
    c["L"] = nlohmann::json::parse(critexp::quad_json_text(ce.L));
    c["Estar_im"] =
        nlohmann::json::parse(critexp::quad_json_text(ce.Estar_im));
    j["classes"].push_back(std::move(c));
  }
  if (rep.sturmian_fallback) j["sturmian_fallback"] = true;
  out << j.dump(2) << "\n";
  return 0;
}

// ---- verify ----------------------------------------------------------------

class Verifier {
 public:
  Verifier(std::ostream& out) : out_(out) {}

  template <typename Fn>
  void check(const std::string& name, Fn&& fn) {
    std::optional<std::string> fail;
    std::string note;
    try {
      fail = fn(note);
    } catch (const std::exception& e) {
      fail = std::string(e.what());
    }
    if (fail) {
      ++failures_;
      out_ << "FAIL " << name << ": " << *fail << "\n";
    } else {
      out_ << "ok   " << name;
      if (!note.empty()) out_ << " (" << note << ")";
      out_ << "\n";
    }
  }

  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

std::optional<std::string> balanced_windows(const Word& x, long maxw) {
  std::map<char, std::vector<int>> pre;
  for (auto& [c, cnt] : words::parikh(x)) {
    auto& v = pre[c];
    v.assign(x.size() + 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      v[i + 1] = v[i] + (x[i] == c ? 1 : 0);
    }
  }
  const long n = static_cast<long>(x.size());
  for (auto& [c, v] : pre) {
    for (long w = 1; w <= maxw && w <= n; ++w) {
      int lo = w + 1, hi = -1;
      for (long i = 0; i + w <= n; ++i) {
        int cnt = v[i + w] - v[i];
        lo = std::min(lo, cnt);
        hi = std::max(hi, cnt);
      }
      if (hi - lo > 1) {
        return "letter '" + std::string(1, c) + "' unbalanced in windows of length " +
               std::to_string(w);
      }
    }
  }
  return std::nullopt;
}

int cmd_verify(const BalancedSpec& spec, long oracle_prefix,
               const std::optional<Expected>& expected, std::ostream& out) {
  const auto n = static_cast<std::size_t>(oracle_prefix);
  Verifier v(out);
  const auto rep = critexp::E_total(spec);

  v.check("spec-roundtrip", [&](std::string&) -> std::optional<std::string> {
    std::string r = spec.render();
    if (BalancedSpec::parse(r).render() != r) return "parse(render(spec)) differs";
    return std::nullopt;
  });

  Word base = sturmian::generate_prefix(spec.slope(), n);
  Word col = colouring::colour_prefix(spec, n);

  v.check("projection-consistency",
          [&](std::string& note) -> std::optional<std::string> {
            if (colouring::project(spec, col) != base) {
              return "projection of the coloured prefix is not the base prefix";
            }
            note = "n=" + std::to_string(n);
            return std::nullopt;
          });

  v.check("balanced-windows",
          [&](std::string& note) -> std::optional<std::string> {
            note = "windows <= 40";
            return balanced_windows(col, 40);
          });

  v.check("phase-coverage",
          [&](std::string& note) -> std::optional<std::string> {
            const long pa = spec.y().per(), pb = spec.yp().per();
            std::set<std::pair<long, long>> seen;
            long na = 0, nb = 0;
            seen.insert({0, 0});
            for (char c : base) {
              (c == 'a' ? na : nb) += 1;
              seen.insert({na % pa, nb % pb});
            }
            if (static_cast<long>(seen.size()) != pa * pb) {
              return "only " + std::to_string(seen.size()) + " of " +
                     std::to_string(pa * pb) + " colour phases occur";
            }
            note = std::to_string(pa * pb) + " phases";
            return std::nullopt;
          });

  v.check("complexity-closed-form",
          [&](std::string& note) -> std::optional<std::string> {
            const long t = colouring::dendric_threshold(spec);
            for (long d : {0L, 1L, 4L}) {
              const long len = t + d;
              const long expect = spec.per_product() * (len + 1);
              bool matched = false;
              for (std::size_t L = 1u << 14; L <= (1u << 19); L <<= 1) {
                Word x = colouring::colour_prefix(spec, L);
                const auto got = static_cast<long>(
                    words::factor_set(x, static_cast<std::size_t>(len)).size());
                if (got == expect) {
                  matched = true;
                  break;
                }
                if (got > expect) {
                  return "n=" + std::to_string(len) + ": " +
                         std::to_string(got) + " factors, formula says " +
                         std::to_string(expect);
                }
              }
              if (!matched) {
                return "n=" + std::to_string(len) +
                       ": factor count below the closed form on every prefix tried";
              }
            }
            note = "threshold " + std::to_string(t);
            return std::nullopt;
          });

  v.check("return-word-count",
          [&](std::string& note) -> std::optional<std::string> {
            const long t = colouring::dendric_threshold(spec);
            const long expect = 1 + spec.per_product();
            for (long start : {0L, 1L, 2L}) {
              Word w = col.substr(static_cast<std::size_t>(start),
                                  static_cast<std::size_t>(t + start));
              bool matched = false;
              for (std::size_t L = 1u << 14; L <= (1u << 20); L <<= 1) {
                Word x = colouring::colour_prefix(spec, L);
                long got = 0;
                try {
                  got = static_cast<long>(
                      words::return_words_bruteforce(x, w).size());
                } catch (const std::invalid_argument&) {
                  continue;  // too few occurrences yet
                }
                if (got == expect) {
                  matched = true;
                  break;
                }
                if (got > expect) {
                  return "factor at " + std::to_string(start) + ": " +
                         std::to_string(got) + " return words, formula says " +
                         std::to_string(expect);
                }
              }
              if (!matched) {
                return "factor at " + std::to_string(start) +
                       ": return word count below 1 + Per*Per' on every prefix tried";
              }
            }
            note = "3 factors, count " + std::to_string(expect);
            return std::nullopt;
          });

  v.check("short-returns",
          [&](std::string& note) -> std::optional<std::string> {
            const auto universe = critexp::short_factor_universe(spec, rep.h);
            for (const Word& u : universe) {
              mpz_class formula = critexp::shortest_return_length(spec, u);
              if (formula == 0) {
                return "'" + u + "': empty candidate set on a recurrent sequence";
              }
              bool matched = false;
              for (std::size_t L = 1u << 14; L <= (1u << 19); L <<= 1) {
                Word b = sturmian::generate_prefix(spec.slope(), L);
                Word x = colouring::colour_prefix(spec, L);
                std::map<Word, std::size_t> last;
                mpz_class best = -1;
                for (std::size_t pos : words::occurrences(b, u)) {
                  Word cw = x.substr(pos, u.size());
                  auto it = last.find(cw);
                  if (it != last.end()) {
                    mpz_class gap(static_cast<unsigned long>(pos - it->second));
                    if (best < 0 || gap < best) best = gap;
                  }
                  last[cw] = pos;
                }
                if (best == formula) {
                  matched = true;
                  break;
                }
                if (best >= 0 && best < formula) {
                  return "'" + u + "': observed return " + best.get_str() +
                         " shorter than formula " + formula.get_str();
                }
              }
              if (!matched) {
                return "'" + u + "': formula value " + formula.get_str() +
                       " never observed";
              }
            }
            note = std::to_string(universe.size()) + " projections";
            return std::nullopt;
          });

  v.check("oracle-max-power",
          [&](std::string& note) -> std::optional<std::string> {
            auto fp = words::max_fractional_power(col, col.size() / 2);
            QuadNum oracle{fp.exponent};
            if (!(oracle <= rep.E)) {
              return "prefix power " + fp.exponent.get_str() + " exceeds E = " +
                     rep.E.render();
            }
            note = "prefix max " + fp.exponent.get_str() + " <= E ~ " +
                   rep.E.approx_string();
            return std::nullopt;
          });

  if (expected) {
    v.check("expected-exponents",
            [&](std::string& note) -> std::optional<std::string> {
              if (!quad_equal(rep.E, expected->E)) {
                return "E = " + show(rep.E) + ", expected " + show(expected->E);
              }
              if (!quad_equal(rep.Estar, expected->Estar)) {
                return "Estar = " + show(rep.Estar) + ", expected " +
                       show(expected->Estar);
              }
              note = "E = " + rep.E.render() + ", Estar = " + rep.Estar.render();
              return std::nullopt;
            });
  }

  if (v.failures() > 0) {
    out << "verify: " << v.failures() << " check(s) failed\n";
    return 3;
  }
  out << "verify: all checks passed\n";
  return 0;
}

int cmd_table2(std::ostream& out) {
  int mismatches = 0;
  for (const auto& row : table2_rows()) {
    BalancedSpec spec(Slope::parse(row.slope), ConstantGapSeq::validate(row.y),
                      ConstantGapSeq::validate(row.yp));
    auto rep = critexp::E_total(spec);
    bool ok_e = quad_equal(rep.E, row.E);
    bool ok_es = quad_equal(rep.Estar, row.Estar);
    out << "d=" << row.d << "  E = " << show(rep.E)
        << (ok_e ? "" : "  MISMATCH, expected " + show(row.E))
        << "  E* = " << show(rep.Estar)
        << (ok_es ? "" : "  MISMATCH, expected " + show(row.Estar)) << "\n";
    if (!ok_e || !ok_es) ++mismatches;
  }
  if (mismatches > 0) {
    out << "table2: " << mismatches << " row(s) mismatch\n";
    return 3;
  }
  out << "table2: all 8 rows match\n";
  return 0;
}

}  // namespace

const std::string& fixture_spec(const std::string& name) {
  auto it = fixture_map().find(name);
  if (it == fixture_map().end()) {
    throw ValidationError("unknown fixture: " + name);
  }
  return it->second;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : fixture_map()) names.push_back(k);
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"balanced sequences: construction and exact critical exponents"};
  app.require_subcommand(1);

  std::string g_slope;
  long g_length = 0;
  auto* gen = app.add_subcommand(
      "generate", "print a prefix of the Sturmian sequence of a slope");
  gen->add_option("--slope", g_slope, "slope \"0;a1,...;(z0,...)\"")
      ->required();
  gen->add_option("--length", g_length, "prefix length")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string c_spec, c_fixture;
  long c_length = 0;
  auto* clr = app.add_subcommand(
      "colour", "print a prefix of the balanced sequence of a spec");
  clr->add_option("--spec", c_spec, "spec JSON (inline or file path)");
  clr->add_option("--fixture", c_fixture, "bundled spec name");
  clr->add_option("--length", c_length, "prefix length")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string a_spec, a_fixture, a_format = "json";
  auto* ana = app.add_subcommand(
      "analyze", "exact critical exponent report for a spec");
  ana->add_option("--spec", a_spec, "spec JSON (inline or file path)");
  ana->add_option("--fixture", a_fixture, "bundled spec name");
  ana->add_option("--format", a_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string s_spec, s_fixture;
  auto* asy = app.add_subcommand(
      "asympt", "exact asymptotic critical exponent for a spec");
  asy->add_option("--spec", s_spec, "spec JSON (inline or file path)");
  asy->add_option("--fixture", s_fixture, "bundled spec name");

  std::string v_spec, v_fixture, v_expect;
  long v_prefix = 10000;
  auto* ver = app.add_subcommand(
      "verify", "run the property checks for a spec against brute force");
  ver->add_option("--spec", v_spec, "spec JSON (inline or file path)");
  ver->add_option("--fixture", v_fixture, "bundled spec name");
  ver->add_option("--oracle-prefix", v_prefix, "oracle prefix length")
      ->check(CLI::PositiveNumber);
  ver->add_option("--expect", v_expect,
                  "expected exponents JSON {\"E\":{...},\"Estar\":{...}}");

  auto* tab = app.add_subcommand(
      "table2", "recompute the bundled least-exponent table and diff it");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(g_slope, g_length, out);
    if (clr->parsed()) {
      return cmd_colour(load_spec(c_spec, c_fixture), c_length, out);
    }
    if (ana->parsed()) {
      return cmd_analyze(load_spec(a_spec, a_fixture), a_format, out);
    }
    if (asy->parsed()) return cmd_asympt(load_spec(s_spec, s_fixture), out);
    if (ver->parsed()) {
      std::optional<Expected> expected;
      if (!v_expect.empty()) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(load_json_text(v_expect));
        } catch (const nlohmann::json::parse_error& e) {
          throw ValidationError(std::string("expected-value JSON: ") +
                                e.what());
        }
        if (!j.contains("E") || !j.contains("Estar")) {
          throw ValidationError("expected-value JSON needs \"E\" and \"Estar\"");
        }
        expected = Expected{quad_from_json(j.at("E")),
                            quad_from_json(j.at("Estar"))};
      } else if (!v_fixture.empty()) {
        expected = fixture_expected(v_fixture);
      }
      return cmd_verify(load_spec(v_spec, v_fixture), v_prefix, expected, out);
    }
    if (tab->parsed()) return cmd_table2(out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace balexp::cli
