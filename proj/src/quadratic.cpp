#include "balexp/quadratic.hpp"

#include <stdexcept>
#include <utility>

namespace balexp::quadratic {

namespace {

// Splits d = s^2 * m with m squarefree and returns (m, s). Square factors are
// found by trial division up to 4096 plus a perfect-square check, which covers
// every discriminant below 2^24 completely (far beyond the period-matrix
// traces arising here).
std::pair<mpz_class, mpz_class> squarefree_split(mpz_class d) {
  mpz_class s = 1;
  for (long p = 2; p <= 4096 && mpz_class(p) * p <= d; p = (p == 2) ? 3 : p + 2) {
    mpz_class pp = mpz_class(p) * p;
    while (d % pp == 0) {
      d /= pp;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    s *= r;
    d = 1;
  }
  return {d, s};
}

// Sign of a + b*sqrt(d), d > 0 non-square.
int sign_of(const mpz_class& a, const mpz_class& b, const mpz_class& d) {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 * d.
  int cmp2 = cmp(a * a, b * b * d);
  if (cmp2 == 0) return 0;  // impossible for squarefree d > 1, kept for safety
  return (cmp2 > 0) ? sa : sb;
}

}  // namespace

QuadNum::QuadNum(const mpq_class& v)
    : a_(v.get_num()), b_(0), c_(v.get_den()), d_(0) {
  normalize();
}

QuadNum::QuadNum(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw std::domain_error("QuadNum: zero denominator");
  if (d_ < 0) throw std::domain_error("QuadNum: negative discriminant");
  normalize();
}

void QuadNum::normalize() {
  if (d_ == 0 || d_ == 1) {
    if (d_ == 1) a_ += b_;
    b_ = 0;
    d_ = 0;
  } else if (b_ != 0) {
    auto [m, s] = squarefree_split(d_);
    d_ = m;
    b_ *= s;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
  } else {
    d_ = 0;
  }
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  mpz_class g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

mpq_class QuadNum::as_rational() const {
  if (!is_rational()) throw std::domain_error("QuadNum: irrational value");
  mpq_class q(a_, c_);
  q.canonicalize();
  return q;
}

int QuadNum::sign() const {
  if (b_ == 0) return sgn(a_);
  return sign_of(a_, b_, d_);
}

QuadNum QuadNum::abs() const { return sign() < 0 ? -*this : *this; }

QuadNum QuadNum::operator-() const {
  QuadNum r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

namespace {

// Common discriminant of two normalized values; rational operands adopt the
// other side's field.
mpz_class common_d(const QuadNum& x, const QuadNum& y) {
  if (x.D() == 0) return y.D();
  if (y.D() == 0 || x.D() == y.D()) return x.D();
  throw std::domain_error("QuadNum: mixing distinct quadratic fields");
}

}  // namespace

QuadNum QuadNum::operator+(const QuadNum& o) const {
  mpz_class d = common_d(*this, o);
  return QuadNum(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_, d);
}

QuadNum QuadNum::operator-(const QuadNum& o) const { return *this + (-o); }

QuadNum QuadNum::operator*(const QuadNum& o) const {
  mpz_class d = common_d(*this, o);
  return QuadNum(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, c_ * o.c_,
                 d);
}

QuadNum QuadNum::operator/(const QuadNum& o) const {
  if (o.sign() == 0) throw std::domain_error("QuadNum: division by zero");
  mpz_class d = common_d(*this, o);
  // 1/((a + b*sqrt(d))/c) = c * (a - b*sqrt(d)) / (a^2 - b^2 d)
  mpz_class norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
  QuadNum inv(o.c_ * o.a_, -o.c_ * o.b_, norm, d);
  return *this * inv;
}

int QuadNum::cmp(const QuadNum& o) const {
  mpz_class d = common_d(*this, o);
  mpz_class A = a_ * o.c_ - o.a_ * c_;
  mpz_class B = b_ * o.c_ - o.b_ * c_;
  if (B == 0) return sgn(A);
  return sign_of(A, B, d);
}

double QuadNum::to_double() const {
  mpf_class f(0, 256);
  if (b_ != 0) {
    mpf_class root(d_, 256);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    f = mpf_class(b_, 256) * root;
  }
  f += mpf_class(a_, 256);
  f /= mpf_class(c_, 256);
  return f.get_d();
}

std::string QuadNum::approx_string() const {
  mpf_class f(0, 256);
  if (b_ != 0) {
    mpf_class root(d_, 256);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    f = mpf_class(b_, 256) * root;
  }
  f += mpf_class(a_, 256);
  f /= mpf_class(c_, 256);

  mp_exp_t exp10 = 0;
  char* raw = mpf_get_str(nullptr, &exp10, 10, 12, f.get_mpf_t());
  std::string digits(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, digits.size() + 1);

  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  if (digits.empty()) return "0";
  digits.resize(12, '0');

  std::string out;
  if (exp10 >= 1 && exp10 <= 12) {
    out = digits.substr(0, static_cast<std::size_t>(exp10)) + "." +
          digits.substr(static_cast<std::size_t>(exp10));
  } else if (exp10 <= 0 && exp10 > -4) {
    out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + digits;
  } else {
    out = digits.substr(0, 1) + "." + digits.substr(1) + "e" +
          std::to_string(exp10 - 1);
  }
  while (out.find('.') != std::string::npos && out.back() == '0')
    out.pop_back();
  if (out.back() == '.') out.pop_back();
  return neg ? "-" + out : out;
}

std::string QuadNum::render() const {
  if (is_rational()) {
    std::string s = a_.get_str();
    if (c_ != 1) s += "/" + c_.get_str();
    return s;
  }
  std::string s = "(" + a_.get_str();
  s += (b_ < 0) ? " - " : " + ";
  s += mpz_class(::abs(b_)).get_str() + "*sqrt(" + d_.get_str() + ")";
  s += ")/" + c_.get_str();
  return s;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {e00 * o.e00 + e01 * o.e10, e00 * o.e01 + e01 * o.e11,
          e10 * o.e00 + e11 * o.e10, e10 * o.e01 + e11 * o.e11};
}

Mat2 period_matrix(const std::vector<long>& per, std::size_t rot) {
  if (per.empty()) throw std::invalid_argument("period_matrix: empty period");
  Mat2 m = Mat2::identity();
  for (std::size_t j = 0; j < per.size(); ++j) {
    m = m * Mat2::cf_step(per[(rot + j) % per.size()]);
  }
  return m;
}

EigenPair nondominant_eigen(const Mat2& m) {
  if (m.e01 == 0) {
    throw std::domain_error("nondominant_eigen: requires e01 != 0");
  }
  mpz_class tr = m.trace();
  mpz_class disc = tr * tr - 4 * m.det();
  if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t())) {
    throw std::domain_error("nondominant_eigen: discriminant not positive "
                            "non-square");
  }
  // Roots (tr +- sqrt(disc))/2; the non-dominant one is the smaller in
  // absolute value.
  QuadNum plus(tr, 1, 2, disc);
  QuadNum minus(tr, -1, 2, disc);
  QuadNum lambda = (plus.abs() < minus.abs()) ? plus : minus;
  EigenPair e;
  e.eigvec_x = QuadNum(m.e01);
  e.eigvec_y = lambda - QuadNum(m.e00);
  e.lambda = std::move(lambda);
  return e;
}

QuadNum limit_L(const Mat2& m) {
  EigenPair e = nondominant_eigen(m);
  return -e.eigvec_y / e.eigvec_x;
}

QuadNum periodic_cf_value(const std::vector<long>& pre,
                          const std::vector<long>& per) {
  if (per.empty()) {
    throw std::invalid_argument("periodic_cf_value: empty period");
  }
  for (long z : per) {
    if (z < 1) throw std::invalid_argument("periodic_cf_value: coefficient < 1");
  }
  for (long a : pre) {
    if (a < 1) throw std::invalid_argument("periodic_cf_value: coefficient < 1");
  }

  // Purely periodic tail y = [0; (per)] satisfies y = (T00 y + T01)/(T10 y + T11)
  // for the period matrix T, hence T10 y^2 + (T11 - T00) y - T01 = 0 and
  // y = ((T00 - T11) + sqrt(tr^2 - 4 det)) / (2 T10), the positive root.
  Mat2 t = period_matrix(per, 0);
  mpz_class tr = t.trace();
  mpz_class disc = tr * tr - 4 * t.det();
  QuadNum y(t.e00 - t.e11, 1, 2 * t.e10, disc);

  // Prepend the preperiod, one Moebius step x -> 1/(a + x) at a time,
  // innermost coefficient first.
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    y = QuadNum(1) / (QuadNum(*it) + y);
  }
  return y;
}

}  // namespace balexp::quadratic
