// Exact arithmetic in a real quadratic field: values (a + b*sqrt(D))/c with
// integer a, b, c stored canonically (c > 0, gcd(a, b, c) = 1, D squarefree,
// and D = 0 exactly when the value is rational). Comparisons, and therefore
// every sup/max in the exponent machinery, are decided by integer sign
// analysis, never by floating point.

#ifndef BALEXP_QUADRATIC_HPP
#define BALEXP_QUADRATIC_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

namespace balexp::quadratic {

class QuadNum {
 public:
  QuadNum() : a_(0), b_(0), c_(1), d_(0) {}
  QuadNum(long v) : a_(v), b_(0), c_(1), d_(0) {}  // NOLINT: implicit by design
  explicit QuadNum(const mpz_class& v) : a_(v), b_(0), c_(1), d_(0) {}
  explicit QuadNum(const mpq_class& v);

  // (a + b*sqrt(d)) / c, normalized. Requires d >= 0 and c != 0; square
  // factors of d are folded into b (d itself squarefree afterwards).
  QuadNum(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& D() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  // Exact rational value; throws std::domain_error when irrational.
  mpq_class as_rational() const;

  int sign() const;
  QuadNum abs() const;

  QuadNum operator-() const;
  QuadNum operator+(const QuadNum& o) const;
  QuadNum operator-(const QuadNum& o) const;
  QuadNum operator*(const QuadNum& o) const;
  // Throws std::domain_error on division by zero.
  QuadNum operator/(const QuadNum& o) const;

  // Total order on the real values. Operands must live in the same field:
  // equal D, or at least one side rational.
  int cmp(const QuadNum& o) const;
  bool operator==(const QuadNum& o) const { return cmp(o) == 0; }
  bool operator!=(const QuadNum& o) const { return cmp(o) != 0; }
  bool operator<(const QuadNum& o) const { return cmp(o) < 0; }
  bool operator<=(const QuadNum& o) const { return cmp(o) <= 0; }
  bool operator>(const QuadNum& o) const { return cmp(o) > 0; }
  bool operator>=(const QuadNum& o) const { return cmp(o) >= 0; }

  double to_double() const;
  // Decimal approximation with 12 significant digits, display only.
  std::string approx_string() const;
  // "p" or "p/q" for rationals, "(a + b*sqrt(D))/c" otherwise.
  std::string render() const;

 private:
  void normalize();

  mpz_class a_, b_, c_, d_;
};

struct Mat2 {
  mpz_class e00, e01, e10, e11;

  Mat2 operator*(const Mat2& o) const;
  mpz_class trace() const { return e00 + e11; }
  mpz_class det() const { return e00 * e11 - e01 * e10; }
  static Mat2 identity() { return {1, 0, 0, 1}; }
  // Continued fraction step matrix [[0,1],[1,z]].
  static Mat2 cf_step(long z) { return {0, 1, 1, z}; }
  bool operator==(const Mat2& o) const = default;
};

// Value of [0; pre[0], ..., pre[h-1], (per[0], ..., per[M-1])] as an exact
// quadratic irrational. All coefficients must be >= 1 and per non-empty.
// The discriminant comes from the period matrix: trace^2 - 4*det.
QuadNum periodic_cf_value(const std::vector<long>& pre,
                          const std::vector<long>& per);

// Product cf_step(per[rot]) * cf_step(per[rot+1]) * ... over one full period,
// indices mod per.size().
Mat2 period_matrix(const std::vector<long>& per, std::size_t rot);

struct EigenPair {
  QuadNum lambda;            // eigenvalue of smaller absolute value
  QuadNum eigvec_x, eigvec_y;  // eigenvector (e01, lambda - e00)
};

// Non-dominant eigenpair of an integer 2x2 matrix with e01 != 0 and
// non-square positive discriminant trace^2 - 4*det.
EigenPair nondominant_eigen(const Mat2& m);

// L = -y/x for the non-dominant eigenvector (x, y); for a period matrix this
// is the limit of back-to-front convergent-sum ratios, and 0 < L < 1.
QuadNum limit_L(const Mat2& m);

}  // namespace balexp::quadratic

#endif  // BALEXP_QUADRATIC_HPP
