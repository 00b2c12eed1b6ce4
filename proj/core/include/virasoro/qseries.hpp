#pragma once

#include <complex>
#include <span>
#include <vector>

#include "virasoro/rational.hpp"

namespace virasoro {

// A truncated q-expansion
//
//     q^alpha * (a_0 + a_1 q + ... + a_N q^N)
//
// with exact rational coefficients. The fractional part of an exponent lives
// entirely in the rational prefactor exponent alpha; coefficient indices are
// always integers. Values are immutable after construction, and every
// operation is a pure function, so concurrent use is safe.
//
// Truncation semantics: a series is exactly known on exponents up to
// alpha + N (and is exactly zero below alpha). Binary operations return a
// result valid on the overlap of the operands' valid ranges, i.e. the
// truncation order of the result is the minimum of the operands' orders
// after exponent alignment.
class QExpansion {
 public:
  // coefficients[n] multiplies q^{leading_exponent + n}; must be nonempty.
  QExpansion(Rational leading_exponent, std::vector<Rational> coefficients);

  static QExpansion zero(int order);
  static QExpansion one(int order);
  static QExpansion constant(const Rational& value, int order);

  const Rational& leading_exponent() const noexcept { return leading_exponent_; }
  int truncation_order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  std::span<const Rational> coefficients() const noexcept { return coefficients_; }
  const Rational& coefficient(int n) const;  // bounds-checked

  // True when every stored coefficient is an integer. Characters and
  // partition-type series must satisfy this; the query makes the property
  // checkable coefficient-by-coefficient.
  bool is_integral() const;
  bool is_zero() const;

  // Multiply by q^delta: same coefficients, shifted leading exponent.
  QExpansion shifted(const Rational& delta) const;
  // Restriction to a smaller truncation order.
  QExpansion truncated(int order) const;

 private:
  Rational leading_exponent_;
  std::vector<Rational> coefficients_;
};

// Exact structural equality: same leading exponent, same truncation order,
// identical coefficients.
bool operator==(const QExpansion& f, const QExpansion& g);

// Sum after aligning leading exponents. The exponents must differ by an
// integer (all series arising here share a common fractional prefactor);
// a non-integral difference throws std::domain_error.
QExpansion add(const QExpansion& f, const QExpansion& g);
QExpansion sub(const QExpansion& f, const QExpansion& g);

// Cauchy product; leading exponents add.
QExpansion mul(const QExpansion& f, const QExpansion& g);

QExpansion scale(const Rational& value, const QExpansion& f);

// Multiplicative inverse: f * invert(f) == 1 up to truncation, leading
// exponent negates. Throws std::domain_error when a_0 == 0.
QExpansion invert(const QExpansion& f);

// Formal power f^mu for any rational mu, via the logarithmic-derivative
// recurrence mu f' g = f g'. Requires constant term exactly 1 and leading
// exponent 0; throws std::domain_error otherwise.
QExpansion pow_rational(const QExpansion& f, const Rational& mu);

QExpansion operator+(const QExpansion& f, const QExpansion& g);
QExpansion operator-(const QExpansion& f, const QExpansion& g);
QExpansion operator*(const QExpansion& f, const QExpansion& g);
QExpansion operator*(const Rational& value, const QExpansion& f);

// prod_{n >= min_part} (1 - q^n), truncated at the given order. For
// min_part = 1 the coefficients are the sparse +-1 pattern supported on the
// generalized pentagonal numbers.
QExpansion euler_product(int order, int min_part = 1);

// p(0), ..., p(max_n) by the Euler pentagonal recurrence. Exact big
// integers; equals the coefficients of invert(euler_product(max_n, 1)).
std::vector<Integer> partition_numbers(int max_n);

// Leading asymptotic e^{pi sqrt(2n/3)} / (4 n sqrt(3)) of p(n). Requires
// n >= 1 (the formula divides by n).
double hardy_ramanujan(long n);

// eta^x as a q-expansion: leading exponent x/24, coefficient part the x-th
// power of the Euler product.
QExpansion eta_power(const Rational& x, int order);

struct Evaluation {
  std::complex<double> value;
  // Magnitude of the contribution of the last ceil(N/4) stored terms. A
  // truncation heuristic, not a bound; compare evaluations at orders N and
  // 2N for an actual consistency check.
  double tail_estimate = 0.0;
};

// Partial sum sum_n a_n q^{alpha+n} at q = e^{2 pi i tau}. Requires
// Im(tau) > 0; throws std::domain_error otherwise.
Evaluation evaluate_with_error(const QExpansion& f, std::complex<double> tau);

namespace detail {
// Plain big-rational recurrence behind pow_rational, without the scaled
// integer fast path. Kept visible so tests can pin the two routes against
// each other.
QExpansion pow_rational_generic(const QExpansion& f, const Rational& mu);
}  // namespace detail

}  // namespace virasoro
