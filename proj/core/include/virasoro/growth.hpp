#pragma once

#include <optional>
#include <span>
#include <vector>

#include "virasoro/minimal_models.hpp"
#include "virasoro/qseries.hpp"

namespace virasoro {

enum class GrowthModel { power_law, stretched_exponential };

// Least-squares fit of ln a_n against ln n (power_law, parameter = alpha in
// n^alpha) or against sqrt(n) (stretched_exponential, parameter = K in
// e^{K sqrt n}). residual is the mean squared error of the log fit.
struct GrowthFit {
  GrowthModel model = GrowthModel::power_law;
  double parameter = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  long window_lo = 0;  // first and last index actually used
  long window_hi = 0;
  long points = 0;
};

enum class GrowthTag { polynomial, superpolynomial, inconclusive };

// The verdict is superpolynomial only when the stretched-exponential
// residual is at most half the power-law residual, polynomial only in the
// mirrored case, inconclusive otherwise. Both fits are kept for audit.
struct GrowthVerdict {
  GrowthTag tag = GrowthTag::inconclusive;
  GrowthFit power_law;
  GrowthFit stretched;
};

// alpha_n = ln(a_n) / ln(n) for n >= 2; entries 0 and 1 are NaN so indices
// stay aligned with the input. Nonpositive values at n >= 2 throw
// std::domain_error.
std::vector<double> running_exponent(std::span<const Rational> coeffs);
std::vector<double> running_exponent(std::span<const double> coeffs);

// Model selection over indices [window_lo, window_hi]. Indices below 32 are
// excluded to suppress small-n transients, zero entries are skipped (their
// log is undefined), negative entries throw. Fewer than 16 usable points is
// a degenerate window and throws std::domain_error.
GrowthVerdict classify_growth(std::span<const Rational> coeffs, long window_lo, long window_hi);
GrowthVerdict classify_growth(std::span<const double> coeffs, long window_lo, long window_hi);

// Smallest n in [1, max_n] with a_n > n^{alpha_target}, where a_n are the
// coefficients of 1 / prod_{n>1} (1-q^n)^{mu} expanded exactly; nullopt when
// no index qualifies. Requires mu > 0.
std::optional<long> lemma_la_witness(const Rational& mu, double alpha_target, int max_n);

std::vector<Rational> partial_sums(std::span<const Rational> coeffs);

// Growth comparison of the two eta-scaled vacuum characters of a model with
// c < 1:
//   A = eta^c * (vacuum Verma-quotient character), which must equal
//       (1-q)^c / prod_{n>1}(1-q^n)^{1-c} coefficientwise (checked exactly;
//       a mismatch throws std::logic_error), and
//   B = eta^{c_tilde} * (irreducible vacuum character).
// Eta scaling makes the coefficients oscillate in sign, so the fits run on
// the cumulative sums sum_{i<=n} |a_i| (monotone, and polynomially bounded
// exactly when the coefficients are) over the window [100, 3*order/4].
// Expected outcome: A superpolynomial, B polynomial.
struct KeyLemmaReport {
  MinimalModel model;
  int order = 0;
  GrowthVerdict verma_quotient_side;  // A
  GrowthVerdict irreducible_side;     // B
};

KeyLemmaReport key_lemma_comparison(long p, long q, int order);

}  // namespace virasoro
