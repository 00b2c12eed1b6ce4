#include "virasoro/growth.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "virasoro/characters.hpp"

namespace virasoro {

namespace {

constexpr long kSmallIndexCutoff = 32;  // below this both fit models are degenerate
constexpr long kMinFitPoints = 16;

// (n, ln a_n) pairs from a window; zero entries are skipped, negatives are a
// contract violation.
struct LogSeries {
  std::vector<long> index;
  std::vector<double> log_value;
};

LogSeries window_logs(long size, long window_lo, long window_hi,
                      const std::function<int(long)>& sign_of,
                      const std::function<double(long)>& log_of) {
  LogSeries out;
  const long lo = std::max(window_lo, kSmallIndexCutoff);
  const long hi = std::min(window_hi, size - 1);
  for (long n = lo; n <= hi; ++n) {
    const int sign = sign_of(n);
    if (sign < 0) {
      throw std::domain_error("growth fits require nonnegative values in the window");
    }
    if (sign == 0) continue;
    out.index.push_back(n);
    out.log_value.push_back(log_of(n));
  }
  if (static_cast<long>(out.index.size()) < kMinFitPoints) {
    throw std::domain_error("degenerate fit window: fewer than 16 usable points");
  }
  return out;
}

GrowthFit fit_against(const LogSeries& data, GrowthModel model) {
  const std::size_t n = data.index.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = model == GrowthModel::power_law
                         ? std::log(static_cast<double>(data.index[i]))
                         : std::sqrt(static_cast<double>(data.index[i]));
    xs[i] = x;
    sx += x;
    sy += data.log_value[i];
    sxx += x * x;
    sxy += x * data.log_value[i];
  }
  const double count = static_cast<double>(n);
  const double denom = count * sxx - sx * sx;
  const double slope = (count * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / count;
  double mse = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = data.log_value[i] - (slope * xs[i] + intercept);
    mse += r * r;
  }
  mse /= count;
  return GrowthFit{model,       slope,
                   intercept,   mse,
                   data.index.front(), data.index.back(),
                   static_cast<long>(n)};
}

GrowthVerdict classify_logs(const LogSeries& data) {
  GrowthVerdict verdict;
  verdict.power_law = fit_against(data, GrowthModel::power_law);
  verdict.stretched = fit_against(data, GrowthModel::stretched_exponential);
  const double rp = verdict.power_law.residual;
  const double rs = verdict.stretched.residual;
  const bool super_ok = rs <= 0.5 * rp;
  const bool poly_ok = rp <= 0.5 * rs;
  if (super_ok && !poly_ok) {
    verdict.tag = GrowthTag::superpolynomial;
  } else if (poly_ok && !super_ok) {
    verdict.tag = GrowthTag::polynomial;
  } else {
    verdict.tag = GrowthTag::inconclusive;
  }
  return verdict;
}

std::vector<Rational> abs_coefficients(const QExpansion& f) {
  std::vector<Rational> out(f.coefficients().begin(), f.coefficients().end());
  for (Rational& c : out) {
    if (sgn(c) < 0) c = -c;
  }
  return out;
}

}  // namespace

std::vector<double> running_exponent(std::span<const Rational> coeffs) {
  std::vector<double> out(coeffs.size(), std::nan(""));
  for (std::size_t n = 2; n < coeffs.size(); ++n) {
    if (sgn(coeffs[n]) <= 0) {
      throw std::domain_error("running_exponent requires positive coefficients for n >= 2");
    }
    out[n] = log_to_double(coeffs[n]) / std::log(static_cast<double>(n));
  }
  return out;
}

std::vector<double> running_exponent(std::span<const double> coeffs) {
  std::vector<double> out(coeffs.size(), std::nan(""));
  for (std::size_t n = 2; n < coeffs.size(); ++n) {
    if (!(coeffs[n] > 0)) {
      throw std::domain_error("running_exponent requires positive coefficients for n >= 2");
    }
    out[n] = std::log(coeffs[n]) / std::log(static_cast<double>(n));
  }
  return out;
}

GrowthVerdict classify_growth(std::span<const Rational> coeffs, long window_lo, long window_hi) {
  const LogSeries data = window_logs(
      static_cast<long>(coeffs.size()), window_lo, window_hi,
      [&](long n) { return sgn(coeffs[static_cast<std::size_t>(n)]); },
      [&](long n) { return log_to_double(coeffs[static_cast<std::size_t>(n)]); });
  return classify_logs(data);
}

GrowthVerdict classify_growth(std::span<const double> coeffs, long window_lo, long window_hi) {
  const LogSeries data = window_logs(
      static_cast<long>(coeffs.size()), window_lo, window_hi,
      [&](long n) {
        const double v = coeffs[static_cast<std::size_t>(n)];
        return v > 0 ? 1 : (v == 0 ? 0 : -1);
      },
      [&](long n) { return std::log(coeffs[static_cast<std::size_t>(n)]); });
  return classify_logs(data);
}

std::optional<long> lemma_la_witness(const Rational& mu, double alpha_target, int max_n) {
  if (sgn(mu) <= 0) throw std::domain_error("lemma_la_witness requires mu > 0");
  const QExpansion series = pow_rational(invert(euler_product(max_n, 2)), mu);
  for (long n = 1; n <= series.truncation_order(); ++n) {
    const Rational& a = series.coefficient(static_cast<int>(n));
    if (sgn(a) <= 0) continue;
    if (log_to_double(a) > alpha_target * std::log(static_cast<double>(n))) return n;
  }
  return std::nullopt;
}

std::vector<Rational> partial_sums(std::span<const Rational> coeffs) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  Rational running(0);
  for (const Rational& c : coeffs) {
    running += c;
    out.push_back(running);
  }
  return out;
}

KeyLemmaReport key_lemma_comparison(long p, long q, int order) {
  const MinimalModel model = minimal_model(p, q);

  // A = eta^c * ch of the vacuum Verma quotient. Its closed form
  // (1-q)^c / prod_{n>1}(1-q^n)^{1-c} is recomputed independently and the
  // two must agree coefficient for coefficient.
  const QExpansion a = eta_scaled(vacuum_verma_character(model.c, order), model.c);
  std::vector<Rational> one_minus_q(static_cast<std::size_t>(order) + 1, Rational(0));
  one_minus_q[0] = 1;
  if (order >= 1) one_minus_q[1] = -1;
  const QExpansion closed_form =
      mul(pow_rational(QExpansion(Rational(0), std::move(one_minus_q)), model.c),
          pow_rational(invert(euler_product(order, 2)), Rational(1) - model.c));
  if (!(a == closed_form)) {
    throw std::logic_error("eta-scaled Verma-quotient character disagrees with its closed form");
  }

  // B uses the effective central charge: that is the scaling with the
  // polynomially bounded coefficients for every model, unitary or not.
  const QExpansion b =
      eta_scaled(irreducible_character(p, q, 1, 1, order), model.c_tilde);

  // Both series get signed coefficients after eta scaling and |a_n| is far
  // too noisy for a log fit, so the fits run on sum_{i<=n} |a_i| instead.
  // The cumulative sums are monotone, they stay polynomially bounded exactly
  // when the coefficients do, and they keep the superpolynomial rate of the
  // Verma-quotient side.
  const long window_lo = 100;
  const long window_hi = (3L * order) / 4;
  KeyLemmaReport report;
  report.model = model;
  report.order = order;
  report.verma_quotient_side =
      classify_growth(std::span<const Rational>(partial_sums(abs_coefficients(a))), window_lo,
                      window_hi);
  report.irreducible_side = classify_growth(
      std::span<const Rational>(partial_sums(abs_coefficients(b))), window_lo, window_hi);
  return report;
}

}  // namespace virasoro
