#include "virasoro/characters.hpp"

#include <cmath>
#include <stdexcept>

namespace virasoro {

namespace {

// Graded dimensions: nonnegative integers with a single vacuum-level state.
CharacterSeries checked_character(std::string label, QExpansion series) {
  if (!series.is_integral()) {
    throw std::logic_error("character '" + label + "' has non-integer coefficients");
  }
  if (series.coefficient(0) != 1) {
    throw std::logic_error("character '" + label + "' does not have leading coefficient 1");
  }
  for (int n = 0; n <= series.truncation_order(); ++n) {
    if (sgn(series.coefficient(n)) < 0) {
      throw std::logic_error("character '" + label + "' has a negative coefficient");
    }
  }
  return CharacterSeries{std::move(label), std::move(series)};
}

}  // namespace

CharacterSeries vacuum_verma_character(const Rational& c, int order) {
  QExpansion series = invert(euler_product(order, 2)).shifted(-c / 24);
  return checked_character("VermaQuotient(c=" + to_string(c) + ")", std::move(series));
}

CharacterSeries verma_character(const Rational& c, const Rational& h, int order) {
  QExpansion series = invert(euler_product(order, 1)).shifted(h - c / 24);
  return checked_character("Verma(c=" + to_string(c) + ",h=" + to_string(h) + ")",
                           std::move(series));
}

CharacterSeries irreducible_character(long p, long q, long r, long s, int order) {
  const Rational c = central_charge(p, q);
  const Rational h = kac_weight(p, q, r, s);  // validates the Kac range

  // Offsets of the alternating numerator relative to h:
  //   e_k^- - h = pq k^2 + k
  //  (sp - rq),   e_k^+ - h = rs + pq k^2 + k (sp + rq).
  // Both grow quadratically in k, so only |k| up to ~sqrt(order/pq) land
  // under the truncation order.
  std::vector<Rational> numerator(static_cast<std::size_t>(order) + 1, Rational(0));
  const long lam_minus = s * p - r * q;
  const long lam_plus = s * p + r * q;
  for (long direction : {1L, -1L}) {
    for (long k = direction;; k += direction) {
      const long base = p * q * k * k;
      const long off_minus = base + k * lam_minus;
      const long off_plus = r * s + base + k * lam_plus;
      if (off_minus > order && off_plus > order) break;
      if (off_minus <= order) numerator[static_cast<std::size_t>(off_minus)] += 1;
      if (off_plus <= order) numerator[static_cast<std::size_t>(off_plus)] -= 1;
    }
  }
  numerator[0] += 1;                                       // k = 0 of e^-
  if (r * s <= order) numerator[static_cast<std::size_t>(r * s)] -= 1;  // k = 0 of e^+

  QExpansion series =
      mul(invert(euler_product(order, 1)), QExpansion(Rational(0), std::move(numerator)))
          .shifted(h - c / 24);
  return checked_character("L(" + std::to_string(p) + "," + std::to_string(q) + ";" +
                               std::to_string(r) + "," + std::to_string(s) + ")",
                           std::move(series));
}

QExpansion eta_scaled(const CharacterSeries& chi, const Rational& x) {
  return mul(eta_power(x, chi.series.truncation_order()), chi.series);
}

SMatrix::SMatrix(std::vector<KacEntry> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (values_.size() != labels_.size() * labels_.size()) {
    throw std::invalid_argument("SMatrix needs a square value array matching the labels");
  }
}

SMatrix s_matrix(long p, long q) {
  const KacTable table = kac_table(p, q);
  const std::vector<KacEntry>& labels = table.entries;
  const std::size_t n = labels.size();
  const double prefactor = 2.0 * std::sqrt(2.0 / (static_cast<double>(p) * static_cast<double>(q)));

  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long r = labels[i].r, s = labels[i].s;
      const long rho = labels[j].r, sigma = labels[j].s;
      const int sign = (1 + r * sigma + s * rho) % 2 == 0 ? 1 : -1;
      // Reduce the sine arguments exactly in integers first; the raw
      // products overflow double precision for larger models.
      const long m1 = (q * r * rho) % (2 * p);
      const long m2 = (p * s * sigma) % (2 * q);
      values[i * n + j] = prefactor * sign *
                          std::sin(M_PI * static_cast<double>(m1) / static_cast<double>(p)) *
                          std::sin(M_PI * static_cast<double>(m2) / static_cast<double>(q));
    }
  }
  SMatrix s(labels, std::move(values));
  if (max_involution_error(s) > 1e-9) {
    throw std::logic_error("S-matrix failed the S*S = I self-check");
  }
  return s;
}

double max_involution_error(const SMatrix& s) {
  const std::size_t n = s.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double entry = 0.0;
      for (std::size_t k = 0; k < n; ++k) entry += s.value(i, k) * s.value(k, j);
      worst = std::max(worst, std::abs(entry - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double max_asymmetry(const SMatrix& s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      worst = std::max(worst, std::abs(s.value(i, j) - s.value(j, i)));
    }
  }
  return worst;
}

double modular_check(long p, long q, std::complex<double> tau, int order) {
  if (tau.imag() <= 0.0) throw std::domain_error("modular_check requires Im(tau) > 0");
  const std::complex<double> s_tau = -1.0 / tau;
  // Both expansion parameters must be small enough for the truncations to
  // converge: |e^{2 pi i tau}| and |e^{2 pi i (-1/tau)}| at most e^{-pi/2}.
  if (tau.imag() < 0.25 || s_tau.imag() < 0.25) {
    throw std::domain_error("tau outside the admissible region for modular_check");
  }

  const SMatrix s = s_matrix(p, q);
  const std::size_t n = s.size();
  std::vector<std::complex<double>> at_tau(n), at_s_tau(n);
  for (std::size_t i = 0; i < n; ++i) {
    const KacEntry& label = s.labels()[i];
    const CharacterSeries chi = irreducible_character(p, q, label.r, label.s, order);
    at_tau[i] = evaluate_with_error(chi.series, tau).value;
    at_s_tau[i] = evaluate_with_error(chi.series, s_tau).value;
  }

  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> transformed(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) transformed += s.value(i, j) * at_tau[j];
    residual = std::max(residual, std::abs(at_s_tau[i] - transformed));
  }
  return residual;
}

}  // namespace virasoro
