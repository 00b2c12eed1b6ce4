#pragma once

#include <complex>
#include <string>
#include <vector>

#include "virasoro/minimal_models.hpp"
#include "virasoro/qseries.hpp"

namespace virasoro {

// A labeled graded-dimension series. Coefficients are nonnegative integers,
// the leading exponent is h - c/24 for the labeled module, and the leading
// coefficient is 1; the producing functions check all three.
struct CharacterSeries {
  std::string label;
  QExpansion series;
};

// Character of the vacuum Verma quotient (highest weight 0, the weight-1
// state removed): q^{-c/24} / prod_{n>1} (1 - q^n). Coefficient n counts
// partitions of n into parts >= 2.
CharacterSeries vacuum_verma_character(const Rational& c, int order);

// Generic Verma character q^{h-c/24} / prod_{n>=1} (1 - q^n); coefficients
// are the partition numbers p(n).
CharacterSeries verma_character(const Rational& c, const Rational& h, int order);

// Irreducible character of the (r, s) module of the (p, q) minimal model,
// as the alternating sum
//
//   q^{-c/24} / prod_{n>=1}(1-q^n) * sum_k (q^{e_k^-} - q^{e_k^+}),
//   e_k^{+-} = ((2pqk + lambda_{+-})^2 - (p-q)^2) / (4pq),
//   lambda_- = sp - rq,  lambda_+ = sp + rq.
//
// The k range is determined by the truncation order, not hard-coded. Throws
// std::domain_error for indices outside the Kac range.
CharacterSeries irreducible_character(long p, long q, long r, long s, int order);

// eta^x * chi. For x = c_tilde of the model the leading exponent is
// h - lambda_min >= 0.
QExpansion eta_scaled(const CharacterSeries& chi, const Rational& x);

// Modular S-transformation matrix on the deduplicated Kac labels, in
// kac_table order. Symmetric, and S*S = I within 1e-9 (checked at
// construction).
class SMatrix {
 public:
  SMatrix(std::vector<KacEntry> labels, std::vector<double> values);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<KacEntry>& labels() const noexcept { return labels_; }
  double value(std::size_t i, std::size_t j) const { return values_.at(i * labels_.size() + j); }
  const std::vector<double>& values() const noexcept { return values_; }  // row-major

 private:
  std::vector<KacEntry> labels_;
  std::vector<double> values_;
};

// Entries 2 sqrt(2/(pq)) (-1)^{1 + r sigma + s rho} sin(pi q r rho / p)
// sin(pi p s sigma / q) on the deduplicated labels. The sign convention is
// validated numerically by modular_check rather than trusted.
SMatrix s_matrix(long p, long q);

double max_involution_error(const SMatrix& s);  // max |S*S - I|
double max_asymmetry(const SMatrix& s);         // max |S - S^T|

// max_i | chi_i(-1/tau) - sum_j S_ij chi_j(tau) | over the model's labels,
// with all characters truncated at the given order. tau must satisfy
// |e^{2 pi i tau}| <= e^{-pi/2} and |e^{-2 pi i / tau}| <= e^{-pi/2}
// (i.e. Im tau >= 1/4 and Im tau >= |tau|^2 / 4) so that both evaluations
// converge; throws std::domain_error otherwise.
double modular_check(long p, long q, std::complex<double> tau, int order);

}  // namespace virasoro
