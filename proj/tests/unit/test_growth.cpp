#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "virasoro/characters.hpp"
#include "virasoro/growth.hpp"

using namespace virasoro;

namespace {

std::vector<Rational> cube_sequence(long max_n) {
  std::vector<Rational> out;
  for (long n = 0; n <= max_n; ++n) out.push_back(Rational(n) * n * n);
  return out;
}

std::vector<Rational> to_rationals(const std::vector<Integer>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const Integer& v : values) out.emplace_back(v);
  return out;
}

std::vector<Rational> abs_partial_sums(const QExpansion& f) {
  std::vector<Rational> v(f.coefficients().begin(), f.coefficients().end());
  for (Rational& c : v) {
    if (sgn(c) < 0) c = -c;
  }
  return partial_sums(v);
}

}  // namespace

TEST_CASE("running_exponent on exact powers and constants") {
  const auto cubes = running_exponent(std::span<const Rational>(cube_sequence(50)));
  for (std::size_t n = 2; n < cubes.size(); ++n) {
    CHECK(cubes[n] == doctest::Approx(3.0).epsilon(1e-12));
  }
  const std::vector<double> ones(40, 1.0);
  const auto flat = running_exponent(std::span<const double>(ones));
  for (std::size_t n = 2; n < flat.size(); ++n) CHECK(flat[n] == doctest::Approx(0.0));
  CHECK(std::isnan(flat[0]));
  CHECK(std::isnan(flat[1]));
}

TEST_CASE("running_exponent of p(n) exceeds 10 below n = 5000") {
  const auto exponents =
      running_exponent(std::span<const Rational>(to_rationals(partition_numbers(5000))));
  bool exceeded = false;
  for (std::size_t n = 2; n < exponents.size(); ++n) exceeded = exceeded || exponents[n] > 10.0;
  CHECK(exceeded);
}

TEST_CASE("running_exponent rejects nonpositive entries") {
  const std::vector<double> bad = {1.0, 1.0, 0.0, 2.0};
  CHECK_THROWS_AS(running_exponent(std::span<const double>(bad)), std::domain_error);
}

TEST_CASE("classify_growth: partition numbers are stretched-exponential") {
  const auto p = to_rationals(partition_numbers(2000));
  const GrowthVerdict v = classify_growth(std::span<const Rational>(p), 100, 2000);
  CHECK(v.tag == GrowthTag::superpolynomial);
  const double hardy_rate = M_PI * std::sqrt(2.0 / 3.0);
  CHECK(std::abs(v.stretched.parameter - hardy_rate) / hardy_rate < 0.10);
}

TEST_CASE("classify_growth: Hardy-Ramanujan rate within 10% on [500, 5000]") {
  const auto p = to_rationals(partition_numbers(5000));
  const GrowthVerdict v = classify_growth(std::span<const Rational>(p), 500, 5000);
  CHECK(v.tag == GrowthTag::superpolynomial);
  const double hardy_rate = M_PI * std::sqrt(2.0 / 3.0);
  CHECK(std::abs(v.stretched.parameter - hardy_rate) / hardy_rate < 0.10);
}

TEST_CASE("classify_growth: exact cubes are polynomial with alpha = 3") {
  const GrowthVerdict v = classify_growth(std::span<const Rational>(cube_sequence(400)), 40, 400);
  CHECK(v.tag == GrowthTag::polynomial);
  CHECK(std::abs(v.power_law.parameter - 3.0) < 1e-6);
  CHECK(v.power_law.residual < 1e-20);
}

TEST_CASE("classify_growth rejects degenerate windows") {
  const auto cubes = cube_sequence(400);
  CHECK_THROWS_AS(classify_growth(std::span<const Rational>(cubes), 40, 50), std::domain_error);
  CHECK_THROWS_AS(classify_growth(std::span<const Rational>(cubes), 390, 2000),
                  std::domain_error);
  const std::vector<double> negatives(100, -1.0);
  CHECK_THROWS_AS(classify_growth(std::span<const double>(negatives), 32, 90),
                  std::domain_error);
}

TEST_CASE("eta-scaled Ising vacuum: cumulative coefficient sums fit a power law") {
  const KacTable table = kac_table(3, 4);
  const CharacterSeries chi = irreducible_character(3, 4, 1, 1, 1500);
  const QExpansion scaled = eta_scaled(chi, table.model.c_tilde);
  const GrowthVerdict v =
      classify_growth(std::span<const Rational>(abs_partial_sums(scaled)), 100, 1500);
  CHECK(v.tag == GrowthTag::polynomial);
}

TEST_CASE("lemma_la_witness") {
  CHECK(lemma_la_witness(Rational(1), 0.0, 100) == 4);
  const auto witness = lemma_la_witness(Rational(1), 5.0, 2000);
  REQUIRE(witness.has_value());
  CHECK(*witness <= 2000);
  CHECK(!lemma_la_witness(Rational(1), 50.0, 200).has_value());
  CHECK_THROWS_AS(lemma_la_witness(Rational(0), 1.0, 100), std::domain_error);
  CHECK_THROWS_AS(lemma_la_witness(Rational(-1), 1.0, 100), std::domain_error);
}

TEST_CASE("key lemma: dichotomy for every model with p, q <= 6 at order 2000") {
  // (2,3) is excluded: its irreducible vacuum character is the constant 1
  // (the trivial algebra), which leaves nothing to fit.
  for (const auto& [p, q] : {std::pair<long, long>{2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}) {
    const KeyLemmaReport report = key_lemma_comparison(p, q, 2000);
    CHECK(report.verma_quotient_side.tag == GrowthTag::superpolynomial);
    CHECK(report.irreducible_side.tag == GrowthTag::polynomial);
    CHECK(report.model.p == p);
    CHECK(report.order == 2000);
  }
}

TEST_CASE("partial_sums") {
  const std::vector<Rational> ones(20, Rational(1));
  const auto cumulative = partial_sums(ones);
  for (std::size_t n = 0; n < cumulative.size(); ++n) {
    CHECK(cumulative[n] == Rational(static_cast<long>(n) + 1));
  }

  std::vector<Rational> delta(20, Rational(0));
  delta[0] = 1;
  for (const Rational& c : partial_sums(delta)) CHECK(c == 1);

  // Partial sums are multiplication by 1/(1-q).
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(-9, 9);
  std::vector<Rational> coeffs(101);
  for (auto& c : coeffs) c = rational(num(rng), 3);
  const QExpansion f(Rational(0), coeffs);
  std::vector<Rational> geo_coeffs(101, Rational(1));
  const QExpansion summed = mul(QExpansion(Rational(0), geo_coeffs), f);
  const auto direct = partial_sums(std::span<const Rational>(coeffs));
  for (int n = 0; n <= 100; ++n) {
    CHECK(summed.coefficient(n) == direct[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("partial-sum bound propagation: |b_n| <= C n^a gives |c_n| <= 2C n^{a+1}") {
  // Synthetic: b_n = 3n^2 + n with C = 4, alpha = 2.
  std::vector<Rational> b;
  for (long n = 0; n <= 400; ++n) b.push_back(Rational(3 * n * n + n));
  const auto c = partial_sums(b);
  for (long n = 1; n <= 400; ++n) {
    CHECK(c[static_cast<std::size_t>(n)] <= Rational(8) * n * n * n);
  }

  // Character-based: the eta-scaled Ising vacuum has bounded coefficients,
  // so alpha = 1 with the exact C = max |b_n| / n certainly bounds them.
  const KacTable table = kac_table(3, 4);
  const QExpansion scaled = eta_scaled(irreducible_character(3, 4, 1, 1, 600), table.model.c_tilde);
  Rational big_c = abs(scaled.coefficient(0));
  for (int n = 1; n <= 600; ++n) {
    const Rational ratio = abs(scaled.coefficient(n)) / n;
    big_c = std::max(big_c, ratio);
  }
  std::vector<Rational> signed_coeffs(scaled.coefficients().begin(), scaled.coefficients().end());
  const auto sums = partial_sums(signed_coeffs);
  for (long n = 32; n <= 600; ++n) {
    CHECK(abs(sums[static_cast<std::size_t>(n)]) <= 2 * big_c * n * n);
  }
}

TEST_CASE("coefficientwise domination transfers to real evaluation") {
  const Rational c = central_charge(2, 5);
  const QExpansion smaller = irreducible_character(2, 5, 1, 1, 300).series;
  const QExpansion larger = vacuum_verma_character(c, 300).series;
  for (double q : {0.3, 0.7}) {
    const std::complex<double> tau(0.0, std::log(1.0 / q) / (2.0 * M_PI));
    const double lhs = evaluate_with_error(smaller, tau).value.real();
    const double rhs = evaluate_with_error(larger, tau).value.real();
    CHECK(lhs <= rhs);
    CHECK(lhs > 0.0);
  }
}
