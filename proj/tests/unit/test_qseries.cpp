#include <doctest.h>

#include <complex>
#include <random>
#include <stdexcept>

#include "virasoro/qseries.hpp"

using namespace virasoro;

namespace {

QExpansion random_series(std::mt19937& rng, int order, bool unit_constant = false,
                         bool integral = false) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  for (auto& c : coeffs) c = rational(num(rng), integral ? 1 : den(rng));
  if (unit_constant) coeffs[0] = 1;
  return QExpansion(Rational(0), std::move(coeffs));
}

QExpansion geometric(int order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, Rational(1));
  return QExpansion(Rational(0), std::move(coeffs));
}

QExpansion one_minus_q(int order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, Rational(0));
  coeffs[0] = 1;
  if (order >= 1) coeffs[1] = -1;
  return QExpansion(Rational(0), std::move(coeffs));
}

}  // namespace

TEST_CASE("add cancels and respects identities") {
  const QExpansion one_plus_q(Rational(0), {Rational(1), Rational(1)});
  CHECK(add(one_plus_q, one_minus_q(1)) == QExpansion::constant(2, 1));
  std::mt19937 rng(7);
  const QExpansion f = random_series(rng, 20);
  CHECK(add(f, QExpansion::zero(20)) == f);
}

TEST_CASE("add aligns a common fractional prefactor") {
  const Rational alpha = rational(-1, 24);
  const QExpansion f(alpha, {Rational(1), Rational(0)});
  const QExpansion g(alpha + 1, {Rational(1)});  // q^{-1/24} * q
  const QExpansion expected(alpha, {Rational(1), Rational(1)});
  CHECK(add(f, g) == expected);
  CHECK(add(g, f) == expected);
}

TEST_CASE("add rejects non-integral exponent gaps") {
  const QExpansion f(rational(-1, 24), {Rational(1)});
  const QExpansion g(rational(1, 2), {Rational(1)});
  CHECK_THROWS_AS(add(f, g), std::domain_error);
}

TEST_CASE("binary operations truncate to the shorter operand") {
  std::mt19937 rng(11);
  const QExpansion f = random_series(rng, 5);
  const QExpansion g = random_series(rng, 9);
  CHECK(mul(f, g).truncation_order() == 5);
  CHECK(add(f, g).truncation_order() == 5);
  CHECK(mul(g, f).truncation_order() == 5);
}

TEST_CASE("mul: telescoping and identity") {
  CHECK(mul(one_minus_q(40), geometric(40)) == QExpansion::one(40));
  std::mt19937 rng(3);
  const QExpansion f = random_series(rng, 30);
  CHECK(mul(f, QExpansion::one(30)) == f);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 3; ++trial) {
    const QExpansion f = random_series(rng, 50);
    const QExpansion g = random_series(rng, 50);
    const QExpansion h = random_series(rng, 50);
    CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
    CHECK(mul(f, g) == mul(g, f));
    CHECK(add(f, g) == add(g, f));
    CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
    CHECK(add(add(f, g), h) == add(f, add(g, h)));
  }
}

TEST_CASE("invert") {
  CHECK(invert(one_minus_q(40)) == geometric(40));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    QExpansion f = random_series(rng, 50);
    if (f.coefficient(0) == 0) f = add(f, QExpansion::constant(3, 50));
    CHECK(invert(invert(f)) == f);
    CHECK(mul(f, invert(f)) == QExpansion::one(50));
  }
  CHECK_THROWS_AS(invert(QExpansion(Rational(0), {Rational(0), Rational(1)})),
                  std::domain_error);
}

TEST_CASE("invert negates the leading exponent") {
  const QExpansion f(rational(-1, 8), {Rational(2), Rational(1)});
  CHECK(invert(f).leading_exponent() == rational(1, 8));
}

TEST_CASE("pow_rational: generalized binomial values") {
  const QExpansion p = pow_rational(one_minus_q(6), rational(-1, 2));
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(1) == rational(1, 2));
  CHECK(p.coefficient(2) == rational(3, 8));
  CHECK(p.coefficient(3) == rational(5, 16));
}

TEST_CASE("pow_rational: exponent zero and inverse exponents") {
  std::mt19937 rng(9);
  const QExpansion f = random_series(rng, 60, /*unit_constant=*/true);
  CHECK(pow_rational(f, Rational(0)) == QExpansion::one(60));
  CHECK(mul(pow_rational(f, rational(2, 3)), pow_rational(f, rational(-2, 3))) ==
        QExpansion::one(60));
}

TEST_CASE("pow_rational preconditions") {
  CHECK_THROWS_AS(pow_rational(QExpansion::constant(2, 5), rational(1, 2)), std::domain_error);
  const QExpansion shifted = QExpansion::one(5).shifted(rational(1, 3));
  CHECK_THROWS_AS(pow_rational(shifted, rational(1, 2)), std::domain_error);
}

TEST_CASE("pow_rational scaled and generic routes agree") {
  std::mt19937 rng(13);
  for (const Rational& mu : {rational(-5, 6), rational(7, 3), rational(1, 2), Rational(3)}) {
    const QExpansion f = random_series(rng, 40, /*unit_constant=*/true, /*integral=*/true);
    CHECK(pow_rational(f, mu) == detail::pow_rational_generic(f, mu));
  }
}

TEST_CASE("pow_rational of integer powers matches repeated multiplication") {
  std::mt19937 rng(17);
  const QExpansion f = random_series(rng, 30, /*unit_constant=*/true);
  CHECK(pow_rational(f, Rational(3)) == mul(f, mul(f, f)));
}

TEST_CASE("euler_product small coefficients") {
  const QExpansion e1 = euler_product(10, 1);
  CHECK(e1.coefficient(1) == -1);
  CHECK(e1.coefficient(2) == -1);
  CHECK(e1.coefficient(3) == 0);
  CHECK(e1.coefficient(5) == 1);
  CHECK(e1.coefficient(7) == 1);
  CHECK(euler_product(10, 2).coefficient(1) == 0);
  CHECK(mul(euler_product(100, 2), one_minus_q(100)) == euler_product(100, 1));
}

TEST_CASE("euler_product matches the pentagonal sparse series to order 500") {
  const int order = 500;
  std::vector<Rational> pentagonal(order + 1, Rational(0));
  for (long k = -30; k <= 30; ++k) {
    const long exponent = k * (3 * k - 1) / 2;
    if (exponent >= 0 && exponent <= order) {
      pentagonal[static_cast<std::size_t>(exponent)] = (k % 2 == 0) ? 1 : -1;
    }
  }
  CHECK(euler_product(order, 1) == QExpansion(Rational(0), std::move(pentagonal)));
}

namespace {

// Independent partition-count oracle: p(n, k) = partitions of n into parts
// of size at most k, by direct recursion.
long brute_partitions(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return brute_partitions(n - k, k) + brute_partitions(n, k - 1);
}

}  // namespace

TEST_CASE("partition numbers") {
  const auto p = partition_numbers(150);
  CHECK(p[0] == 1);
  CHECK(p[5] == 7);
  CHECK(p[100] == 190569292);
  for (int n = 0; n <= 25; ++n) {
    CHECK(p[static_cast<std::size_t>(n)] == brute_partitions(n, n));
  }
  const QExpansion inverse = invert(euler_product(150, 1));
  for (int n = 0; n <= 150; ++n) {
    CHECK(inverse.coefficient(n) == Rational(p[static_cast<std::size_t>(n)]));
  }
}

TEST_CASE("hardy_ramanujan") {
  CHECK(hardy_ramanujan(1) > 0);
  CHECK_THROWS_AS(hardy_ramanujan(0), std::domain_error);
  const auto p = partition_numbers(2000);
  const auto ratio = [&](long n) {
    return to_double(Rational(p[static_cast<std::size_t>(n)])) / hardy_ramanujan(n);
  };
  CHECK(ratio(500) > 0.9);
  CHECK(ratio(500) < 1.1);
  CHECK(std::abs(ratio(2000) - 1.0) < std::abs(ratio(200) - 1.0));
}

TEST_CASE("eta_power") {
  const QExpansion eta = eta_power(Rational(1), 10);
  CHECK(eta.leading_exponent() == rational(1, 24));
  CHECK(eta.coefficient(0) == 1);
  CHECK(eta.coefficient(1) == -1);
  CHECK(eta.coefficient(2) == -1);
  CHECK(eta.coefficient(3) == 0);
  CHECK(eta.coefficient(4) == 0);
  CHECK(eta.coefficient(5) == 1);

  CHECK(eta_power(Rational(0), 8) == QExpansion::one(8));

  const QExpansion product = mul(eta_power(rational(1, 2), 60), eta_power(rational(-1, 2), 60));
  CHECK(product == QExpansion::one(60));
  CHECK(product.leading_exponent() == 0);

  const Rational a = rational(1, 3), b = rational(-5, 2);
  CHECK(mul(eta_power(a, 60), eta_power(b, 60)) == eta_power(a + b, 60));
}

TEST_CASE("evaluate_with_error basics") {
  const auto constant = evaluate_with_error(QExpansion::one(0), {0.0, 1.0});
  CHECK(constant.value.real() == doctest::Approx(1.0));
  CHECK(constant.value.imag() == doctest::Approx(0.0));
  CHECK(constant.tail_estimate == 0.0);

  // Geometric series against its closed form at tau = i.
  const double q = std::exp(-2.0 * M_PI);
  const auto geo = evaluate_with_error(geometric(200), {0.0, 1.0});
  CHECK(geo.value.real() == doctest::Approx(1.0 / (1.0 - q)).epsilon(1e-12));

  CHECK_THROWS_AS(evaluate_with_error(QExpansion::one(4), {0.0, -1.0}), std::domain_error);
  CHECK_THROWS_AS(evaluate_with_error(QExpansion::one(4), {1.0, 0.0}), std::domain_error);
}

TEST_CASE("evaluate_with_error: order-N and order-2N truncations agree within the tail") {
  const QExpansion partitions = invert(euler_product(200, 1));
  const std::complex<double> tau(0.0, 0.15);
  const auto coarse = evaluate_with_error(partitions.truncated(100), tau);
  const auto fine = evaluate_with_error(partitions, tau);
  CHECK(std::abs(coarse.value - fine.value) <= coarse.tail_estimate);
  CHECK(coarse.tail_estimate > 0.0);
}

TEST_CASE("integrality flag") {
  CHECK(euler_product(20, 1).is_integral());
  CHECK(invert(euler_product(20, 2)).is_integral());
  CHECK(!pow_rational(one_minus_q(5), rational(1, 2)).is_integral());
}

TEST_CASE("shifted and truncated") {
  std::mt19937 rng(23);
  const QExpansion f = random_series(rng, 12);
  CHECK(f.shifted(rational(1, 3)).leading_exponent() == f.leading_exponent() + rational(1, 3));
  CHECK(f.truncated(4).truncation_order() == 4);
  CHECK(f.truncated(4).coefficient(4) == f.coefficient(4));
  CHECK_THROWS_AS(f.truncated(13), std::out_of_range);
}
