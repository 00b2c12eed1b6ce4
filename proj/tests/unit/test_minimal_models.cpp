#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "virasoro/minimal_models.hpp"

using namespace virasoro;

namespace {

std::vector<std::pair<long, long>> coprime_models(long bound) {
  std::vector<std::pair<long, long>> out;
  for (long p = 2; p <= bound; ++p) {
    for (long q = p + 1; q <= bound; ++q) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("central_charge values") {
  CHECK(central_charge(2, 5) == rational(-22, 5));
  CHECK(central_charge(3, 4) == rational(1, 2));
  CHECK(central_charge(2, 3) == 0);
  CHECK(central_charge(4, 5) == rational(7, 10));
}

TEST_CASE("model preconditions") {
  CHECK_THROWS_AS(central_charge(4, 6), std::domain_error);   // not coprime
  CHECK_THROWS_AS(central_charge(1, 5), std::domain_error);   // p = 1
  CHECK_THROWS_AS(central_charge(5, 3), std::domain_error);   // p > q
  CHECK_THROWS_AS(central_charge(3, 3), std::domain_error);   // p = q
  CHECK_THROWS_AS(kac_weight(3, 4, 0, 1), std::domain_error);
  CHECK_THROWS_AS(kac_weight(3, 4, 3, 1), std::domain_error);
  CHECK_THROWS_AS(kac_weight(3, 4, 1, 4), std::domain_error);
}

TEST_CASE("kac_weight values") {
  CHECK(kac_weight(3, 4, 1, 1) == 0);
  CHECK(kac_weight(3, 4, 1, 2) == rational(1, 16));
  CHECK(kac_weight(2, 5, 1, 2) == rational(-1, 5));
  CHECK(kac_weight(7, 8, 1, 1) == 0);
}

TEST_CASE("kac_table dedup and lambda_min") {
  const KacTable ising = kac_table(3, 4);
  CHECK(ising.entries.size() == 3);
  std::set<std::string> weights;
  for (const auto& e : ising.entries) weights.insert(to_string(e.h));
  CHECK(weights == std::set<std::string>{"0", "1/16", "1/2"});
  CHECK(ising.lambda_min == 0);

  const KacTable lee_yang = kac_table(2, 5);
  CHECK(lee_yang.entries.size() == 2);
  CHECK(lee_yang.lambda_min == rational(-1, 5));

  const KacTable t56 = kac_table(5, 6);
  CHECK(t56.entries.size() == 10);
  bool found_h3 = false;
  for (const auto& e : t56.entries) {
    if (e.r == 1 && e.s == 5) {
      found_h3 = true;
      CHECK(e.h == 3);
    }
  }
  CHECK(found_h3);
}

TEST_CASE("kac symmetry h_{r,s} = h_{p-r,q-s}") {
  for (const auto& [p, q] : coprime_models(20)) {
    for (long r = 1; r <= p - 1; ++r) {
      for (long s = 1; s <= q - 1; ++s) {
        CHECK(kac_weight(p, q, r, s) == kac_weight(p, q, p - r, q - s));
      }
    }
  }
}

TEST_CASE("effective central charge identity") {
  CHECK(effective_central_charge(2, 5) == rational(2, 5));
  CHECK(effective_central_charge(3, 4) == rational(1, 2));
  for (const auto& [p, q] : coprime_models(30)) {
    const KacTable table = kac_table(p, q);
    CHECK(central_charge(p, q) - 24 * table.lambda_min == effective_central_charge(p, q));
  }
}

TEST_CASE("unitarity is q = p + 1, equivalently c = c_tilde") {
  CHECK(is_unitary(3, 4));
  CHECK(!is_unitary(2, 5));
  for (const auto& [p, q] : coprime_models(20)) {
    CHECK(is_unitary(p, q) == (central_charge(p, q) == effective_central_charge(p, q)));
  }
}

TEST_CASE("effective central charge stays in [0, 1); zero only for (2,3)") {
  for (const auto& [p, q] : coprime_models(25)) {
    const Rational ct = effective_central_charge(p, q);
    CHECK(sgn(ct) >= 0);
    CHECK(ct < 1);
    CHECK((ct == 0) == (p == 2 && q == 3));
  }
}

TEST_CASE("recognize_central_charge examples") {
  CHECK(!recognize_central_charge(rational(3, 5)).has_value());
  CHECK(recognize_central_charge(rational(-22, 5)) == std::make_pair(2L, 5L));
  CHECK(recognize_central_charge(rational(1, 2)) == std::make_pair(3L, 4L));
  CHECK(!recognize_central_charge(Rational(-2)).has_value());  // collapses to p = 1
  CHECK(!recognize_central_charge(Rational(1)).has_value());
  CHECK(!recognize_central_charge(Rational(25)).has_value());
}

TEST_CASE("recognizer round-trip and uniqueness up to bound 30") {
  std::set<std::string> seen;
  for (const auto& [p, q] : coprime_models(30)) {
    const Rational c = central_charge(p, q);
    CHECK(recognize_central_charge(c) == std::make_pair(p, q));
    CHECK(seen.insert(to_string(c)).second);  // pairwise distinct
  }
}
