#include "virasoro/minimal_models.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace virasoro {

namespace {

void validate_model(long p, long q) {
  if (!(1 < p && p < q)) {
    throw std::domain_error("minimal model requires 1 < p < q");
  }
  if (std::gcd(p, q) != 1) {
    throw std::domain_error("minimal model requires gcd(p, q) = 1");
  }
}

void validate_kac_range(long p, long q, long r, long s) {
  if (!(1 <= r && r <= p - 1 && 1 <= s && s <= q - 1)) {
    throw std::domain_error("Kac indices require 1 <= r <= p-1 and 1 <= s <= q-1");
  }
}

Rational central_charge_exact(const Integer& p, const Integer& q) {
  Integer diff = p - q;
  Rational c(6 * diff * diff, p * q);
  c.canonicalize();
  return Rational(1) - c;
}

}  // namespace

Rational central_charge(long p, long q) {
  validate_model(p, q);
  return central_charge_exact(Integer(p), Integer(q));
}

Rational effective_central_charge(long p, long q) {
  validate_model(p, q);
  Rational x(6, p * q);
  x.canonicalize();
  return Rational(1) - x;
}

MinimalModel minimal_model(long p, long q) {
  validate_model(p, q);
  return MinimalModel{p, q, central_charge(p, q), effective_central_charge(p, q)};
}

Rational kac_weight(long p, long q, long r, long s) {
  validate_model(p, q);
  validate_kac_range(p, q, r, s);
  const Integer num = Integer(s * p - r * q) * Integer(s * p - r * q) -
                      Integer(p - q) * Integer(p - q);
  Rational h(num, Integer(4) * p * q);
  h.canonicalize();
  return h;
}

KacTable kac_table(long p, long q) {
  MinimalModel model = minimal_model(p, q);
  std::vector<KacEntry> entries;
  entries.reserve(static_cast<std::size_t>((p - 1) * (q - 1) / 2));
  for (long r = 1; r <= p - 1; ++r) {
    for (long s = 1; s <= q - 1; ++s) {
      // Keep the representative of (r, s) ~ (p-r, q-s) with smaller r
      // (tie: smaller s).
      const long rr = p - r;
      const long ss = q - s;
      if (r > rr || (r == rr && s > ss)) continue;
      entries.push_back(KacEntry{r, s, kac_weight(p, q, r, s)});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const KacEntry& a, const KacEntry& b) {
    return a.r != b.r ? a.r < b.r : a.s < b.s;
  });
  Rational lambda_min = entries.front().h;
  for (const KacEntry& e : entries) lambda_min = std::min(lambda_min, e.h);
  return KacTable{std::move(model), std::move(entries), std::move(lambda_min)};
}

bool is_unitary(long p, long q) {
  validate_model(p, q);
  return q == p + 1;
}

std::optional<std::pair<long, long>> recognize_central_charge(const Rational& c) {
  if (c >= 1) return std::nullopt;
  // c = c_{p,q} iff D = 1 + 24/(1-c) = ((2p + (q-p)) / (q-p))^2.
  const Rational d = Rational(1) + Rational(24) / (Rational(1) - c);
  const auto root = exact_sqrt(d);
  if (!root) return std::nullopt;
  const Rational theta = (*root - 1) / 2;  // p / (q - p), in lowest terms
  if (sgn(theta) <= 0) return std::nullopt;
  const Integer& x = theta.get_num();
  const Integer& y = theta.get_den();
  const Integer cand_p = x;
  const Integer cand_q = x + y;
  if (cand_p <= 1) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), cand_p.get_mpz_t(), cand_q.get_mpz_t());
  if (g != 1) return std::nullopt;
  if (central_charge_exact(cand_p, cand_q) != c) return std::nullopt;
  if (!mpz_fits_slong_p(cand_p.get_mpz_t()) || !mpz_fits_slong_p(cand_q.get_mpz_t())) {
    return std::nullopt;
  }
  return std::make_pair(cand_p.get_si(), cand_q.get_si());
}

}  // namespace virasoro
