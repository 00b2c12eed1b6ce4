#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "virasoro/rational.hpp"

namespace virasoro {

// Discrete-series data for coprime 1 < p < q:
//   c       = 1 - 6 (p-q)^2 / (p q)
//   c_tilde = 1 - 6 / (p q)   (equals c - 24 * lambda_min of the Kac table)
struct MinimalModel {
  long p = 0;
  long q = 0;
  Rational c;
  Rational c_tilde;
};

struct KacEntry {
  long r = 0;
  long s = 0;
  Rational h;  // ((s p - r q)^2 - (p - q)^2) / (4 p q)
};

// Kac weights deduplicated under (r, s) ~ (p - r, q - s); the kept
// representative has the smaller r (tie: smaller s), and entries are sorted
// by (r, s). Entry count is (p - 1)(q - 1)/2.
struct KacTable {
  MinimalModel model;
  std::vector<KacEntry> entries;
  Rational lambda_min;
};

// All of these validate gcd(p, q) == 1 and 1 < p < q, throwing
// std::domain_error with the violated precondition.
MinimalModel minimal_model(long p, long q);
Rational central_charge(long p, long q);
Rational effective_central_charge(long p, long q);
Rational kac_weight(long p, long q, long r, long s);
KacTable kac_table(long p, long q);

// q == p + 1, equivalently c == c_tilde.
bool is_unitary(long p, long q);

// The unique coprime pair 1 < p < q with c_{p,q} == c, or nullopt. Works by
// exact rational square-root extraction: D = 1 + 24/(1-c) must be the square
// of theta' = 2 theta + 1 with theta = p/(q-p).
std::optional<std::pair<long, long>> recognize_central_charge(const Rational& c);

}  // namespace virasoro
