#include "virasoro/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace virasoro {

std::string to_string(const Rational& x) { return x.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': expected num or num/den");
  }
  Integer num(std::string(num_part), 10);
  Integer den(std::string(den_part), 10);
  if (den == 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': zero denominator");
  }
  if (negative) num = -num;
  Rational result(num, den);
  result.canonicalize();
  return result;
}

Rational rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational result(num, den);
  result.canonicalize();
  return result;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational root(sn, sd);
  root.canonicalize();
  return root;
}

double to_double(const Rational& x) { return x.get_d(); }

namespace {

// ln via mantissa * 2^exp decomposition; exact enough for fits and immune to
// double overflow of the operand.
double log_mpz(const Integer& z) {
  signed long exp = 0;
  double mantissa = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp) * M_LN2;
}

}  // namespace

double log_to_double(const Rational& x) {
  if (sgn(x) <= 0) throw std::domain_error("log_to_double requires a positive value");
  return log_mpz(x.get_num()) - log_mpz(x.get_den());
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace virasoro
