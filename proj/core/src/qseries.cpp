#include "virasoro/qseries.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace virasoro {

namespace {

std::vector<int> nonzero_indices(std::span<const Rational> coeffs, int from = 0) {
  std::vector<int> indices;
  for (int k = from; k < static_cast<int>(coeffs.size()); ++k) {
    if (coeffs[k] != 0) indices.push_back(k);
  }
  return indices;
}

bool all_integral(std::span<const Rational> coeffs) {
  for (const Rational& c : coeffs) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

QExpansion::QExpansion(Rational leading_exponent, std::vector<Rational> coefficients)
    : leading_exponent_(std::move(leading_exponent)), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw std::invalid_argument("QExpansion needs at least the constant coefficient");
  }
}

QExpansion QExpansion::zero(int order) { return constant(Rational(0), order); }

QExpansion QExpansion::one(int order) { return constant(Rational(1), order); }

QExpansion QExpansion::constant(const Rational& value, int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, Rational(0));
  coeffs[0] = value;
  return QExpansion(Rational(0), std::move(coeffs));
}

const Rational& QExpansion::coefficient(int n) const {
  if (n < 0 || n > truncation_order()) {
    throw std::out_of_range("coefficient index outside stored range");
  }
  return coefficients_[static_cast<std::size_t>(n)];
}

bool QExpansion::is_integral() const { return all_integral(coefficients_); }

bool QExpansion::is_zero() const {
  for (const Rational& c : coefficients_) {
    if (c != 0) return false;
  }
  return true;
}

QExpansion QExpansion::shifted(const Rational& delta) const {
  return QExpansion(leading_exponent_ + delta, coefficients_);
}

QExpansion QExpansion::truncated(int order) const {
  if (order < 0 || order > truncation_order()) {
    throw std::out_of_range("truncation order outside stored range");
  }
  std::vector<Rational> coeffs(coefficients_.begin(), coefficients_.begin() + order + 1);
  return QExpansion(leading_exponent_, std::move(coeffs));
}

bool operator==(const QExpansion& f, const QExpansion& g) {
  if (f.leading_exponent() != g.leading_exponent()) return false;
  if (f.truncation_order() != g.truncation_order()) return false;
  for (int n = 0; n <= f.truncation_order(); ++n) {
    if (f.coefficient(n) != g.coefficient(n)) return false;
  }
  return true;
}

QExpansion add(const QExpansion& f, const QExpansion& g) {
  Rational diff = g.leading_exponent() - f.leading_exponent();
  if (diff.get_den() != 1) {
    throw std::domain_error("cannot add series whose leading exponents differ by a non-integer");
  }
  if (sgn(diff) < 0) return add(g, f);

  const Integer& gap = diff.get_num();
  // The higher series starts beyond the lower one's valid range: the sum is
  // known exactly nowhere above it, so the result is the lower series.
  if (gap > f.truncation_order()) return f;
  const long d = gap.get_si();

  const long result_order =
      std::min<long>(f.truncation_order(), d + static_cast<long>(g.truncation_order()));
  std::vector<Rational> coeffs(static_cast<std::size_t>(result_order) + 1);
  for (long n = 0; n <= result_order; ++n) {
    coeffs[static_cast<std::size_t>(n)] = f.coefficient(static_cast<int>(n));
    if (n >= d) coeffs[static_cast<std::size_t>(n)] += g.coefficient(static_cast<int>(n - d));
  }
  return QExpansion(f.leading_exponent(), std::move(coeffs));
}

QExpansion sub(const QExpansion& f, const QExpansion& g) { return add(f, scale(Rational(-1), g)); }

QExpansion scale(const Rational& value, const QExpansion& f) {
  std::vector<Rational> coeffs(f.coefficients().begin(), f.coefficients().end());
  for (Rational& c : coeffs) c *= value;
  return QExpansion(f.leading_exponent(), std::move(coeffs));
}

QExpansion mul(const QExpansion& f, const QExpansion& g) {
  const int order = std::min(f.truncation_order(), g.truncation_order());
  const Rational exponent = f.leading_exponent() + g.leading_exponent();

  std::vector<int> nzf = nonzero_indices(f.coefficients());
  std::vector<int> nzg = nonzero_indices(g.coefficients());
  // Iterate the sparser factor on the outside; pentagonal-type series make
  // this an order-of-magnitude difference.
  const bool f_outer = nzf.size() <= nzg.size();
  const QExpansion& outer = f_outer ? f : g;
  const QExpansion& inner = f_outer ? g : f;
  const std::vector<int>& nz_outer = f_outer ? nzf : nzg;

  if (outer.is_integral() && inner.is_integral()) {
    std::vector<Integer> acc(static_cast<std::size_t>(order) + 1, Integer(0));
    for (int i : nz_outer) {
      if (i > order) break;
      const Integer& oi = outer.coefficient(i).get_num();
      for (int j = 0; j <= order - i; ++j) {
        const Rational& gj = inner.coefficient(j);
        if (gj == 0) continue;
        mpz_addmul(acc[static_cast<std::size_t>(i + j)].get_mpz_t(), oi.get_mpz_t(),
                   gj.get_num().get_mpz_t());
      }
    }
    std::vector<Rational> coeffs(acc.size());
    for (std::size_t n = 0; n < acc.size(); ++n) coeffs[n] = Rational(std::move(acc[n]));
    return QExpansion(exponent, std::move(coeffs));
  }

  // Clearing denominators turns the product into one integer convolution
  // with a single canonicalization per output coefficient. Eta powers have
  // denominators dividing v^{2n}, so their lcm stays small next to the
  // numerators; skip the route when the lcm is disproportionate (series
  // with unrelated denominators would blow up the scaled numerators).
  Integer lcm_outer(1), lcm_inner(1);
  for (int n = 0; n <= order; ++n) {
    mpz_lcm(lcm_outer.get_mpz_t(), lcm_outer.get_mpz_t(),
            outer.coefficient(n).get_den().get_mpz_t());
    mpz_lcm(lcm_inner.get_mpz_t(), lcm_inner.get_mpz_t(),
            inner.coefficient(n).get_den().get_mpz_t());
  }
  const std::size_t lcm_bits = mpz_sizeinbase(lcm_outer.get_mpz_t(), 2) +
                               mpz_sizeinbase(lcm_inner.get_mpz_t(), 2);
  if (lcm_bits <= std::max<std::size_t>(64, 8 * static_cast<std::size_t>(order + 1))) {
    auto scaled = [order](const QExpansion& f, const Integer& lcm) {
      std::vector<Integer> out(static_cast<std::size_t>(order) + 1);
      Integer factor;
      for (int n = 0; n <= order; ++n) {
        const Rational& c = f.coefficient(n);
        mpz_divexact(factor.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        out[static_cast<std::size_t>(n)] = c.get_num() * factor;
      }
      return out;
    };
    const std::vector<Integer> outer_scaled = scaled(outer, lcm_outer);
    const std::vector<Integer> inner_scaled = scaled(inner, lcm_inner);
    std::vector<Integer> acc(static_cast<std::size_t>(order) + 1, Integer(0));
    for (int i : nz_outer) {
      if (i > order) break;
      const Integer& oi = outer_scaled[static_cast<std::size_t>(i)];
      for (int j = 0; j <= order - i; ++j) {
        const Integer& gj = inner_scaled[static_cast<std::size_t>(j)];
        if (gj == 0) continue;
        mpz_addmul(acc[static_cast<std::size_t>(i + j)].get_mpz_t(), oi.get_mpz_t(),
                   gj.get_mpz_t());
      }
    }
    const Integer denom = lcm_outer * lcm_inner;
    std::vector<Rational> coeffs(acc.size());
    for (std::size_t n = 0; n < acc.size(); ++n) {
      Rational c(std::move(acc[n]), denom);
      c.canonicalize();
      coeffs[n] = std::move(c);
    }
    return QExpansion(exponent, std::move(coeffs));
  }

  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1, Rational(0));
  mpq_class term;
  for (int i : nz_outer) {
    if (i > order) break;
    const Rational& oi = outer.coefficient(i);
    for (int j = 0; j <= order - i; ++j) {
      const Rational& gj = inner.coefficient(j);
      if (gj == 0) continue;
      mpq_mul(term.get_mpq_t(), oi.get_mpq_t(), gj.get_mpq_t());
      mpq_add(acc[static_cast<std::size_t>(i + j)].get_mpq_t(),
              acc[static_cast<std::size_t>(i + j)].get_mpq_t(), term.get_mpq_t());
    }
  }
  return QExpansion(exponent, std::move(acc));
}

QExpansion invert(const QExpansion& f) {
  const Rational& a0 = f.coefficient(0);
  if (a0 == 0) {
    throw std::domain_error("series with zero constant term is not invertible");
  }
  const int order = f.truncation_order();
  std::vector<int> nzf = nonzero_indices(f.coefficients(), 1);

  // Unit constant term and integer coefficients keep the whole inverse
  // integral; this covers the Euler products and every character series.
  if (f.is_integral() && (a0 == 1 || a0 == -1)) {
    const bool negate = a0 == -1;
    std::vector<Integer> b(static_cast<std::size_t>(order) + 1, Integer(0));
    b[0] = negate ? -1 : 1;
    Integer acc;
    for (int n = 1; n <= order; ++n) {
      acc = 0;
      for (int k : nzf) {
        if (k > n) break;
        mpz_addmul(acc.get_mpz_t(), f.coefficient(k).get_num().get_mpz_t(),
                   b[static_cast<std::size_t>(n - k)].get_mpz_t());
      }
      b[static_cast<std::size_t>(n)] = negate ? acc : -acc;
    }
    std::vector<Rational> coeffs(b.size());
    for (std::size_t n = 0; n < b.size(); ++n) coeffs[n] = Rational(std::move(b[n]));
    return QExpansion(-f.leading_exponent(), std::move(coeffs));
  }

  std::vector<Rational> b(static_cast<std::size_t>(order) + 1, Rational(0));
  Rational inv_a0 = Rational(1) / a0;
  b[0] = inv_a0;
  mpq_class term, acc;
  for (int n = 1; n <= order; ++n) {
    acc = 0;
    for (int k : nzf) {
      if (k > n) break;
      mpq_mul(term.get_mpq_t(), f.coefficient(k).get_mpq_t(),
              b[static_cast<std::size_t>(n - k)].get_mpq_t());
      mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), term.get_mpq_t());
    }
    b[static_cast<std::size_t>(n)] = -acc * inv_a0;
  }
  return QExpansion(-f.leading_exponent(), std::move(b));
}

namespace {

void require_pow_preconditions(const QExpansion& f) {
  if (f.leading_exponent() != 0) {
    throw std::domain_error("pow_rational requires leading exponent 0");
  }
  if (f.coefficient(0) != 1) {
    throw std::domain_error("pow_rational requires constant term exactly 1");
  }
}

// g = f^{u/v} through h_n = g_n v^{2n}, which stays integral for integral f:
//   n h_n = sum_k ((u+v) k - n v) f_k h_{n-k} v^{2k-1}.
// The v-power factor is a bit shift when v is a power of two and a
// precomputed scaled coefficient F_k = f_k v^{2k-1} otherwise.
QExpansion pow_rational_scaled(const QExpansion& f, long u, long v) {
  const int order = f.truncation_order();
  std::vector<int> nzf = nonzero_indices(f.coefficients(), 1);

  const bool pow2 = v != 1 && (v & (v - 1)) == 0;
  unsigned long shift = 0;
  if (pow2) {
    for (long w = v; w > 1; w >>= 1) ++shift;
  }

  std::vector<Integer> scaled_f;
  if (v != 1 && !pow2) {
    scaled_f.resize(static_cast<std::size_t>(order) + 1);
    Integer vpow = v;  // v^{2k-1}, advanced by v^2 per k
    for (int k = 1; k <= order; ++k) {
      scaled_f[static_cast<std::size_t>(k)] = f.coefficient(k).get_num() * vpow;
      if (k < order) vpow *= static_cast<long>(v) * v;
    }
  }

  std::vector<Integer> h(static_cast<std::size_t>(order) + 1, Integer(0));
  h[0] = 1;
  Integer acc, term;
  for (int n = 1; n <= order; ++n) {
    acc = 0;
    for (int k : nzf) {
      if (k > n) break;
      const long long weight =
          (static_cast<long long>(u) + v) * k - static_cast<long long>(n) * v;
      if (weight == 0) continue;
      if (v == 1 || pow2) {
        mpz_mul(term.get_mpz_t(), f.coefficient(k).get_num().get_mpz_t(),
                h[static_cast<std::size_t>(n - k)].get_mpz_t());
        if (pow2) {
          mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(),
                       shift * (2 * static_cast<unsigned long>(k) - 1));
        }
      } else {
        mpz_mul(term.get_mpz_t(), scaled_f[static_cast<std::size_t>(k)].get_mpz_t(),
                h[static_cast<std::size_t>(n - k)].get_mpz_t());
      }
      mpz_mul_si(term.get_mpz_t(), term.get_mpz_t(), weight);
      mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
    h[static_cast<std::size_t>(n)] = acc;
  }

  std::vector<Rational> coeffs(h.size());
  coeffs[0] = 1;
  Integer v2n(1);  // v^{2n}
  for (std::size_t n = 1; n < h.size(); ++n) {
    if (v == 1) {
      coeffs[n] = Rational(std::move(h[n]));
    } else {
      v2n *= static_cast<long>(v) * v;
      Rational c(std::move(h[n]), v2n);
      c.canonicalize();
      coeffs[n] = std::move(c);
    }
  }
  return QExpansion(Rational(0), std::move(coeffs));
}

}  // namespace

namespace detail {

QExpansion pow_rational_generic(const QExpansion& f, const Rational& mu) {
  require_pow_preconditions(f);
  const int order = f.truncation_order();
  if (mu == 0) return QExpansion::one(order);
  std::vector<int> nzf = nonzero_indices(f.coefficients(), 1);

  const Rational mu1 = mu + 1;
  std::vector<Rational> g(static_cast<std::size_t>(order) + 1, Rational(0));
  g[0] = 1;
  mpq_class acc, term;
  for (int n = 1; n <= order; ++n) {
    acc = 0;
    for (int k : nzf) {
      if (k > n) break;
      Rational weight = mu1 * k - n;
      if (weight == 0) continue;
      mpq_mul(term.get_mpq_t(), f.coefficient(k).get_mpq_t(),
              g[static_cast<std::size_t>(n - k)].get_mpq_t());
      mpq_mul(term.get_mpq_t(), term.get_mpq_t(), weight.get_mpq_t());
      mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), term.get_mpq_t());
    }
    g[static_cast<std::size_t>(n)] = acc / n;
  }
  return QExpansion(Rational(0), std::move(g));
}

}  // namespace detail

QExpansion pow_rational(const QExpansion& f, const Rational& mu) {
  require_pow_preconditions(f);
  if (mu == 0) return QExpansion::one(f.truncation_order());
  if (f.is_integral() && mpz_fits_slong_p(mu.get_num().get_mpz_t()) &&
      mpz_fits_slong_p(mu.get_den().get_mpz_t())) {
    const long u = mu.get_num().get_si();
    const long v = mu.get_den().get_si();
    // Keep the small-weight product ((u+v)k - nv) inside long long.
    if (std::abs(u) < (1L << 31) && v < (1L << 31) && f.truncation_order() < (1 << 30)) {
      return pow_rational_scaled(f, u, v);
    }
  }
  return detail::pow_rational_generic(f, mu);
}

QExpansion operator+(const QExpansion& f, const QExpansion& g) { return add(f, g); }
QExpansion operator-(const QExpansion& f, const QExpansion& g) { return sub(f, g); }
QExpansion operator*(const QExpansion& f, const QExpansion& g) { return mul(f, g); }
QExpansion operator*(const Rational& value, const QExpansion& f) { return scale(value, f); }

QExpansion euler_product(int order, int min_part) {
  if (order < 0) throw std::domain_error("truncation order must be nonnegative");
  if (min_part < 1) throw std::domain_error("min_part must be at least 1");
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  c[0] = 1;
  for (int n = min_part; n <= order; ++n) {
    for (int k = order; k >= n; --k) {
      c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - n)];
    }
  }
  std::vector<Rational> coeffs(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) coeffs[n] = Rational(std::move(c[n]));
  return QExpansion(Rational(0), std::move(coeffs));
}

std::vector<Integer> partition_numbers(int max_n) {
  if (max_n < 0) throw std::domain_error("max_n must be nonnegative");
  std::vector<Integer> p(static_cast<std::size_t>(max_n) + 1, Integer(0));
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    Integer& pn = p[static_cast<std::size_t>(n)];
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const long g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        pn += p[static_cast<std::size_t>(n - g1)];
        if (g2 <= n) pn += p[static_cast<std::size_t>(n - g2)];
      } else {
        pn -= p[static_cast<std::size_t>(n - g1)];
        if (g2 <= n) pn -= p[static_cast<std::size_t>(n - g2)];
      }
    }
  }
  return p;
}

double hardy_ramanujan(long n) {
  if (n < 1) throw std::domain_error("hardy_ramanujan requires n >= 1");
  const double x = static_cast<double>(n);
  return std::exp(M_PI * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

QExpansion eta_power(const Rational& x, int order) {
  return pow_rational(euler_product(order, 1), x).shifted(x / 24);
}

Evaluation evaluate_with_error(const QExpansion& f, std::complex<double> tau) {
  if (tau.imag() <= 0.0) {
    throw std::domain_error("evaluation requires Im(tau) > 0");
  }
  const std::complex<double> two_pi_i_tau(-2.0 * M_PI * tau.imag(), 2.0 * M_PI * tau.real());
  const std::complex<double> q = std::exp(two_pi_i_tau);
  const double alpha = to_double(f.leading_exponent());

  const int order = f.truncation_order();
  const int tail_terms = (order + 3) / 4;  // ceil(order / 4)
  const int tail_from = order + 1 - tail_terms;

  std::complex<double> q_power = std::exp(two_pi_i_tau * alpha);
  std::complex<double> sum(0.0, 0.0);
  std::complex<double> tail(0.0, 0.0);
  for (int n = 0; n <= order; ++n) {
    const Rational& a = f.coefficient(n);
    if (a != 0) {
      const std::complex<double> term = to_double(a) * q_power;
      sum += term;
      if (n >= tail_from) tail += term;
    }
    q_power *= q;
  }
  return Evaluation{sum, std::abs(tail)};
}

}  // namespace virasoro
