#include "prolate/legendre.hpp"

#include "prolate/errors.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace prolate {

const char* to_string(Parity p) {
  switch (p) {
  case Parity::even:
    return "even";
  case Parity::odd:
    return "odd";
  case Parity::none:
    return "none";
  }
  return "none";
}

LegendreSeries::LegendreSeries(std::vector<double> coeffs, Parity parity)
    : coeffs_(std::move(coeffs)), parity_(parity) {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n]))
      throw NumericalError(fmt::format("non-finite Legendre coefficient at n={}", n));
    const bool wrong = (parity_ == Parity::even && n % 2 == 1) ||
                       (parity_ == Parity::odd && n % 2 == 0);
    if (wrong && coeffs_[n] != 0.0)
      throw ParityError(fmt::format("coefficient {} violates {} parity", n, to_string(parity_)));
  }
}

namespace {

void check_unit_interval(double t) {
  if (!(std::abs(t) <= 1.0))
    throw DomainError(fmt::format("t = {} lies outside [-1,1]", t));
}

// Exact factorial ratios for small k, log-gamma with sign tracking beyond.
constexpr int kDirectFactorialLimit = 20;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

} // namespace

double legendre_eval(int n, double t) {
  if (n < 0)
    throw DomainError(fmt::format("Legendre degree {} is negative", n));
  check_unit_interval(t);
  if (n == 0)
    return 1.0;
  double pm1 = 1.0;
  double p = t;
  for (int j = 1; j < n; ++j) {
    const double next = ((2 * j + 1) * t * p - j * pm1) / (j + 1);
    pm1 = p;
    p = next;
  }
  return p;
}

double legendre_at_zero(int k) {
  if (k < 0)
    throw DomainError(fmt::format("Legendre degree {} is negative", k));
  if (k % 2 != 0)
    throw ParityError(fmt::format("P_{}(0) vanishes for odd degree; use the derivative", k));
  const int h = k / 2;
  const double sign = (h % 2 == 0) ? 1.0 : -1.0;
  if (k <= kDirectFactorialLimit)
    return sign * factorial(k) / (std::ldexp(1.0, k) * factorial(h) * factorial(h));
  const double log_mag =
      std::lgamma(k + 1.0) - k * std::numbers::ln2 - 2.0 * std::lgamma(h + 1.0);
  return sign * std::exp(log_mag);
}

double legendre_deriv_at_zero(int k) {
  if (k < 0)
    throw DomainError(fmt::format("Legendre degree {} is negative", k));
  if (k % 2 == 0)
    throw ParityError(fmt::format("P_{}'(0) vanishes for even degree", k));
  const int lo = (k - 1) / 2;
  const int hi = (k + 1) / 2;
  const double sign = (lo % 2 == 0) ? 1.0 : -1.0;
  if (k <= kDirectFactorialLimit)
    return sign * factorial(k + 1) / (std::ldexp(1.0, k) * factorial(lo) * factorial(hi));
  const double log_mag = std::lgamma(k + 2.0) - k * std::numbers::ln2 -
                         std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0);
  return sign * std::exp(log_mag);
}

QuadratureRule gauss_legendre(int m) {
  if (m < 1)
    throw DomainError(fmt::format("quadrature size {} must be positive", m));
  QuadratureRule rule;
  rule.nodes.assign(m, 0.0);
  rule.weights.assign(m, 0.0);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 1; j < m; ++j) {
        const double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15)
        break;
    }
    // Derivative at the converged root.
    {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 1; j < m; ++j) {
        const double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    if (2 * i + 1 == m)
      x = 0.0;
    rule.nodes[m - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[m - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

double series_eval(const LegendreSeries& s, double t) {
  check_unit_interval(t);
  const auto& c = s.coeffs();
  // Clenshaw with P_{n+1} = alpha_n P_n + beta_n P_{n-1},
  // alpha_n = (2n+1)t/(n+1), beta_n = -n/(n+1).
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t idx = c.size(); idx-- > 0;) {
    const double n = static_cast<double>(idx);
    const double alpha = (2.0 * n + 1.0) * t / (n + 1.0);
    const double beta_next = -(n + 1.0) / (n + 2.0);
    const double b0 = c[idx] + alpha * b1 + beta_next * b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

double series_deriv_at_zero(const LegendreSeries& s) {
  const auto& c = s.coeffs();
  double d = 0.0;
  for (std::size_t n = 1; n < c.size(); n += 2)
    if (c[n] != 0.0)
      d += c[n] * legendre_deriv_at_zero(static_cast<int>(n));
  return d;
}

double series_inner(const LegendreSeries& f, const LegendreSeries& g) {
  const std::size_t len = std::min(f.size(), g.size());
  double acc = 0.0;
  for (std::size_t n = 0; n < len; ++n)
    acc += f.coeffs()[n] * g.coeffs()[n] * 2.0 / (2.0 * n + 1.0);
  return acc;
}

double series_inner_t(const LegendreSeries& f, const LegendreSeries& g) {
  // t P_j = ((j+1) P_{j+1} + j P_{j-1}) / (2j+1)
  const auto& cf = f.coeffs();
  const auto& cg = g.coeffs();
  double acc = 0.0;
  for (std::size_t j = 0; j < cg.size(); ++j) {
    if (cg[j] == 0.0)
      continue;
    const double jd = static_cast<double>(j);
    double term = 0.0;
    if (j + 1 < cf.size())
      term += (jd + 1.0) / (2.0 * jd + 1.0) * cf[j + 1] * 2.0 / (2.0 * jd + 3.0);
    if (j >= 1 && j - 1 < cf.size())
      term += jd / (2.0 * jd + 1.0) * cf[j - 1] * 2.0 / (2.0 * jd - 1.0);
    acc += cg[j] * term;
  }
  return acc;
}

double series_inner_deriv(const LegendreSeries& f, const LegendreSeries& g) {
  // P_l' = sum over j < l with l - j odd of (2j+1) P_j, so the P_j coefficient
  // of g' is (2j+1) S_j with S_j = g_{j+1} + g_{j+3} + ...
  const auto& cf = f.coeffs();
  const auto& cg = g.coeffs();
  const std::size_t len = cg.size();
  std::vector<double> suffix(len + 2, 0.0);
  for (std::size_t j = len; j-- > 0;)
    suffix[j] = (j + 1 < len ? cg[j + 1] : 0.0) + suffix[j + 2];
  double acc = 0.0;
  const std::size_t upto = std::min(cf.size(), len);
  for (std::size_t j = 0; j < upto; ++j)
    acc += cf[j] * suffix[j];
  return 2.0 * acc;
}

} // namespace prolate
