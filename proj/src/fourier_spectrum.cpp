#include "prolate/fourier_spectrum.hpp"

#include "prolate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace prolate {

namespace {

constexpr double kPhaseTolerance = 1e-8;
constexpr double kUnitTolerance = 1e-12;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

std::complex<double> i_pow(int k) {
  switch (k % 4) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return {0.0, 1.0};
  case 2:
    return {-1.0, 0.0};
  default:
    return {0.0, -1.0};
  }
}

void check_positive_a(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw DomainError(fmt::format("bandwidth parameter a = {} must be positive", a));
}

double peak_coefficient(const LegendreSeries& s) {
  double peak = 0.0;
  for (double c : s.coeffs())
    peak = std::max(peak, std::abs(c));
  return peak;
}

// lambda from the eigen-relation evaluated by quadrature at s* in [-1,1]:
// lambda g(s*) = a / sqrt(2 pi) * int_{-1}^{1} exp(i a^2 s* u) g(u) du.
std::complex<double> lambda_by_quadrature(const ProlateFunction& pf, double a) {
  const double c = a * a;
  double s_star = 0.0;
  double best = -1.0;
  for (int j = 0; j <= 400; ++j) {
    const double s = -1.0 + j / 200.0;
    const double v = std::abs(series_eval(pf.series, s));
    if (v > best) {
      best = v;
      s_star = s;
    }
  }
  const double g_star = series_eval(pf.series, s_star);
  if (!(std::abs(g_star) > 0.0))
    throw NumericalError(fmt::format("eigenfunction k = {} vanishes on the sampling grid", pf.k));
  const int m = static_cast<int>(pf.series.size()) + static_cast<int>(std::ceil(c)) + 32;
  const auto rule = gauss_legendre(m);
  std::complex<double> acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double u = rule.nodes[j];
    acc += rule.weights[j] * std::polar(1.0, c * s_star * u) * series_eval(pf.series, u);
  }
  const auto lambda = a * kInvSqrt2Pi * acc / g_star;
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) || std::abs(lambda) == 0.0)
    throw NumericalError(fmt::format("quadrature eigenvalue for k = {} degenerated", pf.k));
  return lambda;
}

} // namespace

std::complex<double> lambda_k_raw(const ProlateFunction& pf, double a) {
  check_positive_a(a);
  const auto& c = pf.series.coeffs();
  const bool odd = pf.parity == Parity::odd;
  const double at_zero = odd ? series_deriv_at_zero(pf.series) : series_eval(pf.series, 0.0);
  if (pf.normalization_fallback && std::abs(at_zero) < 1e-12 * peak_coefficient(pf.series))
    return lambda_by_quadrature(pf, a);
  if (!odd) {
    // int_{-1}^{1} g = 2 c_0
    return {2.0 * a * c.at(0) * kInvSqrt2Pi / at_zero, 0.0};
  }
  // int_{-1}^{1} t g = 2 c_1 / 3
  return {0.0, 2.0 * a * a * a * c.at(1) * kInvSqrt2Pi / (3.0 * at_zero)};
}

std::complex<double> lambda_k(const ProlateFunction& pf, double a) {
  const auto raw = lambda_k_raw(pf, a);
  const double phase = std::abs(std::arg(raw / i_pow(pf.k)));
  if (phase > kPhaseTolerance)
    throw NumericalError(
        fmt::format("phase of lambda_{} deviates from i^k by {:.3e}", pf.k, phase));
  return i_pow(pf.k) * std::abs(raw);
}

double sigma_k(const ProlateFunction& pf, double a) {
  const double m = std::abs(lambda_k(pf, a));
  double s = m * m;
  if (s >= 1.0) {
    if (s - 1.0 > kUnitTolerance)
      throw NumericalError(fmt::format("sigma_{} = {} exceeds 1", pf.k, s));
    s = std::nextafter(1.0, 0.0);
  }
  if (!(s > 0.0))
    throw NumericalError(fmt::format("sigma_{} underflowed to {}", pf.k, s));
  return s;
}

std::vector<std::complex<double>> chained_lambdas(const std::vector<ProlateFunction>& functions,
                                                  double a) {
  check_positive_a(a);
  std::vector<std::complex<double>> out;
  if (functions.empty())
    return out;
  if (functions.front().k != 0)
    throw PreconditionError("the eigenvalue chain starts at k = 0");
  const double c = a * a;
  out.reserve(functions.size());
  out.push_back(lambda_k_raw(functions.front(), a));
  for (std::size_t k = 0; k + 1 < functions.size(); ++k) {
    const auto& lo = functions[k].series;
    const auto& hi = functions[k + 1].series;
    const double num = series_inner_deriv(hi, lo);
    const double den = c * series_inner_t(hi, lo);
    if (den == 0.0)
      throw NumericalError(fmt::format("eigenvalue ratio {}->{} has zero denominator", k, k + 1));
    // num / (i den) = -i num / den
    out.push_back(out.back() * std::complex<double>(0.0, -num / den));
  }
  return out;
}

SpectrumTable spectrum_table(double a, int k_max, bool with_oracle, const SolverOptions& options) {
  check_positive_a(a);
  if (k_max < 0)
    throw DomainError(fmt::format("k_max = {} must be nonnegative", k_max));

  SpectrumTable table;
  table.a = a;
  table.k_max = k_max;
  table.functions = compute_prolate(a, k_max, options);
  const auto raw = chained_lambdas(table.functions, a);

  table.entries.reserve(table.functions.size());
  for (const auto& pf : table.functions) {
    SpectrumEntry e;
    e.k = pf.k;
    e.gamma = pf.gamma;
    e.mu = gamma_to_mu(pf.gamma, a);
    e.lambda_raw = raw[pf.k];
    e.phase_error = std::abs(std::arg(e.lambda_raw / i_pow(pf.k)));
    const double mag = std::abs(e.lambda_raw);
    e.lambda = i_pow(pf.k) * mag;
    e.sigma = mag * mag;
    if (e.sigma >= 1.0) {
      if (e.sigma - 1.0 > kUnitTolerance)
        throw NumericalError(fmt::format("sigma_{}({}) = {} exceeds 1", pf.k, a, e.sigma));
      e.sigma = std::nextafter(1.0, 0.0);
      e.flags |= kFlagClamped;
    }
    if (!(e.sigma > 0.0))
      throw NumericalError(
          fmt::format("sigma_{}({}) underflowed; reduce k_max", pf.k, a));
    if (pf.normalization_fallback)
      e.flags |= kFlagNormalizationFallback;
    if (pf.near_tie)
      e.flags |= kFlagNearTie;

    // Cross-check against the moment formula where its coefficient is resolved.
    const auto& c = pf.series.coeffs();
    const double lead = std::abs(pf.parity == Parity::odd ? c.at(1) : c.at(0));
    if (!pf.normalization_fallback && lead >= 1e-8 * peak_coefficient(pf.series)) {
      const double moment = std::abs(lambda_k_raw(pf, a));
      table.moment_agreement = std::max(table.moment_agreement, std::abs(moment - mag) / mag);
      e.flags |= kFlagMomentChecked;
    }
    table.entries.push_back(e);
  }

  for (std::size_t k = 0; k + 1 < table.entries.size(); ++k) {
    const double s0 = table.entries[k].sigma;
    const double s1 = table.entries[k + 1].sigma;
    if (s1 > s0 + kUnitTolerance)
      throw ConsistencyError(fmt::format(
          "sigma ordering violated at k = {}: {} then {} (a = {})", k, s0, s1, a));
  }

  if (with_oracle) {
    const auto oracle = nystrom_sigma(a, k_max, default_oracle_size(a, k_max));
    double worst = 0.0;
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
      table.entries[k].sigma_oracle = oracle[k];
      worst = std::max(worst, std::abs(oracle[k] - table.entries[k].sigma));
    }
    table.oracle_agreement = worst;
  }
  return table;
}

int default_oracle_size(double a, int k_max) {
  return std::max(64, static_cast<int>(std::ceil(3.0 * a * a)) + 4 * k_max);
}

namespace {

// Top k_max+1 eigenvalues of the sinc operator with the given bandwidth on
// [-half_width, half_width].
std::vector<double> nystrom_impl(double half_width, double bandwidth, double a, int k_max, int m) {
  check_positive_a(a);
  if (k_max < 0)
    throw DomainError(fmt::format("k_max = {} must be nonnegative", k_max));
  const int need = std::max(4 * (k_max + 1), static_cast<int>(std::ceil(3.0 * a * a)));
  if (m < need)
    throw PreconditionError(fmt::format(
        "Nystrom size m = {} is below the resolution bound {} (a = {}, k_max = {})", m, need, a,
        k_max));
  const auto rule = gauss_legendre(m);
  Eigen::VectorXd x(m), sw(m);
  for (int i = 0; i < m; ++i) {
    x(i) = half_width * rule.nodes[i];
    sw(i) = std::sqrt(half_width * rule.weights[i]);
  }
  Eigen::MatrixXd K(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double d = x(i) - x(j);
      const double kern = (i == j) ? bandwidth / std::numbers::pi
                                   : std::sin(bandwidth * d) / (std::numbers::pi * d);
      K(i, j) = K(j, i) = sw(i) * kern * sw(j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("dense Nystrom eigensolve failed", 0.0);
  const auto& ev = es.eigenvalues();
  std::vector<double> out(k_max + 1);
  for (int k = 0; k <= k_max; ++k)
    out[k] = ev(m - 1 - k);
  return out;
}

} // namespace

std::vector<double> nystrom_sigma(double a, int k_max, int m) {
  return nystrom_impl(1.0, a * a, a, k_max, m);
}

std::vector<double> nystrom_sigma_on_interval(double a, int k_max, int m) {
  return nystrom_impl(a, a, a, k_max, m);
}

double nystrom_trace(double a, int m) {
  check_positive_a(a);
  const auto rule = gauss_legendre(m);
  double tr = 0.0;
  for (double w : rule.weights)
    tr += w * a * a / std::numbers::pi;
  return tr;
}

double apply_sinc_kernel(const ProlateFunction& pf, double t, int m) {
  const double a = pf.a;
  check_positive_a(a);
  if (!(std::abs(t) <= a))
    throw DomainError(fmt::format("t = {} lies outside [-a, a] with a = {}", t, a));
  const auto rule = gauss_legendre(m);
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double tau = a * rule.nodes[j];
    const double d = t - tau;
    const double kern = (d == 0.0) ? a / std::numbers::pi : std::sin(a * d) / (std::numbers::pi * d);
    acc += a * rule.weights[j] * kern * series_eval(pf.series, rule.nodes[j]);
  }
  return acc;
}

} // namespace prolate
