#include "prolate/asymptotics.hpp"

#include "prolate/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace prolate {

namespace {

void check_positive(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw DomainError(fmt::format("a = {} must be positive", a));
}

void check_index(int k) {
  if (k < 0)
    throw DomainError(fmt::format("index k = {} must be nonnegative", k));
}

std::complex<double> i_pow(int k) {
  constexpr std::array<std::complex<double>, 4> table{
      std::complex<double>{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return table[k % 4];
}

double large_a_core(int k, double a) {
  // 8^k a^{2k+1} exp(-2a^2) / k!, assembled in logs
  return std::exp(k * std::log(8.0) + (2.0 * k + 1.0) * std::log(a) - 2.0 * a * a -
                  std::lgamma(k + 1.0));
}

} // namespace

double sigma_small_a(int k, double a) {
  check_index(k);
  check_positive(a);
  const double log_v = std::log(2.0 * std::numbers::pi) +
                       (2.0 * k + 1.0) * std::log(a * a / 4.0) - 2.0 * std::lgamma(k + 1.0);
  return std::exp(log_v);
}

std::complex<double> lambda_small_a(int k, double a) {
  check_index(k);
  check_positive(a);
  const double log_v = 0.5 * std::log(2.0 * std::numbers::pi) +
                       (2.0 * k + 1.0) * std::log(a / 2.0) - std::lgamma(k + 1.0);
  return i_pow(k) * std::exp(log_v);
}

double sigma_deficit_large_a(int k, double a) {
  check_index(k);
  check_positive(a);
  return 4.0 * std::sqrt(std::numbers::pi) * large_a_core(k, a);
}

double lambda_deficit_large_a(int k, double a) {
  check_index(k);
  check_positive(a);
  return 2.0 * std::sqrt(std::numbers::pi) * large_a_core(k, a);
}

int transition_index(double a, double b) {
  check_positive(a);
  const double arg = a * a + b * std::log(2.0 * a);
  if (!(arg >= 0.0))
    throw DomainError(fmt::format("a^2 + b ln(2a) = {} is negative (a = {}, b = {})", arg, a, b));
  return static_cast<int>(std::floor(2.0 / std::numbers::pi * arg));
}

double transition_sigma(double b) {
  const double x = std::numbers::pi * b;
  if (x > 0.0) {
    // (1+e^x)^{-1} = e^{-x} / (1 + e^{-x}); underflows cleanly to 0.
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

std::complex<double> log_gamma_complex(std::complex<double> z) {
  if (!(z.real() > 0.0))
    throw DomainError(fmt::format("log_gamma_complex needs Re z > 0, got {}", z.real()));
  if (z.real() < 0.5)
    return log_gamma_complex(z + 1.0) - std::log(z);

  static constexpr std::array<double, 9> p{
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  const std::complex<double> w = z - 1.0;
  std::complex<double> x = p[0];
  for (std::size_t i = 1; i < p.size(); ++i)
    x += p[i] / (w + static_cast<double>(i));
  const std::complex<double> t = w + g + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (w + 0.5) * std::log(t) - t + std::log(x);
}

double slepian_residual(double a, int k, double delta) {
  const double arg_gamma = log_gamma_complex({0.5, 0.5 * delta}).imag();
  return 2.0 / std::numbers::pi * a * a + 2.0 / std::numbers::pi * std::log(2.0 * a) -
         arg_gamma - (k - 0.5);
}

double slepian_delta(double a, int k) {
  if (!(a > 0.5))
    throw DomainError(fmt::format("slepian_delta needs a > 1/2, got {}", a));
  check_index(k);
  constexpr double kStep = 0.5;
  constexpr double kLimit = 50.0;
  auto f = [&](double d) { return slepian_residual(a, k, d); };
  if (f(0.0) == 0.0)
    return 0.0;

  auto bisect = [&](double lo, double hi) {
    double flo = f(lo);
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0.0)
        return mid;
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  const int steps = static_cast<int>(kLimit / kStep);
  for (int j = 1; j <= steps; ++j) {
    const double inner = (j - 1) * kStep;
    const double outer = j * kStep;
    std::optional<double> pos, neg;
    if ((f(inner) < 0.0) != (f(outer) < 0.0))
      pos = bisect(inner, outer);
    if ((f(-outer) < 0.0) != (f(-inner) < 0.0))
      neg = bisect(-outer, -inner);
    if (pos && neg)
      return std::abs(*pos) <= std::abs(*neg) ? *pos : *neg;
    if (pos)
      return *pos;
    if (neg)
      return *neg;
  }
  const double r_lo = f(-kLimit);
  const double r_hi = f(kLimit);
  throw NoRootError(fmt::format("transition equation has no sign change on [-{0}, {0}] "
                                "(a = {1}, k = {2}; residuals {3:.6g}, {4:.6g})",
                                kLimit, a, k, r_lo, r_hi),
                    r_lo, r_hi);
}

TransitionPoint transition_point(double a, double b, bool solve_delta) {
  TransitionPoint tp;
  tp.a = a;
  tp.b = b;
  tp.k = transition_index(a, b);
  tp.sigma_limit = transition_sigma(b);
  if (solve_delta)
    tp.delta = slepian_delta(a, tp.k);
  return tp;
}

const char* to_string(Regime r) {
  switch (r) {
  case Regime::small_a_sigma:
    return "small_a_sigma";
  case Regime::small_a_lambda:
    return "small_a_lambda";
  case Regime::large_a_deficit:
    return "large_a_deficit";
  case Regime::transition:
    return "transition";
  }
  return "small_a_sigma";
}

Regime regime_from_string(const std::string& s) {
  for (Regime r : {Regime::small_a_sigma, Regime::small_a_lambda, Regime::large_a_deficit,
                   Regime::transition})
    if (s == to_string(r))
      return r;
  throw DomainError(fmt::format("unknown asymptotic regime '{}'", s));
}

namespace {

AsymptoticRow make_row(double index, double a, double computed, double formula) {
  const double ratio = computed / formula;
  if (!std::isfinite(ratio) || !(ratio > 0.0))
    throw NumericalError(fmt::format("ratio {} / {} is not finite and positive", computed, formula));
  return {index, a, computed, formula, ratio};
}

} // namespace

AsymptoticReport small_a_report(Regime regime, double a, int k_max) {
  if (regime != Regime::small_a_sigma && regime != Regime::small_a_lambda)
    throw DomainError("small_a_report handles the small-a regimes only");
  const auto table = spectrum_table(a, k_max, false);
  AsymptoticReport rep;
  rep.regime = regime;
  for (const auto& e : table.entries) {
    if (regime == Regime::small_a_sigma)
      rep.rows.push_back(make_row(e.k, a, e.sigma, sigma_small_a(e.k, a)));
    else
      rep.rows.push_back(make_row(e.k, a, std::abs(e.lambda), std::abs(lambda_small_a(e.k, a))));
  }
  return rep;
}

AsymptoticReport large_a_deficit_report(double a, int k_max) {
  const auto table = spectrum_table(a, k_max, false);
  AsymptoticReport rep;
  rep.regime = Regime::large_a_deficit;
  for (const auto& e : table.entries)
    rep.rows.push_back(make_row(e.k, a, 1.0 - e.sigma, sigma_deficit_large_a(e.k, a)));
  return rep;
}

AsymptoticReport transition_report(double a, std::span<const double> bs) {
  int k_top = 0;
  for (double b : bs)
    k_top = std::max(k_top, transition_index(a, b));
  const auto table = spectrum_table(a, k_top, false);
  AsymptoticReport rep;
  rep.regime = Regime::transition;
  for (double b : bs) {
    const int k = transition_index(a, b);
    rep.rows.push_back(make_row(b, a, table.entries[k].sigma, transition_sigma(b)));
  }
  return rep;
}

} // namespace prolate
