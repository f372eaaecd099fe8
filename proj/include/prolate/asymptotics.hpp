#ifndef PROLATE_ASYMPTOTICS_HPP
#define PROLATE_ASYMPTOTICS_HPP

#include "prolate/fourier_spectrum.hpp"

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prolate {

// Leading terms of the asymptotic laws for the spectrum. All of them return
// the leading term only; comparisons against computed spectra are ratios.

/// 2 pi (a^2/4)^{2k+1} / (k!)^2, small-a law for sigma_k.
double sigma_small_a(int k, double a);

/// i^k sqrt(2 pi) (a/2)^{2k+1} / k!, small-a law for lambda_k.
std::complex<double> lambda_small_a(int k, double a);

/// 4 sqrt(pi) 8^k a^{2k+1} exp(-2 a^2) / k!, large-a law for 1 - sigma_k.
double sigma_deficit_large_a(int k, double a);

/// 2 sqrt(pi) 8^k a^{2k+1} exp(-2 a^2) / k!, large-a law for 1 - |lambda_k|.
double lambda_deficit_large_a(int k, double a);

/// floor((2/pi)(a^2 + b ln(2a))).
int transition_index(double a, double b);

/// (1 + exp(pi b))^{-1}.
double transition_sigma(double b);

/// Principal log Gamma(z) for Re z > 0 (continuous imaginary part, real on
/// the positive axis), Lanczos g = 7.
std::complex<double> log_gamma_complex(std::complex<double> z);

/// Left side minus right side of the transition equation
/// (2/pi) a^2 + (2/pi) ln(2a) - arg Gamma(1/2 + i delta/2) = k - 1/2.
double slepian_residual(double a, int k, double delta);

/// Root of smallest absolute value of slepian_residual in [-50, 50].
double slepian_delta(double a, int k);

struct TransitionPoint {
  double a = 0.0;
  double b = 0.0;
  int k = 0;
  double sigma_limit = 0.0;
  std::optional<double> delta;
};

TransitionPoint transition_point(double a, double b, bool solve_delta);

enum class Regime { small_a_sigma, small_a_lambda, large_a_deficit, transition };

const char* to_string(Regime r);
Regime regime_from_string(const std::string& s);

struct AsymptoticRow {
  /// k for the fixed-index regimes, b for the transition regime.
  double index = 0.0;
  double a = 0.0;
  double computed = 0.0;
  double formula = 0.0;
  double ratio = 0.0;
};

struct AsymptoticReport {
  Regime regime = Regime::small_a_sigma;
  std::vector<AsymptoticRow> rows;
};

/// sigma_k(a) (or |lambda_k(a)|) against the small-a law for k = 0..k_max.
AsymptoticReport small_a_report(Regime regime, double a, int k_max);

/// 1 - sigma_k(a) against the large-a deficit law for k = 0..k_max.
AsymptoticReport large_a_deficit_report(double a, int k_max);

/// sigma_{k(a,b)}(a) against (1 + exp(pi b))^{-1} for each b.
AsymptoticReport transition_report(double a, std::span<const double> bs);

} // namespace prolate

#endif
