#ifndef PROLATE_FOURIER_SPECTRUM_HPP
#define PROLATE_FOURIER_SPECTRUM_HPP

#include "prolate/prolate_solver.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace prolate {

// The truncated Fourier operator acts on L^2([-a,a]) with kernel
// exp(i t xi) / sqrt(2 pi); its adjoint product is the sinc operator with
// kernel sin(a(t - tau)) / (pi (t - tau)).

enum SpectrumFlag : unsigned {
  kFlagNormalizationFallback = 1u << 0,
  kFlagNearTie = 1u << 1,
  /// The moment formula was well conditioned and agreed with the chain.
  kFlagMomentChecked = 1u << 2,
  /// sigma was within 1e-12 above 1 and clamped below 1.
  kFlagClamped = 1u << 3,
};

struct SpectrumEntry {
  int k = 0;
  double gamma = 0.0;
  double mu = 0.0;
  double sigma = 0.0;
  /// Phase-snapped eigenvalue i^k |lambda|.
  std::complex<double> lambda;
  /// Eigenvalue before snapping.
  std::complex<double> lambda_raw;
  /// |arg(lambda_raw / i^k)|.
  double phase_error = 0.0;
  std::optional<double> sigma_oracle;
  unsigned flags = 0;
};

struct SpectrumTable {
  double a = 0.0;
  int k_max = 0;
  std::vector<SpectrumEntry> entries;
  std::vector<ProlateFunction> functions;
  /// max |sigma - sigma_oracle| when the Nystrom oracle was run.
  std::optional<double> oracle_agreement;
  /// Largest relative difference between moment and chained |lambda|.
  double moment_agreement = 0.0;
};

/// lambda_k from the eigen-relation at t = 0 (moment formula), before phase
/// snapping. Falls back to full quadrature at the peak of |e_k| when the
/// pointwise normalization degenerated.
std::complex<double> lambda_k_raw(const ProlateFunction& pf, double a);

/// lambda_k_raw snapped to the exact phase i^k. Throws NumericalError if the
/// raw phase deviates from i^k by more than 1e-8.
std::complex<double> lambda_k(const ProlateFunction& pf, double a);

/// |lambda_k|^2 in (0,1).
double sigma_k(const ProlateFunction& pf, double a);

/// Raw eigenvalues of the whole family from lambda_0 and the consecutive
/// ratios lambda_{k+1}/lambda_k = <g_{k+1}, g_k'> / (i a^2 <t g_{k+1}, g_k>).
std::vector<std::complex<double>> chained_lambdas(const std::vector<ProlateFunction>& functions,
                                                  double a);

SpectrumTable spectrum_table(double a, int k_max, bool with_oracle,
                             const SolverOptions& options = {});

/// Quadrature size used for the Nystrom oracle when the caller gives none.
int default_oracle_size(double a, int k_max);

/// Top k_max+1 eigenvalues of the sinc operator with kernel
/// sin(a^2 (t - tau)) / (pi (t - tau)) on [-1,1], Gauss-Legendre Nystrom.
std::vector<double> nystrom_sigma(double a, int k_max, int m);

/// Same spectrum from the unscaled kernel sin(a (t - tau)) / (pi (t - tau))
/// on [-a,a].
std::vector<double> nystrom_sigma_on_interval(double a, int k_max, int m);

/// Trace of the symmetrized Nystrom matrix on [-1,1].
double nystrom_trace(double a, int m);

/// (F* F e_k)(t) by m-point quadrature, for |t| <= a.
double apply_sinc_kernel(const ProlateFunction& pf, double t, int m);

} // namespace prolate

#endif
