#ifndef PROLATE_SPECTRAL_ANALYSIS_HPP
#define PROLATE_SPECTRAL_ANALYSIS_HPP

#include "prolate/fourier_spectrum.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace prolate {

/// max(ln a, 0).
double ln_plus(double a);

/// (2/pi^2) ln+ a + 1, the right side of the sum sigma(1 - sigma) bound.
double itz_bound(double a);

/// Smallest k_max that makes the omitted tail of the trace negligible.
int trace_k_max(double a);

struct TraceReport {
  double a = 0.0;
  double sum_sigma = 0.0;
  double target = 0.0;
  double sum_sigma_sq = 0.0;
  double lower_bound = 0.0;
  double itz_sum = 0.0;
  double itz_bound = 0.0;
  double tail_estimate = 0.0;
  /// Geometric decay ratio of the last computed sigmas.
  double tail_ratio = 0.0;
  bool tail_trusted = true;
  double tolerance = 0.0;
  bool trace_ok = false;
  bool square_bound_ok = false;
  bool itz_ok = false;
};

/// Relative tolerance on the trace identity.
inline constexpr double kTraceTolerance = 1e-6;

TraceReport trace_check(const SpectrumTable& table);

struct PlungeReport {
  double a = 0.0;
  double epsilon = 0.0;
  int n_above_eps = 0;
  int n_above_1m_eps = 0;
  int n_middle = 0;
  double bound_above_eps = 0.0;
  double bound_above_1m_eps = 0.0;
  double bound_middle = 0.0;
  /// Transition interval of indices [lo, hi] (real endpoints).
  double transition_lo = 0.0;
  double transition_hi = 0.0;
  bool transition_in_table = false;
  /// First k with sigma_k < 1/2.
  int half_crossing = 0;
  bool crossing_in_transition = false;
};

PlungeReport plunge_counts(const SpectrumTable& table, double epsilon);

enum class NetDomain { unit_interval, residue_classes, cross };

const char* to_string(NetDomain d);
NetDomain net_domain_from_string(const std::string& s);

struct ClassNet {
  int residue = 0;
  std::size_t count = 0;
  bool is_net = false;
  double largest_gap = 0.0;
  double witness = 0.0;
};

struct NetReport {
  double kappa = 0.0;
  NetDomain domain = NetDomain::unit_interval;
  bool is_net = false;
  double largest_gap = 0.0;
  /// Worst covered point: a real in [0,1], or a point on the cross.
  std::complex<double> witness;
  std::vector<ClassNet> residue_class_results;
};

NetReport interval_net_check(std::span<const double> values, double kappa);
NetReport residue_net_check(const SpectrumTable& table, double kappa);
NetReport cross_net_check(const SpectrumTable& table, double kappa);

/// Full sigma set as a net of [0,1].
NetReport sigma_net_check(const SpectrumTable& table, double kappa);

} // namespace prolate

#endif
