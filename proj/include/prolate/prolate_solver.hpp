#ifndef PROLATE_PROLATE_SOLVER_HPP
#define PROLATE_PROLATE_SOLVER_HPP

#include "prolate/legendre.hpp"

#include <cstddef>
#include <vector>

namespace prolate {

/// Operator -((1-t^2) g')' + c^2 t^2 g on [-1,1] restricted to one parity
/// class, written in the orthonormal Legendre basis sqrt(n+1/2) P_n. The
/// bandwidth is c = a^2, the time-bandwidth product of the truncation of the
/// Fourier operator to [-a,a]. Row i holds the basis function of degree
/// 2i (even) or 2i+1 (odd); offdiag[i] couples rows i and i+1.
struct GalerkinMatrix {
  Parity parity = Parity::even;
  double a = 0.0;
  int N = 0;
  std::vector<double> diag;
  std::vector<double> offdiag;

  int degree(int row) const { return 2 * row + (parity == Parity::odd ? 1 : 0); }
};

GalerkinMatrix assemble(double a, Parity parity, int N);

/// One angular prolate function g_k(t, a) with its eigenvalue gamma_k(a).
struct ProlateFunction {
  int k = 0;
  double a = 0.0;
  double gamma = 0.0;
  /// Unnormalized Legendre coefficients, normalized so that g_k(0) = P_k(0)
  /// (even k) or g_k'(0) = P_k'(0) (odd k).
  LegendreSeries series;
  Parity parity = Parity::even;
  /// Basis size per parity class used for the solve.
  int truncation = 0;
  /// |A v - gamma v|_inf / |v|_inf on the orthonormal coefficient vector.
  double residual = 0.0;
  /// Value (even) or slope (odd) at 0 was too small for the pointwise
  /// normalization; the series carries unit L^2 norm instead.
  bool normalization_fallback = false;
  /// gamma agreed with the neighbour of opposite parity within 1e-12 and the
  /// order was fixed even-first.
  bool near_tie = false;
};

struct SolverOptions {
  /// Hard cap on the basis size per parity class.
  int max_basis = 16384;
  /// Coefficient decay required of the last retained coefficient.
  double tail_tolerance = 1e-14;
};

/// Reads PROLATE_MAX_N into the options when set.
SolverOptions solver_options_from_env();

/// Eigenfunctions k = 0..k_max in increasing order of gamma.
std::vector<ProlateFunction> compute_prolate(double a, int k_max,
                                             const SolverOptions& options = {});

double prolate_eval(const ProlateFunction& pf, double t);

/// mu = gamma / a^2, the eigenvalue of the operator on [-a,a].
double gamma_to_mu(double gamma, double a);

/// e_k(t, a) = g_k(t/a, a) for |t| <= a.
double eigenfunction_on_big_interval(const ProlateFunction& pf, double t);

} // namespace prolate

#endif
