#include "prolate/prolate_solver.hpp"

#include "prolate/errors.hpp"
#include "prolate/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include <fmt/format.h>

namespace prolate {

GalerkinMatrix assemble(double a, Parity parity, int N) {
  if (!(a >= 0.0) || !std::isfinite(a))
    throw DomainError(fmt::format("bandwidth parameter a = {} must be nonnegative", a));
  if (parity == Parity::none)
    throw ParityError("the Galerkin matrix is assembled per parity class");
  if (N < 2)
    throw DomainError(fmt::format("basis size N = {} must be at least 2", N));

  GalerkinMatrix m;
  m.parity = parity;
  m.a = a;
  m.N = N;
  m.diag.resize(N);
  m.offdiag.resize(N - 1);
  const double c = a * a;
  const double c2 = c * c;
  for (int i = 0; i < N; ++i) {
    const double n = m.degree(i);
    // <t^2 P~_n, P~_n> = (2n^2+2n-1)/((2n-1)(2n+3))
    const double t2 = (2.0 * n * n + 2.0 * n - 1.0) / ((2.0 * n - 1.0) * (2.0 * n + 3.0));
    m.diag[i] = n * (n + 1.0) + c2 * t2;
    if (i + 1 < N) {
      // <t^2 P~_n, P~_{n+2}>
      const double t2c =
          (n + 1.0) * (n + 2.0) / ((2.0 * n + 3.0) * std::sqrt((2.0 * n + 1.0) * (2.0 * n + 5.0)));
      m.offdiag[i] = c2 * t2c;
    }
  }
  return m;
}

SolverOptions solver_options_from_env() {
  SolverOptions opt;
  if (const char* env = std::getenv("PROLATE_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 2 || v > (1L << 24))
      throw DomainError(fmt::format("PROLATE_MAX_N='{}' is not a valid basis size", env));
    opt.max_basis = static_cast<int>(v);
  }
  return opt;
}

namespace {

struct RawPair {
  Parity parity;
  double gamma;
  std::vector<double> vec; // orthonormal-basis coefficients
  double residual;
};

// Lowest `count` eigenpairs of one parity block.
std::vector<RawPair> solve_block(const GalerkinMatrix& m, int count) {
  const auto values = tridiagonal_eigenvalues(m.diag, m.offdiag);
  std::vector<RawPair> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    auto v = tridiagonal_eigenvector(m.diag, m.offdiag, values[j]);
    const double g = tridiagonal_rayleigh(m.diag, m.offdiag, v);
    const double res = tridiagonal_residual(m.diag, m.offdiag, v, g);
    out.push_back({m.parity, g, std::move(v), res});
  }
  return out;
}

// Trailing coefficient relative to the largest, in the unnormalized basis.
double tail_ratio(const RawPair& p, Parity parity) {
  double peak = 0.0;
  const std::size_t n = p.vec.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double deg = 2.0 * i + (parity == Parity::odd ? 1.0 : 0.0);
    peak = std::max(peak, std::abs(p.vec[i]) * std::sqrt(deg + 0.5));
  }
  const double deg_last = 2.0 * (n - 1) + (parity == Parity::odd ? 1.0 : 0.0);
  return std::abs(p.vec[n - 1]) * std::sqrt(deg_last + 0.5) / peak;
}

bool near_equal(double x, double y) {
  return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
}

ProlateFunction normalize(const RawPair& p, int k, double a, int N) {
  const bool odd = p.parity == Parity::odd;
  std::vector<double> coeffs(2 * static_cast<std::size_t>(N), 0.0);
  double peak = 0.0;
  for (std::size_t i = 0; i < p.vec.size(); ++i) {
    const std::size_t deg = 2 * i + (odd ? 1 : 0);
    coeffs[deg] = p.vec[i] * std::sqrt(deg + 0.5);
    peak = std::max(peak, std::abs(coeffs[deg]));
  }
  LegendreSeries raw(coeffs, p.parity);

  ProlateFunction pf;
  pf.k = k;
  pf.a = a;
  pf.gamma = p.gamma;
  pf.parity = p.parity;
  pf.truncation = N;
  pf.residual = p.residual;

  const double at_zero = odd ? series_deriv_at_zero(raw) : series_eval(raw, 0.0);
  if (std::abs(at_zero) < 1e-12 * peak) {
    // Unit L^2 norm already holds for the orthonormal vector; fix the sign
    // by the largest coefficient.
    pf.normalization_fallback = true;
    const auto it = std::max_element(coeffs.begin(), coeffs.end(),
                                     [](double x, double y) { return std::abs(x) < std::abs(y); });
    if (*it < 0.0)
      for (double& c : coeffs)
        c = -c;
  } else {
    const double target = odd ? legendre_deriv_at_zero(k) : legendre_at_zero(k);
    const double scale = target / at_zero;
    for (double& c : coeffs)
      c *= scale;
  }
  pf.series = LegendreSeries(std::move(coeffs), p.parity);
  return pf;
}

} // namespace

std::vector<ProlateFunction> compute_prolate(double a, int k_max, const SolverOptions& options) {
  if (!(a >= 0.0) || !std::isfinite(a))
    throw DomainError(fmt::format("bandwidth parameter a = {} must be nonnegative", a));
  if (k_max < 0)
    throw DomainError(fmt::format("k_max = {} must be nonnegative", k_max));

  const double c = a * a;
  // One spare eigenpair per class so the merge can detect a misordering.
  const int n_even = k_max / 2 + 2;
  const int n_odd = (k_max + 1) / 2 + 1;
  const int cap = std::max(options.max_basis, 2);
  int N = std::max(2 * k_max + 30, static_cast<int>(std::ceil(1.5 * c)) + 30);
  N = std::min(N, cap);

  std::vector<RawPair> even, odd;
  double worst_tail = 0.0;
  for (;;) {
    even = solve_block(assemble(a, Parity::even, N), std::min(n_even, N));
    odd = solve_block(assemble(a, Parity::odd, N), std::min(n_odd, N));
    worst_tail = 0.0;
    for (const auto& p : even)
      worst_tail = std::max(worst_tail, tail_ratio(p, Parity::even));
    for (const auto& p : odd)
      worst_tail = std::max(worst_tail, tail_ratio(p, Parity::odd));
    const bool enough = static_cast<int>(even.size()) == n_even &&
                        static_cast<int>(odd.size()) == n_odd;
    if (enough && worst_tail < options.tail_tolerance)
      break;
    if (N >= cap)
      throw ConvergenceError(
          fmt::format("Legendre coefficients did not decay below {} at basis size {} "
                      "(a = {}, k_max = {}); trailing ratio {:.3e}",
                      options.tail_tolerance, N, a, k_max, worst_tail),
          worst_tail);
    N = std::min(2 * N, cap);
  }

  // Merge the parity classes by gamma, even first on near-ties.
  std::vector<RawPair> merged;
  merged.reserve(even.size() + odd.size());
  std::size_t ie = 0, io = 0;
  std::vector<bool> tie_flag;
  while (static_cast<int>(merged.size()) < k_max + 1) {
    const bool take_even =
        io >= odd.size() ||
        (ie < even.size() &&
         (even[ie].gamma < odd[io].gamma || near_equal(even[ie].gamma, odd[io].gamma)));
    const bool tie = ie < even.size() && io < odd.size() &&
                     near_equal(even[ie].gamma, odd[io].gamma);
    merged.push_back(take_even ? even[ie++] : odd[io++]);
    tie_flag.push_back(tie);
  }

  std::vector<ProlateFunction> out;
  out.reserve(merged.size());
  for (int k = 0; k <= k_max; ++k) {
    const auto& p = merged[k];
    const Parity expected = (k % 2 == 0) ? Parity::even : Parity::odd;
    if (p.parity != expected)
      throw ConsistencyError(
          fmt::format("eigenvalue ordering breaks parity alternation at k = {} (a = {})", k, a));
    auto pf = normalize(p, k, a, N);
    pf.near_tie = tie_flag[k] || (k > 0 && tie_flag[k - 1]);
    out.push_back(std::move(pf));
  }
  return out;
}

double prolate_eval(const ProlateFunction& pf, double t) { return series_eval(pf.series, t); }

double gamma_to_mu(double gamma, double a) {
  if (!(a > 0.0))
    throw DomainError(fmt::format("gamma_to_mu needs a > 0, got {}", a));
  return gamma / (a * a);
}

double eigenfunction_on_big_interval(const ProlateFunction& pf, double t) {
  if (!(pf.a > 0.0))
    throw DomainError("e_k(t, a) is defined for a > 0 only");
  if (!(std::abs(t) <= pf.a))
    throw DomainError(fmt::format("t = {} lies outside [-a, a] with a = {}", t, pf.a));
  return series_eval(pf.series, t / pf.a);
}

} // namespace prolate
