// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.
#include "prolate/asymptotics.hpp"
#include "prolate/fourier_spectrum.hpp"
#include "prolate/legendre.hpp"
#include "prolate/prolate_solver.hpp"
#include "prolate/spectral_analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

using namespace prolate;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, fmt::format("exception: {}", e.what())};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0.0 && elapsed > budget_s) {
    o.pass = false;
    o.detail += fmt::format("; exceeded {:.0f} s budget", budget_s);
  }
  if (!o.pass)
    ++failures;
  std::cout << fmt::format("criterion {:2d} {} [{}] ({:.2f} s): {}\n", id, o.pass ? "PASS" : "FAIL",
                           title, elapsed, o.detail)
            << std::flush;
}

// Monomial coefficients of P_k by the three-term recurrence, in exact-ish
// double arithmetic; independent of the library's Legendre evaluation.
std::vector<double> legendre_monomial(int k) {
  std::vector<double> p0{1.0}, p1{0.0, 1.0};
  if (k == 0)
    return p0;
  for (int n = 1; n < k; ++n) {
    std::vector<double> p2(n + 2, 0.0);
    for (int j = 0; j <= n; ++j)
      p2[j + 1] += (2.0 * n + 1.0) / (n + 1.0) * p1[j];
    for (int j = 0; j < n; ++j)
      p2[j] -= static_cast<double>(n) / (n + 1.0) * p0[j];
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

double monomial_eval(const std::vector<double>& c, double t) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    s = s * t + *it;
  return s;
}

Outcome legendre_limit() {
  const auto fns = compute_prolate(0.0, 10);
  double gamma_err = 0.0, coeff_err = 0.0, value_err = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const auto& pf = fns[k];
    gamma_err = std::max(gamma_err, std::abs(pf.gamma - k * (k + 1.0)));
    for (std::size_t j = 0; j < pf.series.size(); ++j)
      coeff_err = std::max(coeff_err, std::abs(pf.series[j] - (static_cast<int>(j) == k ? 1.0 : 0.0)));
    const auto mono = legendre_monomial(k);
    for (int i = 0; i <= 40; ++i) {
      const double t = -1.0 + i / 20.0;
      value_err = std::max(value_err, std::abs(prolate_eval(pf, t) - monomial_eval(mono, t)));
    }
  }
  const bool ok = gamma_err <= 1e-12 && coeff_err <= 1e-12 && value_err <= 1e-12;
  return {ok, fmt::format("max |gamma-k(k+1)| = {:.2e}, max coeff dev = {:.2e}, max |g-P_k| = {:.2e}",
                          gamma_err, coeff_err, value_err)};
}

Outcome trace_identity() {
  bool ok = true;
  std::string detail;
  for (double a : {1.0, 2.0, 4.0}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto table = spectrum_table(a, trace_k_max(a), false);
    const auto rep = trace_check(table);
    const double rel = std::abs(rep.sum_sigma + rep.tail_estimate - rep.target) / rep.target;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && rel <= 1e-6 && secs < 10.0;
    detail += fmt::format("a={}: rel err {:.2e} in {:.2f}s; ", a, rel, secs);
  }
  return {ok, detail};
}

Outcome oracle_equivalence() {
  const auto table = spectrum_table(2.0, 10, false);
  const auto nys = nystrom_sigma(2.0, 10, 200);
  double err = 0.0;
  for (int k = 0; k <= 10; ++k)
    err = std::max(err, std::abs(table.entries[k].sigma - nys[k]));
  return {err <= 1e-8, fmt::format("max |sigma_galerkin - sigma_nystrom| = {:.2e}", err)};
}

// lambda_k = (a/sqrt(2 pi)) int_{-1}^{1} e^{i a^2 t s} g_k(s) ds / g_k(t) at
// the sample point where |g_k| peaks, by direct complex quadrature.
std::complex<double> lambda_by_quadrature(const ProlateFunction& pf, double a) {
  const auto rule = gauss_legendre(200);
  double t_best = 0.0, g_best = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double t = -1.0 + i / 100.0;
    const double g = prolate_eval(pf, t);
    if (std::abs(g) > std::abs(g_best))
      t_best = t, g_best = g;
  }
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j)
    sum += rule.weights[j] * std::exp(std::complex<double>(0.0, a * a * t_best * rule.nodes[j])) *
           prolate_eval(pf, rule.nodes[j]);
  return a / std::sqrt(2.0 * std::numbers::pi) * sum / g_best;
}

std::complex<double> i_power(int k) {
  static const std::complex<double> units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units[k % 4];
}

Outcome ordering_and_phase() {
  bool ok = true;
  std::string detail;
  for (double a : {0.5, 1.0, 2.0, 4.0}) {
    const auto table = spectrum_table(a, 20, false);
    bool strict = true;
    double phase = 0.0, quad_phase = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const auto& e = table.entries[k];
      if (k > 0 && !(e.sigma < table.entries[k - 1].sigma))
        strict = false;
      phase = std::max(phase, e.phase_error);
      if (std::abs(e.lambda) > 1e-6) {
        const auto q = lambda_by_quadrature(table.functions[k], a);
        quad_phase = std::max(quad_phase, std::abs(std::arg(q / i_power(k))));
      }
    }
    ok = ok && strict && phase <= 1e-8 && quad_phase <= 1e-8;
    detail += fmt::format("a={}: strict={} phase {:.1e} (quadrature {:.1e}); ", a, strict, phase,
                          quad_phase);
  }
  return {ok, detail};
}

Outcome small_a() {
  const double a = 0.05;
  const auto table = spectrum_table(a, 3, false);
  bool ok = true;
  std::string detail = "sigma ratios";
  for (int k = 0; k <= 3; ++k) {
    const double r = table.entries[k].sigma / sigma_small_a(k, a);
    ok = ok && r >= 0.95 && r <= 1.05;
    detail += fmt::format(" {:.4f}", r);
  }
  detail += "; |lambda| ratios";
  for (int k = 0; k <= 3; ++k) {
    const double r = std::abs(table.entries[k].lambda) / std::abs(lambda_small_a(k, a));
    ok = ok && r >= 0.95 && r <= 1.05;
    detail += fmt::format(" {:.4f}", r);
  }
  return {ok, detail};
}

Outcome large_a_deficit() {
  const double a = 2.5;
  const auto table = spectrum_table(a, 0, false);
  const double deficit = 1.0 - table.entries[0].sigma;
  const double r = deficit / sigma_deficit_large_a(0, a);
  const bool ok = deficit > 1e-7 && r >= 0.8 && r <= 1.25;
  return {ok, fmt::format("1-sigma_0 = {:.6e}, ratio {:.4f}", deficit, r)};
}

Outcome plunge() {
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  for (double a : {2.0, 4.0, 6.0}) {
    const auto table = spectrum_table(a, trace_k_max(a), false);
    for (double eps : {0.05, 0.1, 0.25}) {
      const auto rep = plunge_counts(table, eps);
      const double m1 = rep.bound_above_eps - rep.n_above_eps;
      const double m2 = rep.n_above_1m_eps - rep.bound_above_1m_eps;
      const double m3 = rep.bound_middle - rep.n_middle;
      worst = std::min({worst, m1, m2, m3});
    }
  }
  ok = worst >= -1e-9;
  std::string detail = fmt::format("smallest bound margin {:.3f}; half crossings", worst);
  for (double a : {4.0, 6.0, 8.0}) {
    const auto table = spectrum_table(a, trace_k_max(a), false);
    const auto rep = plunge_counts(table, 0.1);
    ok = ok && rep.crossing_in_transition;
    detail += fmt::format(" a={}: k={} in [{:.1f}, {:.1f}]", a, rep.half_crossing, rep.transition_lo,
                          rep.transition_hi);
  }
  return {ok, detail};
}

Outcome transition_law() {
  const auto t6 = spectrum_table(6.0, 22, false);
  const int k6 = transition_index(6.0, 0.0);
  const double s6 = t6.entries[k6].sigma;
  bool ok = k6 == 22 && std::abs(s6 - 0.5) <= 0.15;
  std::string detail = fmt::format("sigma_{}(6) = {:.4f}", k6, s6);
  const auto t8 = spectrum_table(8.0, trace_k_max(8.0), false);
  double prev = 2.0;
  for (double b : {-1.0, 0.0, 1.0}) {
    const int k = transition_index(8.0, b);
    const double s = t8.entries[k].sigma;
    const double limit = transition_sigma(b);
    if (b != 0.0)
      ok = ok && std::abs(s - limit) <= 0.15;
    ok = ok && s < prev;
    prev = s;
    detail += fmt::format("; b={}: sigma_{}(8) = {:.4f} vs {:.4f}", b, k, s, limit);
  }
  return {ok, detail};
}

Outcome kappa_net() {
  const auto t8 = spectrum_table(8.0, 80, false);
  const auto sig = sigma_net_check(t8, 0.2);
  const auto cross = cross_net_check(t8, 0.35);
  bool ok = sig.is_net && cross.is_net;
  std::string detail = fmt::format("a=8 sigma gap {:.4f}, cross gap {:.4f} at ({:.3f},{:.3f}); gaps",
                                   sig.largest_gap, cross.largest_gap, cross.witness.real(),
                                   cross.witness.imag());
  double prev = std::numeric_limits<double>::infinity();
  for (double a : {2.0, 4.0, 8.0}) {
    const double gap =
        a == 8.0 ? sig.largest_gap
                 : sigma_net_check(spectrum_table(a, trace_k_max(a), false), 0.2).largest_gap;
    ok = ok && gap < prev;
    prev = gap;
    detail += fmt::format(" {:.4f}", gap);
  }
  return {ok, detail};
}

Outcome itz() {
  bool ok = true;
  std::string detail;
  for (double a : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const auto rep = trace_check(spectrum_table(a, trace_k_max(a), false));
    const double margin = rep.itz_bound - rep.itz_sum;
    ok = ok && margin >= -1e-9;
    detail += fmt::format("a={}: margin {:.4f}; ", a, margin);
  }
  return {ok, detail};
}

} // namespace

int main() {
  criterion(1, "Legendre limit", 1.0, legendre_limit);
  criterion(2, "trace identity", 30.0, trace_identity);
  criterion(3, "oracle equivalence", 30.0, oracle_equivalence);
  criterion(4, "strict ordering and phase", 0.0, ordering_and_phase);
  criterion(5, "small-a asymptotics", 0.0, small_a);
  criterion(6, "large-a deficit", 0.0, large_a_deficit);
  criterion(7, "plunge bounds", 0.0, plunge);
  criterion(8, "transition law", 0.0, transition_law);
  criterion(9, "kappa-net", 0.0, kappa_net);
  criterion(10, "ITZ inequality", 0.0, itz);
  std::cout << fmt::format("{} of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
