#include "prolate/errors.hpp"
#include "prolate/fourier_spectrum.hpp"
#include "prolate/legendre.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace prolate;

namespace {

// Reference concentration values from an independent double-precision
// Nystrom discretization of the sinc kernel.
const double kSigmaA2[] = {0.9958854904296693,     0.9121074240650262,    0.5190548374543096,
                           0.11021098701480109,    0.008827876397692277,  0.00038129172172420933,
                           1.0950871269623348e-05, 2.278638895443779e-07, 3.606549342842711e-09,
                           4.493829724606155e-11,  4.5252073456569173e-13};
const double kSigmaA1[] = {0.5725817806378957,    0.06279127414980266,   0.0012374793284659704,
                           9.200977049567966e-06, 3.7179285579783034e-08, 9.491436508679652e-11};

// (a / sqrt(2 pi)) int_{-1}^{1} e^{i a^2 t s} g(s) ds, by quadrature.
std::complex<double> fourier_of(const ProlateFunction& pf, double a, double t) {
  const auto q = gauss_legendre(160);
  std::complex<double> s = 0.0;
  for (std::size_t j = 0; j < q.nodes.size(); ++j)
    s += q.weights[j] * std::exp(std::complex<double>(0.0, a * a * t * q.nodes[j])) *
         prolate_eval(pf, q.nodes[j]);
  return a / std::sqrt(2.0 * std::numbers::pi) * s;
}

std::complex<double> i_power(int k) {
  static const std::complex<double> u[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return u[k % 4];
}

} // namespace

TEST_CASE("sigma against reference values") {
  const auto t2 = spectrum_table(2.0, 10, false);
  for (int k = 0; k <= 10; ++k)
    CHECK(std::abs(t2.entries[k].sigma - kSigmaA2[k]) <= 1e-12 * kSigmaA2[k] + 1e-15);
  const auto t1 = spectrum_table(1.0, 5, false);
  for (int k = 0; k <= 5; ++k)
    CHECK(std::abs(t1.entries[k].sigma - kSigmaA1[k]) <= 1e-12 * kSigmaA1[k] + 1e-15);
}

TEST_CASE("Galerkin sigma agrees with the Nystrom oracle") {
  for (double a : {0.5, 1.0, 2.0, 3.0}) {
    const auto t = spectrum_table(a, 12, true);
    REQUIRE(t.oracle_agreement.has_value());
    CHECK(*t.oracle_agreement < 1e-10);
    for (const auto& e : t.entries)
      REQUIRE(e.sigma_oracle.has_value());
  }
  const auto direct = nystrom_sigma(2.0, 8, 200);
  const auto unscaled = nystrom_sigma_on_interval(2.0, 8, 200);
  for (int k = 0; k <= 8; ++k)
    CHECK(direct[k] == doctest::Approx(unscaled[k]).epsilon(1e-10).scale(1e-3));
  CHECK_THROWS_AS(nystrom_sigma(2.0, 10, 20), PreconditionError);
}

TEST_CASE("eigenvalues from the moment formula, the chain and direct quadrature") {
  for (double a : {0.5, 1.0, 2.0, 4.0}) {
    const auto t = spectrum_table(a, 14, false);
    for (const auto& pf : t.functions) {
      CAPTURE(a);
      CAPTURE(pf.k);
      const auto& e = t.entries[pf.k];
      // Direct quadrature at a point where g is large.
      const double t0 = pf.k % 2 ? 0.5 : 0.0;
      const double g0 = prolate_eval(pf, t0);
      if (std::abs(e.lambda) > 1e-8 && std::abs(g0) > 1e-3) {
        const auto q = fourier_of(pf, a, t0) / g0;
        CHECK(std::abs(q - e.lambda) < 1e-9 * std::abs(e.lambda) + 1e-14);
      }
      if (std::abs(e.lambda) > 1e-6) {
        const auto m = lambda_k(pf, a);
        CHECK(std::abs(m - e.lambda) < 1e-8 * std::abs(e.lambda));
        CHECK(sigma_k(pf, a) == doctest::Approx(e.sigma).epsilon(1e-8));
      }
      CHECK(e.lambda == i_power(pf.k) * std::abs(e.lambda));
      CHECK(e.phase_error <= 1e-8);
      CHECK(e.mu == doctest::Approx(e.gamma / (a * a)));
    }
    CHECK(t.moment_agreement < 1e-8);
  }
}

TEST_CASE("strict ordering and range") {
  for (double a : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const auto t = spectrum_table(a, 20, false);
    for (std::size_t k = 0; k < t.entries.size(); ++k) {
      const double s = t.entries[k].sigma;
      CHECK(s > 0.0);
      CHECK(s < 1.0);
      if (k == 0)
        continue;
      // Deficits below half an ulp of 1 are not representable; those sigmas
      // tie at the largest double below 1.
      if (1.0 - t.entries[k - 1].sigma > 1e-15)
        CHECK(s < t.entries[k - 1].sigma);
      else
        CHECK(s <= t.entries[k - 1].sigma);
    }
  }
}

TEST_CASE("small bandwidth leading eigenvalue") {
  // Leading order: F e_0 ~ (2a / sqrt(2 pi)) e_0, trace 2a^2/pi.
  const double a = 0.05;
  const auto t = spectrum_table(a, 3, false);
  CHECK(t.entries[0].lambda.real() ==
        doctest::Approx(2 * a / std::sqrt(2 * std::numbers::pi)).epsilon(1e-3));
  CHECK(t.entries[0].sigma == doctest::Approx(2 * a * a / std::numbers::pi).epsilon(1e-3));
}

TEST_CASE("e_k is an eigenfunction of the sinc operator") {
  for (double a : {1.0, 2.0, 3.0}) {
    const auto t = spectrum_table(a, 6, false);
    for (const auto& pf : t.functions) {
      double scale = 0.0;
      for (int i = 0; i <= 20; ++i)
        scale = std::max(scale, std::abs(prolate_eval(pf, -1.0 + i / 10.0)));
      for (double x : {-0.9 * a, -0.2 * a, 0.0, 0.45 * a, a}) {
        const double lhs = apply_sinc_kernel(pf, x, 200);
        const double rhs = t.entries[pf.k].sigma * eigenfunction_on_big_interval(pf, x);
        CHECK(std::abs(lhs - rhs) < 1e-7 * scale);
      }
    }
  }
}

TEST_CASE("Nystrom trace") {
  for (double a : {0.5, 1.0, 2.0, 4.0})
    CHECK(nystrom_trace(a, 120) == doctest::Approx(2 * a * a / std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(spectrum_table(0.0, 3, false), DomainError);
  CHECK_THROWS_AS(spectrum_table(-1.0, 3, false), DomainError);
  CHECK_THROWS_AS(spectrum_table(1.0, -1, false), DomainError);
  CHECK(default_oracle_size(2.0, 10) >= 44);
}
