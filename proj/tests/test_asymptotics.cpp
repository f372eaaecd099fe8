#include "prolate/asymptotics.hpp"
#include "prolate/errors.hpp"
#include "prolate/fourier_spectrum.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace prolate;
using cd = std::complex<double>;

namespace {

// Stirling series after shifting Re z past 20, then the recurrence back down
// with principal logarithms (continuous branch for Re z > 0).
cd stirling_log_gamma(cd z) {
  cd shift = 0.0;
  while (z.real() < 20.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const cd inv = 1.0 / z, inv2 = inv * inv;
  const cd series = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

bool close(cd x, cd y, double tol) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(y)); }

} // namespace

TEST_CASE("log Gamma against reference values and the Stirling oracle") {
  CHECK(close(log_gamma_complex({0.5, 5.0}), {-6.93504310076982171, 3.05554259401552312}, 1e-13));
  CHECK(close(log_gamma_complex({2.3, -1.7}), {-0.548135917218600354, -1.21494628123839898}, 1e-13));
  CHECK(close(log_gamma_complex({0.1, 0.2}), {1.41962255660880148, -1.18945845619165351}, 1e-13));
  CHECK(close(log_gamma_complex({0.5, 25.0}), {-38.3509696366677427, 55.4735624440060681}, 1e-13));
  for (double re : {0.05, 0.5, 1.0, 3.7, 12.0, 40.0})
    for (double im : {-30.0, -2.5, 0.0, 0.3, 7.0, 60.0}) {
      const cd z{re, im};
      CAPTURE(z);
      CHECK(close(log_gamma_complex(z), stirling_log_gamma(z), 1e-12));
    }
}

TEST_CASE("log Gamma identities") {
  CHECK(std::abs(log_gamma_complex(1.0)) < 1e-14);
  CHECK(std::abs(log_gamma_complex(2.0)) < 1e-14);
  CHECK(log_gamma_complex(0.5).real() ==
        doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  for (double x : {0.3, 1.7, 6.2}) {
    CHECK(log_gamma_complex(x).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    CHECK(log_gamma_complex(x).imag() == 0.0);
  }
  for (cd z : {cd{0.5, 3.0}, cd{2.0, -8.0}, cd{0.2, 0.9}}) {
    CHECK(close(log_gamma_complex(std::conj(z)), std::conj(log_gamma_complex(z)), 1e-14));
    CHECK(close(log_gamma_complex(z + 1.0), log_gamma_complex(z) + std::log(z), 1e-13));
  }
  // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y).
  for (double y : {0.0, 0.7, 3.0, 10.0})
    CHECK(2.0 * log_gamma_complex({0.5, y}).real() ==
          doctest::Approx(std::log(std::numbers::pi) - std::log(std::cosh(std::numbers::pi * y)))
              .epsilon(1e-12));
}

TEST_CASE("closed-form laws") {
  const double pi = std::numbers::pi;
  CHECK(sigma_small_a(0, 0.1) == doctest::Approx(pi * 0.01 / 2));
  CHECK(sigma_small_a(2, 0.3) == doctest::Approx(2 * pi * std::pow(0.09 / 4, 5) / 4));
  const auto l1 = lambda_small_a(1, 0.2);
  CHECK(l1.real() == doctest::Approx(0.0));
  CHECK(l1.imag() == doctest::Approx(std::sqrt(2 * pi) * std::pow(0.1, 3)));
  CHECK(lambda_small_a(2, 0.2).real() < 0.0);
  CHECK(sigma_deficit_large_a(0, 2.5) ==
        doctest::Approx(4 * std::sqrt(pi) * 2.5 * std::exp(-12.5)).epsilon(1e-13));
  CHECK(lambda_deficit_large_a(1, 3.0) ==
        doctest::Approx(2 * std::sqrt(pi) * 8 * 27 * std::exp(-18.0)).epsilon(1e-13));
  // Log-space evaluation survives where the factors overflow separately.
  CHECK(std::isfinite(sigma_deficit_large_a(150, 30.0)));
  CHECK(sigma_small_a(200, 0.01) >= 0.0);

  CHECK(transition_index(6.0, 0.0) == 22);
  CHECK(transition_index(8.0, -1.0) == 38);
  CHECK(transition_index(8.0, 1.0) == 42);
  CHECK_THROWS_AS(transition_index(0.6, -5.0), DomainError);
  CHECK(transition_sigma(0.0) == 0.5);
  CHECK(transition_sigma(1.0) == doctest::Approx(1.0 / (1.0 + std::exp(pi))));
  CHECK(transition_sigma(1000.0) == 0.0);
  CHECK(transition_sigma(-1000.0) == 1.0);
}

TEST_CASE("transition equation root") {
  for (auto [a, k] : {std::pair{6.0, 22}, std::pair{8.0, 40}, std::pair{3.0, 6}}) {
    const double d = slepian_delta(a, k);
    CHECK(std::abs(slepian_residual(a, k, d)) < 1e-8);
    // Residual is monotone in delta near the root: a sign change brackets it.
    CHECK(slepian_residual(a, k, d - 1e-3) * slepian_residual(a, k, d + 1e-3) < 0.0);
  }
  CHECK(slepian_delta(6.0, 22) == doctest::Approx(9.9310723488).epsilon(1e-8));
  CHECK_THROWS_AS(slepian_delta(0.5, 1), DomainError);
  CHECK_THROWS_AS(slepian_delta(1.0, 1000), NoRootError);

  const auto tp = transition_point(6.0, 0.0, true);
  CHECK(tp.k == 22);
  CHECK(tp.sigma_limit == 0.5);
  REQUIRE(tp.delta.has_value());
}

// The verbatim transition equation puts the root near delta = 9.9, which
// predicts sigma ~ 3e-14 where the computed value is about 0.6.
TEST_CASE("transition equation predicts sigma at the transition index" *
          doctest::may_fail()) {
  for (double a : {6.0, 8.0}) {
    const int k = transition_index(a, 0.0);
    const double predicted = transition_sigma(slepian_delta(a, k));
    const double computed = spectrum_table(a, k, false).entries[k].sigma;
    CAPTURE(a);
    CAPTURE(predicted);
    CAPTURE(computed);
    CHECK(std::abs(predicted - computed) <= 0.15);
  }
}

TEST_CASE("regime names and reports") {
  for (auto r : {Regime::small_a_sigma, Regime::small_a_lambda, Regime::large_a_deficit,
                 Regime::transition})
    CHECK(regime_from_string(to_string(r)) == r);
  CHECK_THROWS(regime_from_string("nonsense"));

  const auto s = small_a_report(Regime::small_a_sigma, 0.05, 3);
  REQUIRE(s.rows.size() == 4);
  for (const auto& row : s.rows)
    CHECK(row.ratio == doctest::Approx(row.computed / row.formula));
  // Higher modes approach the law; the leading ratio is the trace-limited 4/pi^2.
  CHECK(s.rows[0].ratio == doctest::Approx(4.0 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-3));
  CHECK(s.rows[3].ratio > s.rows[0].ratio);

  const auto d = large_a_deficit_report(2.5, 0);
  REQUIRE(d.rows.size() == 1);
  CHECK(d.rows[0].ratio > 0.8);
  CHECK(d.rows[0].ratio < 1.25);

  const std::vector<double> bs{-1.0, 0.0, 1.0};
  const auto t = transition_report(8.0, bs);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].computed > t.rows[1].computed);
  CHECK(t.rows[1].computed > t.rows[2].computed);
}
