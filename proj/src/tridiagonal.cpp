#include "prolate/tridiagonal.hpp"

#include "prolate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace prolate {

namespace {

void check_shape(std::span<const double> diag, std::span<const double> offdiag) {
  if (diag.empty() || offdiag.size() + 1 != diag.size())
    throw DomainError(fmt::format("tridiagonal shape mismatch: {} diagonal, {} off-diagonal",
                                  diag.size(), offdiag.size()));
}

double matrix_scale(std::span<const double> diag, std::span<const double> offdiag) {
  double s = 0.0;
  for (double d : diag)
    s = std::max(s, std::abs(d));
  for (double e : offdiag)
    s = std::max(s, 2.0 * std::abs(e));
  return s;
}

} // namespace

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> offdiag) {
  check_shape(diag, offdiag);
  const std::size_t n = diag.size();
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd)
          break;
      }
      if (m != l) {
        if (++iter > 60)
          throw ConvergenceError("tridiagonal QL did not converge", std::abs(e[l]));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool deflated = false;
        for (std::size_t i = m; i-- > l;) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (deflated)
          continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> tridiagonal_eigenvector(std::span<const double> diag,
                                            std::span<const double> offdiag,
                                            double lambda) {
  check_shape(diag, offdiag);
  const std::size_t n = diag.size();
  if (n == 1)
    return {1.0};

  // LU of (T - lambda I) with partial pivoting; U gets a second superdiagonal.
  std::vector<double> dl(offdiag.begin(), offdiag.end());
  std::vector<double> du(offdiag.begin(), offdiag.end());
  std::vector<double> du2(n, 0.0);
  std::vector<double> d(n);
  std::vector<bool> swapped(n, false);
  for (std::size_t i = 0; i < n; ++i)
    d[i] = diag[i] - lambda;
  const double tiny =
      std::numeric_limits<double>::epsilon() * std::max(matrix_scale(diag, offdiag), 1.0);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0)
        d[i] = tiny;
      const double fact = dl[i] / d[i];
      dl[i] = fact;
      d[i + 1] -= fact * du[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = true;
    }
  }
  for (auto& di : d)
    if (std::abs(di) < tiny)
      di = std::copysign(tiny, di == 0.0 ? 1.0 : di);

  auto solve = [&](std::vector<double>& b) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;)
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  };
  auto normalize = [](std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
      s += x * x;
    s = std::sqrt(s);
    for (double& x : v)
      x /= s;
  };

  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = 1.0 + 0.25 * std::sin(1.0 + static_cast<double>(i));
  for (int iter = 0; iter < 3; ++iter) {
    solve(v);
    normalize(v);
  }
  return v;
}

double tridiagonal_rayleigh(std::span<const double> diag, std::span<const double> offdiag,
                            std::span<const double> v) {
  check_shape(diag, offdiag);
  const std::size_t n = diag.size();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += diag[i] * v[i] * v[i];
    if (i + 1 < n)
      num += 2.0 * offdiag[i] * v[i] * v[i + 1];
    den += v[i] * v[i];
  }
  return num / den;
}

double tridiagonal_residual(std::span<const double> diag, std::span<const double> offdiag,
                            std::span<const double> v, double lambda) {
  check_shape(diag, offdiag);
  const std::size_t n = diag.size();
  double worst = 0.0;
  double vmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (diag[i] - lambda) * v[i];
    if (i > 0)
      r += offdiag[i - 1] * v[i - 1];
    if (i + 1 < n)
      r += offdiag[i] * v[i + 1];
    worst = std::max(worst, std::abs(r));
    vmax = std::max(vmax, std::abs(v[i]));
  }
  return worst / vmax;
}

} // namespace prolate
