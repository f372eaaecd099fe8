#ifndef PROLATE_LEGENDRE_HPP
#define PROLATE_LEGENDRE_HPP

#include <span>
#include <vector>

namespace prolate {

enum class Parity { even, odd, none };

const char* to_string(Parity p);

/// Coefficients of a series in unnormalized Legendre polynomials
/// (P_n(1) = 1). The constructor enforces the parity pattern and finiteness.
class LegendreSeries {
public:
  LegendreSeries() = default;
  LegendreSeries(std::vector<double> coeffs, Parity parity);

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  Parity parity() const noexcept { return parity_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  double operator[](std::size_t n) const { return coeffs_.at(n); }

private:
  std::vector<double> coeffs_;
  Parity parity_ = Parity::none;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// P_n(t) by the three-term recurrence. Throws DomainError for |t| > 1.
double legendre_eval(int n, double t);

/// P_k(0) for even k. Throws ParityError for odd k.
double legendre_at_zero(int k);

/// P_k'(0) for odd k. Throws ParityError for even k.
double legendre_deriv_at_zero(int k);

/// m-point Gauss-Legendre rule on [-1,1], exact for degree <= 2m-1.
QuadratureRule gauss_legendre(int m);

/// Clenshaw summation of sum c_n P_n(t). Throws DomainError for |t| > 1.
double series_eval(const LegendreSeries& s, double t);

/// d/dt of the series at t = 0, assembled term by term from P_n'(0).
double series_deriv_at_zero(const LegendreSeries& s);

/// Integral over [-1,1] of the product of two series.
double series_inner(const LegendreSeries& f, const LegendreSeries& g);

/// Integral over [-1,1] of t f(t) g(t).
double series_inner_t(const LegendreSeries& f, const LegendreSeries& g);

/// Integral over [-1,1] of f(t) g'(t).
double series_inner_deriv(const LegendreSeries& f, const LegendreSeries& g);

} // namespace prolate

#endif
