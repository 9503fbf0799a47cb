#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

// Hermite functions adapted to the 2pi Fourier convention, and Gauss-Hermite
// quadrature rescaled to the weight exp(-2*pi*x^2).
//
// The basis is h_n(x) = (2pi)^{1/4} * psi_n(sqrt(2pi)*x), where psi_n is the
// standard L^2(dt)-orthonormal Hermite function psi_n(t) =
// (2^n n! sqrt(pi))^{-1/2} H_n(t) exp(-t^2/2).  With this scaling the h_n are
// orthonormal in L^2(R, dx) and are eigenfunctions of
//   (F u)(xi) = integral exp(-2*pi*i*x*xi) u(x) dx
// with eigenvalues (-i)^n, so the Fourier transform acts diagonally on
// coefficient vectors.

namespace tempered {

using Complex = std::complex<double>;

// Gauss-Hermite rule rescaled to the weight exp(-2*pi*x^2).
//
// Two weight vectors are kept.  `weights` are the plain Gauss weights:
//   sum_i weights[i] * g(x_i)  ~=  integral g(x) exp(-2*pi*x^2) dx,
// exact for polynomial g of degree <= 2*order-1.  `total_weights` fold the
// factor exp(+2*pi*x_i^2) into the weight:
//   sum_i total_weights[i] * F(x_i)  ~=  integral F(x) dx
// for rapidly decaying F.  All internal projections use `total_weights` with
// integrands kept in their decaying form, which stays bounded at every node;
// the plain weights underflow only for orders around 370 and beyond, far past
// anything this library constructs.
struct QuadratureRule {
  std::vector<double> nodes;           // strictly increasing, units of x
  std::vector<double> weights;         // plain weights, sum = 1/sqrt(2)
  std::vector<double> total_weights;   // exp(2*pi*x^2)-folded weights
  std::size_t order = 0;

  // integral of a rapidly decaying function (decaying form supplied).
  double integrate(const std::function<double(double)>& decaying) const;
  Complex integrate(const std::function<Complex(double)>& decaying) const;
};

// h_n(x).  Total on its domain: the recurrence is carried on the weighted
// form with block rescaling, so there is no overflow for any n, x of
// practical size (n <= 2048, |x| <= 50 in particular); values below the
// double range come out as 0.
double eval_hermite(std::size_t n, double x);

// h_0(x) .. h_nmax(x) in one recurrence pass.
std::vector<double> eval_hermite_all(std::size_t nmax, double x);
void eval_hermite_all(std::size_t nmax, double x, std::vector<double>& out);

// sum_n coeffs[n] * h_n(x)
Complex hermite_series(const std::vector<Complex>& coeffs, double x);

// Gauss-Hermite rule of the given order for weight exp(-2*pi*x^2).
// Throws std::invalid_argument for order = 0.
QuadratureRule gauss_rule(std::size_t order);

// Production default: exact for bilinear forms of the given degree plus a
// safety margin for non-polynomial symbols.
inline std::size_t default_rule_order(std::size_t max_degree) {
  return 2 * max_degree + 32;
}

// Coefficients a_n = integral target(x) * h_n(x) dx for n = 0..degree.
// `target` is the function itself, evaluated in its decaying form; the rule's
// weight split is handled internally via total_weights.  Exact (up to
// rounding) whenever target = polynomial * exp(-pi*x^2) with polynomial
// degree + degree <= 2*order - 1.  Throws if rule.order < degree + 1.
std::vector<Complex> project(const std::function<Complex(double)>& target,
                             std::size_t degree, const QuadratureRule& rule);

}  // namespace tempered
