#pragma once

#include <functional>

#include "tempered/schwartz.hpp"

// Independent numerical oracles for the test and acceptance suites.  None of
// these touch the Gauss quadrature or coefficient machinery they are used to
// check: integrals go through a plain trapezoid sum (spectrally accurate for
// analytic, rapidly decaying integrands), derivatives through central
// differences, and seminorm references through dense grid scans.

namespace tempered::testing {

// integral over [-half_width, half_width] with the given step.
Complex trapz(const std::function<Complex(double)>& f, double half_width = 10.0,
              double step = 1.0 / 32.0);
double trapz_real(const std::function<double(double)>& f, double half_width = 10.0,
                  double step = 1.0 / 32.0);

// integral exp(-2*pi*i*x*xi) f(x) dx by trapezoid.
Complex fourier_integral(const std::function<Complex(double)>& f, double xi,
                         double half_width = 10.0, double step = 1.0 / 32.0);

// 5-point central difference, error O(h^4 f^(5)).
Complex deriv5(const std::function<Complex(double)>& f, double x, double h = 1e-3);

// max over a dense grid of |x|^k |f^(n)(x)| on the estimator's own window.
double brute_force_seminorm(const SchwartzFn& f, SeminormIndex idx, std::size_t points);

}  // namespace tempered::testing
