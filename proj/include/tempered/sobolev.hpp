#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tempered/distribution.hpp"
#include "tempered/schwartz.hpp"

// L^2 identified with little-l2 through the Hermite basis, the exact Fourier
// isometry with its density/BLT extension bookkeeping, Fourier multipliers
// F^{-1} m(xi) F with explicit aliasing reporting, and H^s norms.

namespace tempered {

// Finite truncation of an l^2 sequence; `declared_tail` bounds the l^2 norm
// of whatever was cut off, so the true norm lies in
// [norm_lower(), norm_upper()].
struct L2Elem {
  std::vector<Complex> coeffs;
  double declared_tail = 0.0;

  double norm_lower() const;
  double norm_upper() const;
};

L2Elem to_l2(const SchwartzFn& f);

// Exact isometry: coefficients rotate by (-i)^n, the tail bound is unchanged.
L2Elem fourier_l2(const L2Elem& v);

// BLT extension bookkeeping: applies a bounded operator (validated against
// its stated bound on 100 seeded random inputs) to the finite part and
// propagates the tail bound multiplicatively.  Throws if the bound fails the
// validation, or if bound*declared_tail exceeds `tol` (the requested accuracy
// is then unachievable at this truncation).
L2Elem extend_by_density(const SchwartzOp& op, double bound, const L2Elem& v, double tol);

// Frequency symbol m(xi) dominated by (1+|xi|)^growth_degree.
struct Multiplier {
  std::function<Complex(double)> symbol;
  unsigned growth_degree = 0;
  std::string label;

  // Empirical domination constant sup |m(xi)|/(1+|xi|)^growth_degree over a
  // log-spaced grid up to |xi| = 1e3; throws if not finite.
  double validate_growth() const;
};

struct MultiplierResult {
  SchwartzFn value;
  // || P_{proj_degree} - P_{proj_degree+16} || of the frequency-side
  // projection; the error proxy for non-polynomial symbols.
  double aliasing_residual = 0.0;
};

// F^{-1} of the degree-proj_degree quadrature projection of m * (F f), with
// rule order 2*proj_degree + 32.  Exact for polynomial symbols.  Requires
// proj_degree >= degree(f) + growth_degree.
MultiplierResult apply_multiplier(const Multiplier& m, const SchwartzFn& f,
                                  std::size_t proj_degree);

std::size_t default_proj_degree(const SchwartzFn& f, const Multiplier& m);

// Lambda_s = F^{-1} <xi>^s F with <xi> = (1+xi^2)^{1/2}.
MultiplierResult lambda_s(double s, const SchwartzFn& f, std::size_t proj_degree);

// H^s norm ||Lambda_s f||_{L^2} at the default projection degree.
double sobolev_norm(const SchwartzFn& f, double s);

// Truncated H^s norm estimate for a coefficient functional: the norm of
// Lambda_s applied to the degree-trunc_degree truncation.  An estimate, not
// a bound; distributions outside H^s diverge as trunc_degree grows.
double sobolev_norm_truncated(const TemperedDist& u, double s, std::size_t trunc_degree);

// Classical H^k norm sqrt(sum_{j<=k} ||f^(j)||^2) via exact ladder derivatives.
double h_k_classical_norm(const SchwartzFn& f, unsigned k);

Multiplier one_symbol();                  // m == 1
Multiplier laplacian_symbol();            // |2 pi xi|^2, the positive Laplacian
Multiplier japanese_bracket(double s);    // <xi>^s
// "one" | "laplacian_2pi" | "japanese_bracket:<s>"
Multiplier multiplier_from_label(const std::string& label);

// SchwartzFn schema plus "tail".
nlohmann::json to_json(const L2Elem& v);
L2Elem l2_from_json(const nlohmann::json& j);

}  // namespace tempered
