#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "tempered/schwartz.hpp"

// Tempered distributions as Hermite coefficient functionals u(f) = sum c_n a_n,
// either finitely supported (images of the Schwartz and L^2 embeddings) or
// given by a coefficient oracle with a declared polynomial growth bound.
// Operators extend from Schwartz functions by duality: A^T(u)(f) = u(A(f)).

namespace tempered {

class TemperedDist {
 public:
  TemperedDist();  // the zero functional

  static TemperedDist finite(std::vector<Complex> coeffs);
  // Oracle coefficients must satisfy |c_n| <= growth_c * (1+n)^growth_p; the
  // bound is checked lazily on access for n <= 4096.
  static TemperedDist oracle(std::function<Complex(std::size_t)> coeff_at,
                             double growth_c, double growth_p, std::string label);

  bool is_finite() const { return static_cast<bool>(coeffs_); }
  // Finite representations only; throws std::logic_error for oracles.
  const std::vector<Complex>& finite_coeffs() const;

  Complex coeff(std::size_t n) const;

  double growth_c() const { return growth_c_; }
  double growth_p() const { return growth_p_; }
  const std::string& label() const { return label_; }

 private:
  struct Raw {};
  explicit TemperedDist(Raw) {}

  std::shared_ptr<const std::vector<Complex>> coeffs_;
  std::function<Complex(std::size_t)> coeff_at_;
  double growth_c_ = 0.0;
  double growth_p_ = 0.0;
  std::string label_;
};

// u(f) = sum_{n <= degree(f)} c_n a_n; exact finite sum.
Complex apply(const TemperedDist& u, const SchwartzFn& f);

// Embeddings via the bilinear pairing (no conjugation): g -> (f -> <g, f>).
TemperedDist embed_schwartz(const SchwartzFn& g);
TemperedDist embed_l2(const std::vector<Complex>& v);

// delta(f) = f(0); coefficients h_n(0).
TemperedDist delta();
// The constant function 1 as a distribution: f -> integral f; coefficients
// (-i)^n h_n(0) (real: zero for odd n, alternating signs for even n).
TemperedDist constant_one();

// Transpose of a banded operator on Schwartz functions: u -> u o A.
class DistOperator {
 public:
  DistOperator(std::string label, SchwartzOp op);
  TemperedDist operator()(const TemperedDist& u) const;
  const std::string& label() const { return label_; }

 private:
  std::string label_;
  SchwartzOp op_;
};

// Requires A additive and homogeneous (spot-checked) with finite declared
// bandwidth; throws std::invalid_argument otherwise.
DistOperator adjoint_map(const SchwartzOp& a);

// The three duality extensions used throughout; exact coefficient maps with
// explicit growth-bound updates on oracles.
TemperedDist fourier_dist(const TemperedDist& u);           // (F u)(f) = u(F f)
TemperedDist derivative_dist(const TemperedDist& u);        // u'(f) = -u(f')
TemperedDist mul_poly_dist(const TemperedDist& u, const Poly& p);  // (p u)(f) = u(p f)

// Finite distributions serialize as the SchwartzFn schema plus
// "kind":"distribution"; oracles are referenced by label ("delta",
// "const_one").
nlohmann::json to_json(const TemperedDist& u);
TemperedDist dist_from_json(const nlohmann::json& j);
TemperedDist dist_from_label(const std::string& label);

}  // namespace tempered
