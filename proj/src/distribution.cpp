#include "tempered/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "tempered/random.hpp"

namespace tempered {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const double kRootTwoPi = std::sqrt(2.0 * kPi);
constexpr std::size_t kGrowthCheckLimit = 4096;

const std::vector<double>& hermite_at_zero() {
  static const std::vector<double> table = eval_hermite_all(kGrowthCheckLimit, 0.0);
  return table;
}

double h_at_zero(std::size_t n) {
  const auto& table = hermite_at_zero();
  return n < table.size() ? table[n] : eval_hermite(n, 0.0);
}

}  // namespace

TemperedDist::TemperedDist() { *this = finite({}); }

TemperedDist TemperedDist::finite(std::vector<Complex> coeffs) {
  TemperedDist u{Raw{}};
  double c = 0.0;
  for (const Complex& v : coeffs) c = std::fmax(c, std::abs(v));
  u.coeffs_ = std::make_shared<const std::vector<Complex>>(std::move(coeffs));
  u.growth_c_ = c;
  u.growth_p_ = 0.0;
  u.label_ = "finite";
  return u;
}

TemperedDist TemperedDist::oracle(std::function<Complex(std::size_t)> coeff_at,
                                  double growth_c, double growth_p, std::string label) {
  if (growth_c < 0.0 || growth_p < 0.0)
    throw std::invalid_argument("TemperedDist::oracle: growth bound must be nonnegative");
  TemperedDist u{Raw{}};
  u.coeff_at_ = std::move(coeff_at);
  u.growth_c_ = growth_c;
  u.growth_p_ = growth_p;
  u.label_ = std::move(label);
  return u;
}

const std::vector<Complex>& TemperedDist::finite_coeffs() const {
  if (!coeffs_)
    throw std::logic_error("TemperedDist: oracle distribution has no finite coefficients");
  return *coeffs_;
}

Complex TemperedDist::coeff(std::size_t n) const {
  if (coeffs_) return n < coeffs_->size() ? (*coeffs_)[n] : Complex(0.0, 0.0);
  const Complex c = coeff_at_(n);
  if (n <= kGrowthCheckLimit) {
    const double bound =
        growth_c_ * std::pow(1.0 + static_cast<double>(n), growth_p_);
    if (std::abs(c) > bound * (1.0 + 1e-9))
      throw std::logic_error("TemperedDist: oracle '" + label_ +
                             "' violates its declared growth bound at n=" + std::to_string(n));
  }
  return c;
}

Complex apply(const TemperedDist& u, const SchwartzFn& f) {
  Complex sum(0.0, 0.0);
  const auto& a = f.coeffs();
  for (std::size_t n = 0; n < a.size(); ++n) sum += u.coeff(n) * a[n];
  return sum;
}

TemperedDist embed_schwartz(const SchwartzFn& g) { return TemperedDist::finite(g.coeffs()); }

TemperedDist embed_l2(const std::vector<Complex>& v) { return TemperedDist::finite(v); }

TemperedDist delta() {
  return TemperedDist::oracle(
      [](std::size_t n) { return Complex(h_at_zero(n), 0.0); },
      std::pow(2.0, 0.25), 0.0, "delta");
}

TemperedDist constant_one() {
  return TemperedDist::oracle(
      [](std::size_t n) {
        const double h0 = h_at_zero(n);  // zero for odd n
        return Complex(n % 4 == 0 ? h0 : (n % 4 == 2 ? -h0 : 0.0), 0.0);
      },
      std::pow(2.0, 0.25), 0.0, "const_one");
}

namespace {

// Column n of A's coefficient matrix, via A h_n.
std::vector<Complex> op_column(const SchwartzOp& a, std::size_t n) {
  return a.apply(basis(n)).coeffs();
}

Complex column_entry(const std::vector<Complex>& col, std::size_t m) {
  return m < col.size() ? col[m] : Complex(0.0, 0.0);
}

}  // namespace

DistOperator::DistOperator(std::string label, SchwartzOp op)
    : label_(std::move(label)), op_(std::move(op)) {}

TemperedDist DistOperator::operator()(const TemperedDist& u) const {
  const std::size_t bw = op_.bandwidth;
  if (u.is_finite()) {
    const std::vector<Complex>& c = u.finite_coeffs();
    if (c.empty()) return TemperedDist::finite({});
    const std::size_t out_len = c.size() + bw;
    std::vector<Complex> out(out_len, Complex(0.0, 0.0));
    for (std::size_t n = 0; n < out_len; ++n) {
      const std::vector<Complex> col = op_column(op_, n);
      Complex sum(0.0, 0.0);
      const std::size_t m_lo = n > bw ? n - bw : 0;
      const std::size_t m_hi = std::min(c.size() - 1, n + bw);
      for (std::size_t m = m_lo; m <= m_hi; ++m)
        sum += column_entry(col, m) * c[m];
      out[n] = sum;
    }
    return TemperedDist::finite(std::move(out));
  }

  // Oracle: lazy band transpose.  The growth bound is calibrated empirically
  // at log-spaced indices within the lazily checked range.
  const SchwartzOp op = op_;
  const TemperedDist parent = u;
  auto coeff_at = [op, parent, bw](std::size_t n) {
    const std::vector<Complex> col = op_column(op, n);
    Complex sum(0.0, 0.0);
    const std::size_t m_lo = n > bw ? n - bw : 0;
    const std::size_t m_hi = n + bw;
    for (std::size_t m = m_lo; m <= m_hi; ++m)
      sum += column_entry(col, m) * parent.coeff(m);
    return sum;
  };

  const double growth_p = u.growth_p() + static_cast<double>(std::max<std::size_t>(bw, 1));
  double growth_c = 1e-12;
  for (std::size_t n = 0; n <= kGrowthCheckLimit; n = n == 0 ? 1 : 2 * n) {
    const double mag = std::abs(coeff_at(n));
    const double denom = std::pow(1.0 + static_cast<double>(n), growth_p);
    growth_c = std::fmax(growth_c, mag / denom);
  }
  return TemperedDist::oracle(coeff_at, 1.5 * growth_c, growth_p,
                              label_ + "(" + u.label() + ")");
}

DistOperator adjoint_map(const SchwartzOp& a) {
  if (a.bandwidth > 1024)
    throw std::invalid_argument("adjoint_map: band too wide for oracle transposition");
  Rng rng(0x61646a6fULL);
  for (int i = 0; i < 10; ++i) {
    const SchwartzFn f = sample_schwartz(rng, 12);
    const SchwartzFn g = sample_schwartz(rng, 12);
    const Complex c = rng.complex_normal();
    const SchwartzFn af = a.apply(f);
    const SchwartzFn ag = a.apply(g);
    const double ref = 1.0 + l2_norm(af) + l2_norm(ag);
    if (l2_norm(add(a.apply(add(f, g)), scale(-1.0, add(af, ag)))) > 1e-9 * ref ||
        l2_norm(add(a.apply(scale(c, f)), scale(-1.0, scale(c, af)))) >
            1e-9 * (1.0 + std::abs(c)) * ref)
      throw std::invalid_argument("adjoint_map: operator failed linearity spot-check");
  }
  return DistOperator("adjoint(" + a.label + ")", a);
}

TemperedDist fourier_dist(const TemperedDist& u) {
  if (u.is_finite()) {
    std::vector<Complex> out = u.finite_coeffs();
    for (std::size_t n = 0; n < out.size(); ++n)
      out[n] = rotate_neg_i(n, out[n]);
    return TemperedDist::finite(std::move(out));
  }
  const TemperedDist parent = u;
  return TemperedDist::oracle(
      [parent](std::size_t n) { return rotate_neg_i(n, parent.coeff(n)); },
      u.growth_c(), u.growth_p(), "F(" + u.label() + ")");
}

namespace {

// Minus the transpose of the derivative band; the band is antisymmetric, so
// in coefficients the dual derivative acts like the derivative itself:
// c'_n = sqrt(2pi) (sqrt((n+1)/2) c_{n+1} - sqrt(n/2) c_{n-1}).
Complex derivative_band(const std::function<Complex(std::size_t)>& c, std::size_t n) {
  Complex v = std::sqrt((static_cast<double>(n) + 1.0) / 2.0) * c(n + 1);
  if (n >= 1) v -= std::sqrt(static_cast<double>(n) / 2.0) * c(n - 1);
  return kRootTwoPi * v;
}

// Transpose of the x-multiplication band (symmetric):
// c'_n = (2pi)^{-1/2} (sqrt((n+1)/2) c_{n+1} + sqrt(n/2) c_{n-1}).
Complex mul_x_band(const std::function<Complex(std::size_t)>& c, std::size_t n) {
  Complex v = std::sqrt((static_cast<double>(n) + 1.0) / 2.0) * c(n + 1);
  if (n >= 1) v += std::sqrt(static_cast<double>(n) / 2.0) * c(n - 1);
  return v / kRootTwoPi;
}

}  // namespace

TemperedDist derivative_dist(const TemperedDist& u) {
  if (u.is_finite()) {
    const std::vector<Complex>& c = u.finite_coeffs();
    auto at = [&c](std::size_t m) { return m < c.size() ? c[m] : Complex(0.0, 0.0); };
    std::vector<Complex> out(c.size() + 1);
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = derivative_band(at, n);
    return TemperedDist::finite(std::move(out));
  }
  const TemperedDist parent = u;
  auto coeff_at = [parent](std::size_t n) {
    return derivative_band([&parent](std::size_t m) { return parent.coeff(m); }, n);
  };
  // |c'_n| <= sqrt(2pi) * 2^{p+1} * C * (1+n)^{p+1}
  const double growth_c = kRootTwoPi * std::pow(2.0, u.growth_p() + 1.0) * u.growth_c();
  return TemperedDist::oracle(coeff_at, growth_c, u.growth_p() + 1.0,
                              "d/dx(" + u.label() + ")");
}

TemperedDist mul_poly_dist(const TemperedDist& u, const Poly& p) {
  if (u.is_finite()) {
    // Horner on the (symmetric) x band applied to the coefficient vector.
    const std::vector<Complex>& c = u.finite_coeffs();
    if (p.empty()) return TemperedDist::finite({});
    std::vector<Complex> acc(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) acc[n] = p.back() * c[n];
    for (std::size_t j = p.size() - 1; j-- > 0;) {
      auto at = [&acc](std::size_t m) { return m < acc.size() ? acc[m] : Complex(0.0, 0.0); };
      std::vector<Complex> next(acc.size() + 1);
      for (std::size_t n = 0; n < next.size(); ++n)
        next[n] = mul_x_band(at, n) + p[j] * (n < c.size() ? c[n] : Complex(0.0, 0.0));
      acc = std::move(next);
    }
    return TemperedDist::finite(std::move(acc));
  }
  if (p.empty()) return TemperedDist::finite({});
  const std::size_t deg = p.size() - 1;
  const TemperedDist parent = u;
  const Poly poly = p;
  std::function<Complex(std::size_t)> coeff_at = [parent, poly, deg](std::size_t n) {
    // c'_n = sum_m M_{mn} c_m over the band |m - n| <= deg, with M the
    // coefficient matrix of multiplication by the polynomial; columns come
    // from mul_by_poly applied to basis vectors.
    const std::vector<Complex> col = mul_by_poly(basis(n), poly).coeffs();
    Complex sum(0.0, 0.0);
    const std::size_t m_lo = n > deg ? n - deg : 0;
    for (std::size_t m = m_lo; m <= n + deg; ++m)
      if (m < col.size()) sum += col[m] * parent.coeff(m);
    return sum;
  };
  const double growth_p = u.growth_p() + static_cast<double>(deg);
  double growth_c = 1e-12;
  for (std::size_t n = 0; n <= kGrowthCheckLimit; n = n == 0 ? 1 : 2 * n) {
    const double denom = std::pow(1.0 + static_cast<double>(n), growth_p);
    growth_c = std::fmax(growth_c, std::abs(coeff_at(n)) / denom);
  }
  return TemperedDist::oracle(coeff_at, 1.5 * growth_c, growth_p,
                              "poly*(" + u.label() + ")");
}

nlohmann::json to_json(const TemperedDist& u) {
  if (!u.is_finite()) return nlohmann::json(u.label());
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Complex& c : u.finite_coeffs())
    coeffs.push_back(nlohmann::json::array({c.real(), c.imag()}));
  return {{"basis", "hermite-2pi"}, {"kind", "distribution"}, {"coeffs", std::move(coeffs)}};
}

TemperedDist dist_from_label(const std::string& label) {
  if (label == "delta") return delta();
  if (label == "const_one") return constant_one();
  throw std::invalid_argument("dist_from_label: unknown oracle '" + label + "'");
}

TemperedDist dist_from_json(const nlohmann::json& j) {
  if (j.is_string()) return dist_from_label(j.get<std::string>());
  if (!j.is_object() || j.value("kind", "") != std::string("distribution"))
    throw std::invalid_argument("dist_from_json: expected \"kind\":\"distribution\"");
  const SchwartzFn f = schwartz_from_json(j);
  return TemperedDist::finite(f.coeffs());
}

}  // namespace tempered
