#include "tempered/schwartz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tempered {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const double kRootTwoPi = std::sqrt(2.0 * kPi);

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& c : v) m = std::fmax(m, std::abs(c));
  return m;
}

std::vector<Complex> trimmed(std::vector<Complex> v) {
  const double cutoff = 1e-14 * max_abs(v);
  std::size_t last = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > cutoff) last = i;
  if (v.empty() || max_abs(v) == 0.0) return {Complex(0.0, 0.0)};
  v.resize(last + 1);
  return v;
}

}  // namespace

SchwartzFn::SchwartzFn(std::vector<Complex> coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

bool SchwartzFn::is_zero() const {
  return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0, 0.0);
}

bool SchwartzFn::approx_equal(const SchwartzFn& other, double tol) const {
  const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  const double bound = tol * (1.0 + std::fmax(max_abs(coeffs_), max_abs(other.coeffs_)));
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = i < coeffs_.size() ? coeffs_[i] : Complex(0.0, 0.0);
    const Complex b = i < other.coeffs_.size() ? other.coeffs_[i] : Complex(0.0, 0.0);
    if (std::abs(a - b) > bound) return false;
  }
  return true;
}

SchwartzFn add(const SchwartzFn& f, const SchwartzFn& g) {
  std::vector<Complex> out(std::max(f.coeffs().size(), g.coeffs().size()), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i] += f.coeffs()[i];
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i] += g.coeffs()[i];
  return SchwartzFn(std::move(out));
}

SchwartzFn scale(Complex c, const SchwartzFn& f) {
  std::vector<Complex> out = f.coeffs();
  for (Complex& a : out) a *= c;
  return SchwartzFn(std::move(out));
}

SchwartzFn derivative(const SchwartzFn& f) {
  const auto& a = f.coeffs();
  const std::size_t n = a.size();
  std::vector<Complex> out(n + 1, Complex(0.0, 0.0));
  for (std::size_t m = 0; m <= n; ++m) {
    Complex v(0.0, 0.0);
    if (m + 1 < n)
      v += std::sqrt((static_cast<double>(m) + 1.0) / 2.0) * a[m + 1];
    if (m >= 1)
      v -= std::sqrt(static_cast<double>(m) / 2.0) * a[m - 1];
    out[m] = kRootTwoPi * v;
  }
  return SchwartzFn(std::move(out));
}

SchwartzFn mul_by_x(const SchwartzFn& f) {
  const auto& a = f.coeffs();
  const std::size_t n = a.size();
  std::vector<Complex> out(n + 1, Complex(0.0, 0.0));
  for (std::size_t m = 0; m <= n; ++m) {
    Complex v(0.0, 0.0);
    if (m + 1 < n)
      v += std::sqrt((static_cast<double>(m) + 1.0) / 2.0) * a[m + 1];
    if (m >= 1)
      v += std::sqrt(static_cast<double>(m) / 2.0) * a[m - 1];
    out[m] = v / kRootTwoPi;
  }
  return SchwartzFn(std::move(out));
}

SchwartzFn mul_by_poly(const SchwartzFn& f, const Poly& p) {
  if (p.empty()) return SchwartzFn();
  // Horner on the x-multiplication operator.
  SchwartzFn acc = scale(p.back(), f);
  for (std::size_t j = p.size() - 1; j-- > 0;)
    acc = add(mul_by_x(acc), scale(p[j], f));
  return acc;
}

SchwartzFn fourier(const SchwartzFn& f) {
  std::vector<Complex> out = f.coeffs();
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = rotate_neg_i(n, out[n]);
  return SchwartzFn(std::move(out));
}

SchwartzFn inverse_fourier(const SchwartzFn& f) {
  std::vector<Complex> out = f.coeffs();
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = rotate_pos_i(n, out[n]);
  return SchwartzFn(std::move(out));
}

namespace {

double golden_max(const std::function<double(double)>& phi, double a, double b) {
  constexpr double invphi = 0.61803398874989484820458683436564;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = phi(c), fd = phi(d);
  double best = std::fmax(fc, fd);
  const double limit = 1e-6 * std::fmax(1.0, 0.5 * (std::fabs(a) + std::fabs(b)));
  while (b - a > limit) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = phi(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = phi(c);
    }
    best = std::fmax(best, std::fmax(fc, fd));
  }
  return best;
}

}  // namespace

double seminorm(const SchwartzFn& f, SeminormIndex idx) {
  SchwartzFn d = f;
  for (unsigned j = 0; j < idx.n; ++j) d = derivative(d);
  if (d.is_zero()) return 0.0;

  // Turning-point bound for |x|^k |f^(n)|; the +2k term keeps the argmax of
  // the polynomially weighted envelope inside the window.
  const double R = std::sqrt(
      (2.0 * static_cast<double>(f.degree() + idx.n) + 1.0 + 2.0 * idx.k) / kPi);
  const double k = static_cast<double>(idx.k);
  auto phi = [&](double x) {
    return std::pow(std::fabs(x), k) * std::abs(d.eval(x));
  };

  constexpr std::size_t kSamples = 4096;
  std::vector<double> xs(kSamples), vals(kSamples);
  for (std::size_t j = 0; j < kSamples; ++j) {
    xs[j] = -R + 2.0 * R * static_cast<double>(j) / static_cast<double>(kSamples - 1);
    vals[j] = phi(xs[j]);
  }

  double best = 0.0;
  for (std::size_t j = 0; j < kSamples; ++j) {
    best = std::fmax(best, vals[j]);
    const bool left_ok = j == 0 || vals[j] >= vals[j - 1];
    const bool right_ok = j + 1 == kSamples || vals[j] >= vals[j + 1];
    if (left_ok && right_ok && vals[j] > 0.0) {
      const double a = j == 0 ? xs[0] : xs[j - 1];
      const double b = j + 1 == kSamples ? xs[kSamples - 1] : xs[j + 1];
      if (b > a) best = std::fmax(best, golden_max(phi, a, b));
    }
  }
  return best;
}

Complex pairing(const SchwartzFn& f, const SchwartzFn& g) {
  const std::size_t n = std::min(f.coeffs().size(), g.coeffs().size());
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) sum += f.coeffs()[i] * g.coeffs()[i];
  return sum;
}

Complex inner(const SchwartzFn& f, const SchwartzFn& g) {
  const std::size_t n = std::min(f.coeffs().size(), g.coeffs().size());
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) sum += std::conj(f.coeffs()[i]) * g.coeffs()[i];
  return sum;
}

double l2_norm(const SchwartzFn& f) {
  double sum = 0.0;
  for (const Complex& c : f.coeffs()) sum += std::norm(c);
  return std::sqrt(sum);
}

SchwartzFn gaussian() {
  return SchwartzFn({Complex(std::pow(2.0, -0.25), 0.0)});
}

SchwartzFn basis(std::size_t n) {
  std::vector<Complex> c(n + 1, Complex(0.0, 0.0));
  c[n] = 1.0;
  return SchwartzFn(std::move(c));
}

nlohmann::json to_json(const SchwartzFn& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Complex& c : f.coeffs())
    coeffs.push_back(nlohmann::json::array({c.real(), c.imag()}));
  return {{"basis", "hermite-2pi"}, {"coeffs", std::move(coeffs)}};
}

SchwartzFn schwartz_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("basis", "") != std::string("hermite-2pi"))
    throw std::invalid_argument("schwartz_from_json: expected basis \"hermite-2pi\"");
  const auto& arr = j.at("coeffs");
  if (!arr.is_array())
    throw std::invalid_argument("schwartz_from_json: \"coeffs\" must be an array");
  std::vector<Complex> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw std::invalid_argument("schwartz_from_json: coefficients must be [re, im] pairs");
    coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return SchwartzFn(std::move(coeffs));
}

SchwartzOp identity_op() {
  return {"identity", [](const SchwartzFn& f) { return f; }, 0};
}

SchwartzOp scale_op(Complex c) {
  return {"scale", [c](const SchwartzFn& f) { return scale(c, f); }, 0};
}

SchwartzOp fourier_op() {
  return {"fourier", [](const SchwartzFn& f) { return fourier(f); }, 0};
}

SchwartzOp inverse_fourier_op() {
  return {"inverse_fourier", [](const SchwartzFn& f) { return inverse_fourier(f); }, 0};
}

SchwartzOp derivative_op() {
  return {"derivative", [](const SchwartzFn& f) { return derivative(f); }, 1};
}

SchwartzOp mul_x_op() {
  return {"mul_x", [](const SchwartzFn& f) { return mul_by_x(f); }, 1};
}

SchwartzOp mul_poly_op(const Poly& p) {
  const std::size_t bw = p.empty() ? 0 : p.size() - 1;
  return {"mul_poly", [p](const SchwartzFn& f) { return mul_by_poly(f, p); }, bw};
}

}  // namespace tempered
