#include "tempered/sobolev.hpp"

#include <cmath>
#include <stdexcept>

#include "tempered/random.hpp"

namespace tempered {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr std::size_t kMaxRuleOrder = 4096;

double l2_of(const std::vector<Complex>& v) {
  double sum = 0.0;
  for (const Complex& c : v) sum += std::norm(c);
  return std::sqrt(sum);
}

}  // namespace

double L2Elem::norm_lower() const { return l2_of(coeffs); }

double L2Elem::norm_upper() const {
  const double base = l2_of(coeffs);
  return std::sqrt(base * base + declared_tail * declared_tail);
}

L2Elem to_l2(const SchwartzFn& f) { return {f.coeffs(), 0.0}; }

L2Elem fourier_l2(const L2Elem& v) {
  L2Elem out{v.coeffs, v.declared_tail};
  for (std::size_t n = 0; n < out.coeffs.size(); ++n)
    out.coeffs[n] = rotate_neg_i(n, out.coeffs[n]);
  return out;
}

L2Elem extend_by_density(const SchwartzOp& op, double bound, const L2Elem& v, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("extend_by_density: tol must be positive");
  if (!(bound >= 0.0)) throw std::invalid_argument("extend_by_density: bound must be nonnegative");

  Rng rng(0x424c5431ULL);  // fixed seed: the validation is part of the contract
  for (int i = 0; i < 100; ++i) {
    const SchwartzFn f = sample_schwartz(rng, 64);
    if (l2_norm(op.apply(f)) > bound * l2_norm(f) * (1.0 + 1e-12))
      throw std::invalid_argument("extend_by_density: stated bound violated by '" +
                                  op.label + "'");
  }

  const double out_tail = bound * v.declared_tail;
  if (out_tail > tol)
    throw std::runtime_error(
        "extend_by_density: requested tolerance unachievable at this truncation "
        "(bound * declared_tail exceeds tol); refine the truncation");

  const SchwartzFn image = op.apply(SchwartzFn(v.coeffs));
  return {image.coeffs(), out_tail};
}

double Multiplier::validate_growth() const {
  double k_emp = 0.0;
  for (int i = -60; i <= 60; ++i) {
    const double xi = (i == 0) ? 0.0 : std::copysign(std::pow(10.0, std::abs(i) / 10.0 - 3.0),
                                                     static_cast<double>(i));
    const double mag = std::abs(symbol(xi));
    const double denom = std::pow(1.0 + std::fabs(xi), static_cast<double>(growth_degree));
    const double ratio = mag / denom;
    if (!std::isfinite(ratio))
      throw std::invalid_argument("Multiplier '" + label + "': growth check not finite");
    k_emp = std::fmax(k_emp, ratio);
  }
  return k_emp;
}

MultiplierResult apply_multiplier(const Multiplier& m, const SchwartzFn& f,
                                  std::size_t proj_degree) {
  if (proj_degree < f.degree() + m.growth_degree)
    throw std::invalid_argument("apply_multiplier: proj_degree below degree + growth_degree");

  const SchwartzFn fhat = fourier(f);
  auto project_at = [&](std::size_t pd) {
    const std::size_t order = default_rule_order(pd);
    if (order > kMaxRuleOrder)
      throw std::length_error("apply_multiplier: quadrature order overflow");
    const QuadratureRule rule = gauss_rule(order);
    return project([&](double xi) { return m.symbol(xi) * fhat.eval(xi); }, pd, rule);
  };

  const std::vector<Complex> p1 = project_at(proj_degree);
  const std::vector<Complex> p2 = project_at(proj_degree + 16);
  double resid2 = 0.0;
  for (std::size_t n = 0; n < p2.size(); ++n) {
    const Complex a = n < p1.size() ? p1[n] : Complex(0.0, 0.0);
    resid2 += std::norm(a - p2[n]);
  }

  std::vector<Complex> out = p1;
  for (std::size_t n = 0; n < out.size(); ++n)
    out[n] = rotate_pos_i(n, out[n]);
  return {SchwartzFn(std::move(out)), std::sqrt(resid2)};
}

std::size_t default_proj_degree(const SchwartzFn& f, const Multiplier& m) {
  return f.degree() + 2 * static_cast<std::size_t>(m.growth_degree) + 8;
}

MultiplierResult lambda_s(double s, const SchwartzFn& f, std::size_t proj_degree) {
  return apply_multiplier(japanese_bracket(s), f, proj_degree);
}

double sobolev_norm(const SchwartzFn& f, double s) {
  const Multiplier m = japanese_bracket(s);
  return l2_norm(lambda_s(s, f, default_proj_degree(f, m)).value);
}

double sobolev_norm_truncated(const TemperedDist& u, double s, std::size_t trunc_degree) {
  std::vector<Complex> coeffs(trunc_degree + 1);
  for (std::size_t n = 0; n <= trunc_degree; ++n) coeffs[n] = u.coeff(n);
  return sobolev_norm(SchwartzFn(std::move(coeffs)), s);
}

double h_k_classical_norm(const SchwartzFn& f, unsigned k) {
  SchwartzFn g = f;
  double total = l2_norm(g) * l2_norm(g);
  for (unsigned j = 1; j <= k; ++j) {
    g = derivative(g);
    total += l2_norm(g) * l2_norm(g);
  }
  return std::sqrt(total);
}

Multiplier one_symbol() {
  return {[](double) { return Complex(1.0, 0.0); }, 0, "one"};
}

Multiplier laplacian_symbol() {
  return {[](double xi) {
            const double w = 2.0 * kPi * xi;
            return Complex(w * w, 0.0);
          },
          2, "laplacian_2pi"};
}

Multiplier japanese_bracket(double s) {
  const unsigned growth =
      s > 0.0 ? static_cast<unsigned>(std::ceil(s)) : 0u;
  return {[s](double xi) { return Complex(std::pow(1.0 + xi * xi, 0.5 * s), 0.0); },
          growth, "japanese_bracket:" + std::to_string(s)};
}

Multiplier multiplier_from_label(const std::string& label) {
  if (label == "one") return one_symbol();
  if (label == "laplacian_2pi") return laplacian_symbol();
  const std::string prefix = "japanese_bracket:";
  if (label.rfind(prefix, 0) == 0) {
    const std::string arg = label.substr(prefix.size());
    std::size_t used = 0;
    const double s = std::stod(arg, &used);
    if (used != arg.size())
      throw std::invalid_argument("multiplier_from_label: bad exponent '" + arg + "'");
    return japanese_bracket(s);
  }
  throw std::invalid_argument("multiplier_from_label: unknown label '" + label + "'");
}

nlohmann::json to_json(const L2Elem& v) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Complex& c : v.coeffs)
    coeffs.push_back(nlohmann::json::array({c.real(), c.imag()}));
  return {{"basis", "hermite-2pi"}, {"coeffs", std::move(coeffs)}, {"tail", v.declared_tail}};
}

L2Elem l2_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("basis", "") != std::string("hermite-2pi"))
    throw std::invalid_argument("l2_from_json: expected basis \"hermite-2pi\"");
  L2Elem v;
  v.declared_tail = j.value("tail", 0.0);
  if (v.declared_tail < 0.0)
    throw std::invalid_argument("l2_from_json: tail must be nonnegative");
  for (const auto& e : j.at("coeffs")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw std::invalid_argument("l2_from_json: coefficients must be [re, im] pairs");
    v.coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

}  // namespace tempered
