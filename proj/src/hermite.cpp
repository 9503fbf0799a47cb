#include "tempered/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace tempered {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
const double kRootTwoPi = std::sqrt(kTwoPi);
const double kQuartRootTwoPi = std::pow(kTwoPi, 0.25);
const double kInvQuartRootPi = std::pow(kPi, -0.25);
constexpr double kLn2 = 0.69314718055994530941723212145818;

// Recurrence coefficients a[k] = sqrt(2/(k+1)), b[k] = sqrt(k/(k+1)),
// grown on demand.  thread_local so readers never race with growth.
struct RecurrenceTables {
  std::vector<double> a, b;
  void ensure(std::size_t n) {
    for (std::size_t k = a.size(); k <= n; ++k) {
      a.push_back(std::sqrt(2.0 / static_cast<double>(k + 1)));
      b.push_back(std::sqrt(static_cast<double>(k) / static_cast<double>(k + 1)));
    }
  }
};

const RecurrenceTables& tables(std::size_t n) {
  thread_local RecurrenceTables t;
  t.ensure(n);
  return t;
}

// Upward recurrence on the weighted Hermite functions
//   psi_{k+1}(t) = t*sqrt(2/(k+1))*psi_k(t) - sqrt(k/(k+1))*psi_{k-1}(t),
// carried as psi_k = v_k * 2^exp2 with block rescaling.  The start value
// exp(-t^2/2) is absorbed into exp2, so the recurrence never underflows even
// deep in the classically forbidden region, and never overflows on the way
// back into the oscillatory region.
struct ScaledRecurrence {
  double prev = 0.0;  // v_{k-1}
  double curr = 0.0;  // v_k
  long exp2 = 0;
  std::size_t k = 0;

  ScaledRecurrence(double t, const RecurrenceTables& tab) : t_(t), tab_(&tab) {
    const double e_nat = -0.5 * t * t;
    if (e_nat > -600.0) {
      curr = kInvQuartRootPi * std::exp(e_nat);
    } else {
      exp2 = static_cast<long>(std::floor(e_nat / kLn2));
      curr = kInvQuartRootPi * std::exp(e_nat - static_cast<double>(exp2) * kLn2);
    }
  }

  void advance() {
    const double next = t_ * tab_->a[k] * curr - tab_->b[k] * prev;
    prev = curr;
    curr = next;
    ++k;
    if (std::fabs(curr) > 0x1p512) {
      curr = std::ldexp(curr, -512);
      prev = std::ldexp(prev, -512);
      exp2 += 512;
    }
  }

  double value() const { return exp2 == 0 ? curr : std::ldexp(curr, exp2); }
  double lower_value() const { return exp2 == 0 ? prev : std::ldexp(prev, exp2); }

 private:
  double t_;
  const RecurrenceTables* tab_;
};

}  // namespace

double eval_hermite(std::size_t n, double x) {
  ScaledRecurrence rec(kRootTwoPi * x, tables(n));
  while (rec.k < n) rec.advance();
  return kQuartRootTwoPi * rec.value();
}

void eval_hermite_all(std::size_t nmax, double x, std::vector<double>& out) {
  out.resize(nmax + 1);
  ScaledRecurrence rec(kRootTwoPi * x, tables(nmax));
  out[0] = kQuartRootTwoPi * rec.value();
  for (std::size_t k = 1; k <= nmax; ++k) {
    rec.advance();
    out[k] = kQuartRootTwoPi * rec.value();
  }
}

std::vector<double> eval_hermite_all(std::size_t nmax, double x) {
  std::vector<double> out;
  eval_hermite_all(nmax, x, out);
  return out;
}

Complex hermite_series(const std::vector<Complex>& coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  ScaledRecurrence rec(kRootTwoPi * x, tables(coeffs.size()));
  Complex sum = coeffs[0] * rec.value();
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    rec.advance();
    sum += coeffs[k] * rec.value();
  }
  return kQuartRootTwoPi * sum;
}

namespace {

// psi_n and psi_{n-1} in a common 2^exp2 scale; enough for signs and Newton
// ratios, and for true values wherever they are representable.
struct PsiPair {
  double lower;
  double upper;
  long exp2;
};

PsiPair psi_pair(std::size_t n, double t) {
  ScaledRecurrence rec(t, tables(n));
  while (rec.k < n) rec.advance();
  return {rec.prev, rec.curr, rec.exp2};
}

// Newton increment for a zero of psi_n, using
// psi_n'(t) = sqrt(2n)*psi_{n-1}(t) - t*psi_n(t); the scale cancels.
double newton_step(std::size_t n, double t) {
  const PsiPair p = psi_pair(n, t);
  const double deriv =
      std::sqrt(2.0 * static_cast<double>(n)) * p.lower - t * p.upper;
  return p.upper / deriv;
}

// Zeros of psi_n (= zeros of H_n), ascending.  Sign scan over a grid about
// 8x finer than the minimal zero spacing pi/sqrt(2n+1), then bisection and
// Newton polish.  Zeros are symmetric, so only t >= 0 is scanned.
std::vector<double> hermite_zeros(std::size_t n) {
  std::vector<double> pos;
  pos.reserve(n / 2 + 1);
  const double tmax = std::sqrt(2.0 * static_cast<double>(n) + 1.0);
  const std::size_t scan = 10 * n + 20;
  const double step = tmax / static_cast<double>(scan);
  const double offset = (n % 2 == 1) ? 0.5 * step : 0.0;

  auto sign_at = [&](double t) {
    const double v = psi_pair(n, t).upper;
    return (v > 0.0) - (v < 0.0);
  };

  double t_prev = offset;
  int s_prev = sign_at(t_prev);
  for (std::size_t i = 1; i <= scan; ++i) {
    const double t = offset + static_cast<double>(i) * step;
    const int s = sign_at(t);
    if (s != 0 && s_prev != 0 && s != s_prev) {
      double lo = t_prev, hi = t;
      for (int it = 0; it < 12; ++it) {
        const double mid = 0.5 * (lo + hi);
        (sign_at(mid) == s_prev ? lo : hi) = mid;
      }
      double root = 0.5 * (lo + hi);
      for (int it = 0; it < 30; ++it) {
        const double d = newton_step(n, root);
        root -= d;
        if (std::fabs(d) < 1e-15 * std::fmax(1.0, std::fabs(root))) break;
      }
      pos.push_back(root);
    }
    if (s != 0) s_prev = s;
    t_prev = t;
  }

  std::vector<double> all;
  all.reserve(n);
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) all.push_back(-*it);
  if (n % 2 == 1) all.push_back(0.0);
  for (double z : pos) all.push_back(z);
  return all;
}

}  // namespace

QuadratureRule gauss_rule(std::size_t order) {
  if (order == 0) throw std::invalid_argument("gauss_rule: order must be >= 1");

  const std::vector<double> t = hermite_zeros(order);
  if (t.size() != order)
    throw std::logic_error("gauss_rule: node search lost a root");

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  rule.total_weights.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    // Christoffel weight in weighted form: w_i * exp(t_i^2) =
    // 1 / (order * psi_{order-1}(t_i)^2); stays in range at any order.
    const PsiPair p = psi_pair(order, t[i]);
    const double psi_lower = std::ldexp(p.lower, p.exp2);
    const double wt = 1.0 / (static_cast<double>(order) * psi_lower * psi_lower);
    rule.nodes[i] = t[i] / kRootTwoPi;
    rule.total_weights[i] = wt / kRootTwoPi;
    rule.weights[i] = rule.total_weights[i] * std::exp(-t[i] * t[i]);
  }
  for (std::size_t i = 1; i < order; ++i)
    if (!(rule.nodes[i] > rule.nodes[i - 1]))
      throw std::logic_error("gauss_rule: nodes not strictly increasing");
  return rule;
}

double QuadratureRule::integrate(const std::function<double(double)>& decaying) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < order; ++i) sum += total_weights[i] * decaying(nodes[i]);
  return sum;
}

Complex QuadratureRule::integrate(const std::function<Complex(double)>& decaying) const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < order; ++i) sum += total_weights[i] * decaying(nodes[i]);
  return sum;
}

std::vector<Complex> project(const std::function<Complex(double)>& target,
                             std::size_t degree, const QuadratureRule& rule) {
  if (rule.order < degree + 1)
    throw std::invalid_argument("project: rule order too small for requested degree");
  std::vector<Complex> coeffs(degree + 1, Complex(0.0, 0.0));
  std::vector<double> basis;
  for (std::size_t i = 0; i < rule.order; ++i) {
    const double x = rule.nodes[i];
    eval_hermite_all(degree, x, basis);
    const Complex f = rule.total_weights[i] * target(x);
    for (std::size_t n = 0; n <= degree; ++n) coeffs[n] += f * basis[n];
  }
  return coeffs;
}

}  // namespace tempered
