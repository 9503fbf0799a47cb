#include "tempered/random.hpp"

#include <cmath>

namespace tempered {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  constexpr double kTwoPi = 6.28318530717958647692528676655900577;
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  has_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

SchwartzFn sample_schwartz(Rng& rng, std::size_t max_degree) {
  const std::size_t degree = rng.uniform_index(max_degree);
  std::vector<Complex> coeffs(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    const double damp = 1.0 / ((1.0 + static_cast<double>(n)) * (1.0 + static_cast<double>(n)));
    coeffs[n] = damp * rng.complex_normal();
  }
  return SchwartzFn(std::move(coeffs));
}

}  // namespace tempered
