#pragma once

#include <cstdint>
#include <random>

#include "tempered/schwartz.hpp"

// Seeded randomness for falsification runs and tests.  The Gaussian transform
// is a hand-rolled Box-Muller on top of mt19937_64 so that a given seed
// produces the same stream on every platform (std::normal_distribution does
// not guarantee that).

namespace tempered {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform on [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // standard normal, Box-Muller
  double normal();

  // independent N(0,1) real and imaginary parts
  Complex complex_normal() {
    const double re = normal();
    return Complex(re, normal());
  }

  std::size_t uniform_index(std::size_t bound) {  // in [0, bound]
    return static_cast<std::size_t>(engine_() % (bound + 1));
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Random test function: degree uniform in [0, max_degree], coefficients
// i.i.d. complex Gaussian scaled by (1+n)^{-2}.  This is the fixed test
// distribution of the certificate falsifier.
SchwartzFn sample_schwartz(Rng& rng, std::size_t max_degree);

}  // namespace tempered
