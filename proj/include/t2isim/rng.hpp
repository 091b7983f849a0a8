#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace t2isim {

// Deterministic random helpers on top of mt19937_64. The std:: distribution
// objects are implementation-defined, so all draws here go through explicit
// arithmetic to keep seeded runs byte-reproducible across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(gen_() % span);
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    double exponential() { return -std::log(1.0 - uniform01()); }

    bool bernoulli(double p) { return uniform01() < p; }

    // standard normal, Box-Muller
    double normal() {
        const double u = 1.0 - uniform01();
        const double v = uniform01();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace t2isim
