#ifndef RDAVG_RNG_HPP
#define RDAVG_RNG_HPP

#include <cstdint>
#include <random>

#include "rdavg/spectral.hpp"

namespace rdavg {

/// Mixes a root seed with stream labels so independent jobs get independent,
/// reproducible generators.
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0,
                       std::uint64_t c = 0);

/// Deterministic normal deviates (Box-Muller over mt19937_64), independent of
/// the standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01();                   // in (0, 1)
    double uniform(double lo, double hi);
    double normal();

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Smooth random real field: spectrally filtered white noise
/// (1 + |xi|^2)^{-decay}, localized by a Gaussian window of width
/// window_fraction * half_width, dealiased, scaled to the requested H1 norm.
SpectralField random_smooth_field(const GridSpec& grid, Rng& rng, double target_h1,
                                  double decay = 1.5, double window_fraction = 0.2);

/// Deterministic rough field with coefficients (1 + |xi|^2)^{-(1/2 + eps)},
/// scaled to unit L2 norm: bounded in L2, with H1 mass spread across the
/// whole resolved spectrum.
SpectralField rough_field(const GridSpec& grid, double eps);

}  // namespace rdavg

#endif
