#include "rdavg/rng.hpp"

#include <cmath>
#include <numbers>

namespace rdavg {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}
}  // namespace

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
    std::uint64_t x = splitmix64(root);
    x = splitmix64(x ^ splitmix64(a));
    x = splitmix64(x ^ splitmix64(b));
    x = splitmix64(x ^ splitmix64(c));
    return x;
}

double Rng::uniform01() {
    // 53-bit mantissa, strictly inside (0, 1)
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

SpectralField random_smooth_field(const GridSpec& grid, Rng& rng, double target_h1,
                                  double decay, double window_fraction) {
    std::vector<double> noise(grid.mode_count());
    for (auto& v : noise) v = rng.normal();
    SpectralField f = to_spectral(noise, grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] *= std::pow(1.0 + grid.xi_squared(i), -decay);
    std::vector<double> phys = to_physical(f);
    double w = window_fraction * grid.half_width;
    for (std::size_t j = 0; j < phys.size(); ++j) {
        double r = grid.radius(j) / w;
        phys[j] *= std::exp(-r * r);
    }
    f = to_spectral(phys, grid);
    apply_dealias_mask(f);
    double h1 = norm_h1(f);
    if (h1 > 0.0) f *= target_h1 / h1;
    return f;
}

SpectralField rough_field(const GridSpec& grid, double eps) {
    SpectralField f(grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = std::pow(1.0 + grid.xi_squared(i), -(0.5 + eps));
    double l2 = norm_l2(f);
    f *= 1.0 / l2;
    return f;
}

}  // namespace rdavg
