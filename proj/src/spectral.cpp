#include "rdavg/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace rdavg {

namespace {

// Plan cache. Creation is serialized; execution via fftw_execute_dft on
// caller-owned buffers is thread safe. FFTW_UNALIGNED keeps the plans valid
// for ordinary std::vector storage.
class FftPlans {
  public:
    static FftPlans& instance() {
        static FftPlans plans;
        return plans;
    }

    void execute(int dim, int m, int sign, std::complex<double>* in,
                 std::complex<double>* out) {
        fftw_plan plan = get(dim, m, sign);
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    }

  private:
    fftw_plan get(int dim, int m, int sign) {
        std::scoped_lock lock(mutex_);
        auto key = std::make_tuple(dim, m, sign);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::size_t n = dim == 1 ? static_cast<std::size_t>(m)
                                 : static_cast<std::size_t>(m) * m;
        std::vector<std::complex<double>> scratch(n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan = dim == 1
            ? fftw_plan_dft_1d(m, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED)
            : fftw_plan_dft_2d(m, m, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache_.emplace(key, plan);
        return plan;
    }

    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> cache_;
};

}  // namespace

void GridSpec::validate() const {
    if (dim != 1 && dim != 2)
        throw config_error("grid: dim must be 1 or 2, got " + std::to_string(dim));
    if (!(half_width > 0.0))
        throw config_error("grid: half_width must be positive");
    if (modes_per_axis < 8 || modes_per_axis % 2 != 0)
        throw config_error("grid: modes_per_axis must be even and >= 8, got " +
                           std::to_string(modes_per_axis));
    if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
        throw config_error("grid: dealias_fraction must lie in (0, 1]");
}

std::size_t GridSpec::mode_count() const {
    std::size_t m = static_cast<std::size_t>(modes_per_axis);
    return dim == 1 ? m : m * m;
}

int GridSpec::wavenumber(int index) const {
    return index < modes_per_axis / 2 ? index : index - modes_per_axis;
}

double GridSpec::xi(int index) const {
    return std::numbers::pi * wavenumber(index) / half_width;
}

double GridSpec::xi_squared(std::size_t flat) const {
    if (dim == 1) {
        double x = xi(static_cast<int>(flat));
        return x * x;
    }
    int m = modes_per_axis;
    double xa = xi(static_cast<int>(flat) / m);
    double xb = xi(static_cast<int>(flat) % m);
    return xa * xa + xb * xb;
}

double GridSpec::coordinate(int index) const {
    return -half_width + 2.0 * half_width * index / modes_per_axis;
}

double GridSpec::radius(std::size_t flat) const {
    if (dim == 1) return std::abs(coordinate(static_cast<int>(flat)));
    int m = modes_per_axis;
    double xa = coordinate(static_cast<int>(flat) / m);
    double xb = coordinate(static_cast<int>(flat) % m);
    return std::hypot(xa, xb);
}

double GridSpec::cell_volume() const {
    double h = 2.0 * half_width / modes_per_axis;
    return dim == 1 ? h : h * h;
}

double GridSpec::box_volume() const {
    double l = 2.0 * half_width;
    return dim == 1 ? l : l * l;
}

int GridSpec::dealias_cutoff() const {
    return static_cast<int>(dealias_fraction * (modes_per_axis / 2));
}

bool GridSpec::in_band(std::size_t flat) const {
    int cut = dealias_cutoff();
    if (dim == 1) return std::abs(wavenumber(static_cast<int>(flat))) <= cut;
    int m = modes_per_axis;
    return std::abs(wavenumber(static_cast<int>(flat) / m)) <= cut &&
           std::abs(wavenumber(static_cast<int>(flat) % m)) <= cut;
}

bool GridSpec::operator==(const GridSpec& other) const {
    return dim == other.dim && half_width == other.half_width &&
           modes_per_axis == other.modes_per_axis &&
           dealias_fraction == other.dealias_fraction;
}

SpectralField::SpectralField(const GridSpec& grid)
    : grid_(grid), coeffs_(grid.mode_count()) {
    grid_.validate();
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
    if (!(grid_ == other.grid_)) throw config_error("field sum: grid mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
    if (!(grid_ == other.grid_)) throw config_error("field difference: grid mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double scale) {
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

void SpectralField::axpy(double scale, const SpectralField& other) {
    if (!(grid_ == other.grid_)) throw config_error("field axpy: grid mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += scale * other.coeffs_[i];
}

bool SpectralField::finite() const {
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

std::vector<double> to_physical(const SpectralField& f) {
    const GridSpec& g = f.grid();
    std::vector<std::complex<double>> work(f.coeffs().begin(), f.coeffs().end());
    std::vector<std::complex<double>> out(work.size());
    FftPlans::instance().execute(g.dim, g.modes_per_axis, FFTW_BACKWARD,
                                 work.data(), out.data());
    std::vector<double> phys(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) phys[i] = out[i].real();
    return phys;
}

SpectralField to_spectral(std::span<const double> samples, const GridSpec& grid) {
    grid.validate();
    if (samples.size() != grid.mode_count())
        throw config_error("to_spectral: sample count " +
                           std::to_string(samples.size()) + " does not match grid (" +
                           std::to_string(grid.mode_count()) + " points)");
    std::vector<std::complex<double>> work(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) work[i] = samples[i];
    SpectralField f(grid);
    FftPlans::instance().execute(grid.dim, grid.modes_per_axis, FFTW_FORWARD,
                                 work.data(), f.coeffs().data());
    double scale = 1.0 / static_cast<double>(grid.mode_count());
    for (auto& c : f.coeffs()) c *= scale;
    return f;
}

double norm_l2(const SpectralField& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs()) s += std::norm(c);
    return std::sqrt(s * f.grid().box_volume());
}

double norm_h1(const SpectralField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += (1.0 + f.grid().xi_squared(i)) * std::norm(f[i]);
    return std::sqrt(s * f.grid().box_volume());
}

double dirichlet_energy(const SpectralField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += f.grid().xi_squared(i) * std::norm(f[i]);
    return s * f.grid().box_volume();
}

double tail_mass(const SpectralField& f, double radius) {
    const GridSpec& g = f.grid();
    if (!(radius > 0.0) || radius >= g.half_width)
        throw std::domain_error("tail_mass: radius must lie in (0, half_width)");
    std::vector<double> phys = to_physical(f);
    double s = 0.0;
    for (std::size_t j = 0; j < phys.size(); ++j)
        if (g.radius(j) > radius) s += phys[j] * phys[j];
    return s * g.cell_volume();
}

double hermitian_defect(const SpectralField& f) {
    const GridSpec& g = f.grid();
    int m = g.modes_per_axis;
    auto conj_index = [m](int i) { return i == 0 ? 0 : m - i; };
    double worst = 0.0;
    if (g.dim == 1) {
        for (int i = 0; i < m; ++i)
            worst = std::max(worst, std::abs(f[conj_index(i)] - std::conj(f[i])));
    } else {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                std::size_t ij = static_cast<std::size_t>(a) * m + b;
                std::size_t ji = static_cast<std::size_t>(conj_index(a)) * m + conj_index(b);
                worst = std::max(worst, std::abs(f[ji] - std::conj(f[ij])));
            }
    }
    return worst;
}

void apply_dealias_mask(SpectralField& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f.grid().in_band(i)) f[i] = 0.0;
}

double distance_l2(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid() == b.grid())) throw config_error("distance_l2: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s * a.grid().box_volume());
}

double distance_h1(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid() == b.grid())) throw config_error("distance_h1: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (1.0 + a.grid().xi_squared(i)) * std::norm(a[i] - b[i]);
    return std::sqrt(s * a.grid().box_volume());
}

}  // namespace rdavg
