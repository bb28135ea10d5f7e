#ifndef RDAVG_SPECTRAL_HPP
#define RDAVG_SPECTRAL_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rdavg/errors.hpp"

namespace rdavg {

/// Uniform periodic grid on [-half_width, half_width]^dim.
///
/// Wavenumbers per axis are xi_k = pi*k/half_width for
/// k in {-M/2, ..., M/2-1}; spectral coefficients are stored in DFT index
/// order (index i maps to k = i for i < M/2 and k = i - M otherwise).
struct GridSpec {
    int dim = 1;
    double half_width = 20.0;
    int modes_per_axis = 256;
    double dealias_fraction = 2.0 / 3.0;

    void validate() const;

    std::size_t mode_count() const;
    int wavenumber(int index) const;          // DFT index -> signed k
    double xi(int index) const;               // pi*k/half_width
    double xi_squared(std::size_t flat) const;  // |xi|^2 of a flat index
    double coordinate(int index) const;       // grid point along one axis
    double radius(std::size_t flat) const;    // |x| of a physical point
    double cell_volume() const;               // (2l/M)^dim quadrature weight
    double box_volume() const;                // (2l)^dim
    int dealias_cutoff() const;               // keep |k| <= cutoff
    bool in_band(std::size_t flat) const;

    bool operator==(const GridSpec& other) const;
};

/// Real-valued field stored as complex Fourier coefficients on a GridSpec.
///
/// Invariant: coefficients are Hermitian-symmetric, c(-k) = conj(c(k)), so
/// the physical samples are real. Discrete norms use the fixed normalization
///   |u|_{L2}^2 = (2l)^dim * sum_k |c_k|^2,
/// which equals the trapezoidal sum (2l/M)^dim * sum_j u(x_j)^2.
class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(const GridSpec& grid);

    const GridSpec& grid() const { return grid_; }
    std::size_t size() const { return coeffs_.size(); }

    std::complex<double>& operator[](std::size_t i) { return coeffs_[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return coeffs_[i]; }

    std::span<const std::complex<double>> coeffs() const { return coeffs_; }
    std::span<std::complex<double>> coeffs() { return coeffs_; }

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(double scale);
    /// this += scale * other
    void axpy(double scale, const SpectralField& other);

    bool finite() const;

  private:
    GridSpec grid_;
    std::vector<std::complex<double>> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// Inverse transform to physical samples (row-major over grid points).
std::vector<double> to_physical(const SpectralField& f);

/// Forward transform from physical samples; throws config_error on a shape
/// mismatch.
SpectralField to_spectral(std::span<const double> samples, const GridSpec& grid);

double norm_l2(const SpectralField& f);
double norm_h1(const SpectralField& f);
/// Gradient part only: (2l)^dim * sum |xi|^2 |c_k|^2  (== h1^2 - l2^2).
double dirichlet_energy(const SpectralField& f);

/// Mass outside the ball of given radius: sum over grid points |x_j| > radius
/// of u(x_j)^2 * cell_volume. Requires 0 < radius < half_width.
double tail_mass(const SpectralField& f, double radius);

/// Max Hermitian-symmetry defect max_k |c(-k) - conj(c(k))|.
double hermitian_defect(const SpectralField& f);

/// Zero every coefficient with any |k_axis| > dealias cutoff.
void apply_dealias_mask(SpectralField& f);

/// L2 and H1 distances between fields on the same grid.
double distance_l2(const SpectralField& a, const SpectralField& b);
double distance_h1(const SpectralField& a, const SpectralField& b);

}  // namespace rdavg

#endif
