#include "rdavg/propagator.hpp"

#include <cmath>

namespace rdavg {

namespace {

// Integrated quadratic form over [s, t] for a (possibly averaged) matrix.
double exponent_from(const QuasiPeriodicMatrix& a, const GridSpec& g, double s,
                     double t, double omega, std::size_t flat) {
    if (g.dim == 1) {
        double xi = g.xi(static_cast<int>(flat));
        return primitive(a.entries[0], s, t, omega) * xi * xi;
    }
    int m = g.modes_per_axis;
    double xa = g.xi(static_cast<int>(flat) / m);
    double xb = g.xi(static_cast<int>(flat) % m);
    return primitive(a.entries[0], s, t, omega) * xa * xa +
           2.0 * primitive(a.entries[1], s, t, omega) * xa * xb +
           primitive(a.entries[2], s, t, omega) * xb * xb;
}

SpectralField apply_exponent(const QuasiPeriodicMatrix& a, const ProblemSpec& p,
                             double s, double t, const SpectralField& u) {
    if (!(u.grid() == p.grid))
        throw config_error("propagator: field grid does not match problem grid");
    if (t < s) throw std::domain_error("propagator: requires t >= s");
    if (t == s) return u;
    SpectralField out = u;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] *= std::exp(-exponent_from(a, p.grid, s, t, p.omega, i));
    return out;
}

}  // namespace

double propagator_exponent(const ProblemSpec& p, double s, double t,
                           std::size_t flat_index) {
    return exponent_from(p.diffusion, p.grid, s, t, p.omega, flat_index);
}

SpectralField apply_propagator(const ProblemSpec& p, double s, double t,
                               const SpectralField& u) {
    return apply_exponent(p.diffusion, p, s, t, u);
}

SpectralField apply_averaged_semigroup(const ProblemSpec& p, double dt,
                                       const SpectralField& u) {
    return apply_exponent(p.diffusion.mean_matrix(), p, 0.0, dt, u);
}

double difference_envelope_l2(double q, double nu0) {
    if (!(q > 0.0) || q > 8.0 * nu0 * nu0 * nu0)
        throw std::domain_error("difference_envelope_l2: requires 0 < q <= 8 nu0^3");
    double k = std::pow(q, -1.0 / 3.0);
    double r6 = std::pow(q, -1.0 / 6.0);
    return std::sqrt(2.0) * r6 * std::exp(-nu0 * k) +
           r6 * std::expm1(std::pow(q, 2.0 / 3.0));
}

double difference_envelope_h1(double q, double nu0) {
    if (!(q > 0.0) || q > 8.0 * nu0 * nu0 * nu0)
        throw std::domain_error("difference_envelope_h1: requires 0 < q <= 8 nu0^3");
    double k = std::pow(q, -1.0 / 3.0);
    return std::sqrt(2.0) * std::exp(-nu0 * k) + std::expm1(std::pow(q, 2.0 / 3.0));
}

double AveragingEnvelope::from_mu(double mu) const {
    if (!(mu > 0.0)) return 0.0;
    double rm = std::sqrt(mu);
    double inner = std::exp(-mu1 / rm) / rm + rm * std::exp(mu2 * rm);
    return std::sqrt(kappa_bar * inner);
}

AveragingEnvelope make_averaging_envelope(const ProblemSpec& p) {
    double nu0 = p.nu0();
    double mu_sup = p.diffusion.mu_sup();
    double n = static_cast<double>(p.grid.dim);
    AveragingEnvelope e;
    if (mu_sup <= 0.0) return e;  // constant coefficients: envelope is 0
    double root = std::sqrt(mu_sup);
    // High-frequency branch: 2 (1 + 1/(2 nu0)) sqrt(mu_sup) mu^{-1/2} e^{-mu1 mu^{-1/2}}.
    double kappa1 = 2.0 * (1.0 + 0.5 / nu0) * root;
    // Low-frequency branch: (1 + 1/(2 nu0)) n^2 mu_sup^{3/2} / (4 nu0^2)
    //                         * mu^{1/2} e^{mu2 mu^{1/2}}.
    double kappa2 = (1.0 + 0.5 / nu0) * n * n * mu_sup * root / (4.0 * nu0 * nu0);
    e.kappa_bar = std::max(kappa1, kappa2);
    e.mu1 = root;
    e.mu2 = n * root / nu0;
    return e;
}

double averaging_envelope(const ProblemSpec& p, double q) {
    if (!(q > 0.0)) throw std::domain_error("averaging_envelope: requires q > 0");
    AveragingEnvelope e = make_averaging_envelope(p);
    return e.from_mu(p.diffusion.mu(q));
}

double theta_gap(const ProblemSpec& p, double s, double t, const SpectralField& u) {
    if (!(t > s)) throw std::domain_error("theta_gap: requires t > s");
    SpectralField osc = apply_propagator(p, s, t, u);
    SpectralField avg = apply_averaged_semigroup(p, t - s, u);
    return distance_h1(osc, avg);
}

double smoothing_constant(double nu0) {
    // (1 + xi^2) e^{-2 nu0 xi^2 d} <= M^2 (1 + d^{-1/2})^2 for all xi, d > 0:
    // with a := 1/(nu0 d), sup_z (1 + a z) e^{-2z} equals 1 for a <= 2 and
    // (a/2) e^{2/a - 1} otherwise; maximize the ratio over d on a log grid.
    double m2 = 1.0;  // d -> infinity limit
    for (int i = -400; i <= 400; ++i) {
        double d = std::pow(10.0, i / 20.0);
        double a = 1.0 / (nu0 * d);
        double sup = a <= 2.0 ? 1.0 : 0.5 * a * std::exp(2.0 / a - 1.0);
        double denom = 1.0 + 1.0 / std::sqrt(d);
        m2 = std::max(m2, sup / (denom * denom));
    }
    // grid-resolution safety margin so the bound holds between grid points
    return std::sqrt(m2 * 1.001);
}

}  // namespace rdavg
