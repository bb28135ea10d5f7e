#ifndef RDAVG_AVERAGING_HPP
#define RDAVG_AVERAGING_HPP

#include <array>
#include <string>
#include <vector>

#include "rdavg/dynamics.hpp"

namespace rdavg {

/// Measured oscillatory-vs-averaged gap as a function of the oscillation
/// rate, at fixed data and window.
struct GapCurve {
    std::vector<double> omegas;
    std::vector<double> gaps;
    double delta = 0.1;
    double window = 2.0;
    double start = 0.0;
    std::string metric;
};

/// True when the sequence never rises by more than the relative band,
/// v[i+1] <= (1 + band) * v[i].
bool nonincreasing_within_band(const std::vector<double>& v, double band);

/// sup over t in [s+delta, s+T] of the linear gap |U(t,s)u - e^{-A(t-s)}u|_{H1},
/// one value per omega. The time grid resolves the coefficient oscillation
/// (at least 8 samples per period, at least min_time_samples overall).
GapCurve linear_gap_curve(const ProblemSpec& base, const SpectralField& u, double s,
                          double delta, double T, const std::vector<double>& omegas,
                          int min_time_samples = 64);

struct EnvelopeCheck {
    double worst_ratio = 0.0;  // max measured / bound
    std::size_t violations = 0;
    std::size_t checked = 0;
};

/// Pointwise comparison of the measured linear gap against
/// (1 + (t-s)^{-1/2}) theta(omega (t-s)) |u|_{L2} over the same grid.
EnvelopeCheck linear_envelope_check(const ProblemSpec& base, const SpectralField& u,
                                    double s, double delta, double T,
                                    const std::vector<double>& omegas,
                                    int min_time_samples = 64);

/// Linear gap measured at the oscillation time scale t - s = 1/omega for a
/// rough (L2-only) datum; stays bounded away from zero as omega grows.
std::vector<double> initial_layer_gaps(const ProblemSpec& base,
                                       const SpectralField& rough, double s,
                                       const std::vector<double>& omegas);

/// Oscillatory forcing integrals against the averaged diffusion semigroup:
///   curve 0: deviation of the damping coefficient acting on v,
///   curve 1: deviation of the reaction term at v,
///   curve 2: deviation of the forcing,
/// each integrated over [s, t] with composite Gauss quadrature resolving the
/// oscillation, reported as H1 norms over a time grid.
struct GFunctionals {
    std::vector<double> times;
    std::array<std::vector<double>, 3> h1;
    std::array<double, 3> sup{0.0, 0.0, 0.0};
};

GFunctionals g_functionals(const ProblemSpec& base, double omega, double s, double T,
                           const SpectralField& v, int time_samples = 64,
                           int panels_per_period = 8);
GFunctionals g_functionals(const ProblemSpec& base, double omega, double s, double T,
                           const Trajectory& v, int time_samples = 64,
                           int panels_per_period = 8);

/// sup_t H1 defect between the direct quadrature of the forcing integral and
/// its boundary-plus-generator form (the two routes agree to quadrature
/// accuracy).
double g3_integration_by_parts_defect(const ProblemSpec& base, double omega,
                                      double s, double T, int time_samples = 64,
                                      int panels_per_period = 8);

struct WindowAverageCheck {
    double measured = 0.0;
    double bound = 0.0;
};

/// Window average of the reaction deviation,
///   |(1/T) \int_s^{s+T} (f(omega q, u) - f_mean(u)) dq|_{L2},
/// against its certified envelope K * mu_b(omega T) * (|u|_{L2} + |u|_{H1}^3).
WindowAverageCheck reaction_window_average_check(const ProblemSpec& base,
                                                 double omega,
                                                 const SpectralField& u, double s,
                                                 double T,
                                                 int panels_per_period = 8);

/// Nonlinear trajectory gap sup_{t in [s+delta, s+T]} |u_omega(t) - u_mean(t)|_{H1}
/// per omega, both runs on the oscillatory step grid. scheme_err is the
/// Richardson self-convergence estimate (oscillatory plus averaged run);
/// adjusted = max(raw - scheme_err, 1e-14). delta0 is the same sup taken from
/// t > s.
struct TrajectoryGapCurve {
    std::vector<double> omegas;
    std::vector<double> raw;
    std::vector<double> scheme_err;
    std::vector<double> adjusted;
    std::vector<double> delta0;
    double delta = 0.1;
    double window = 2.0;
};

TrajectoryGapCurve trajectory_gap_curve(const ProblemSpec& base,
                                        const SpectralField& u_s, double s,
                                        double delta, double T,
                                        const std::vector<double>& omegas,
                                        const SchemeConfig& scheme);

/// Columnar export: omega, gap[, extra columns]; '#' header.
void write_gap_curve(const GapCurve& curve, const std::string& path);
void write_trajectory_gap_curve(const TrajectoryGapCurve& curve,
                                const std::string& path);

}  // namespace rdavg

#endif
