#ifndef RDAVG_DYNAMICS_HPP
#define RDAVG_DYNAMICS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rdavg/coefficients.hpp"
#include "rdavg/propagator.hpp"
#include "rdavg/spectral.hpp"

namespace rdavg {

/// Time stepping parameters for the integrating-factor scheme (the full
/// linear symbol, diffusion plus damping, is applied exactly; the reaction
/// and forcing are quadratured at the configured order).
struct SchemeConfig {
    double h_max = 0.02;
    double c_osc = 0.2;   // step <= c_osc / (omega * max coefficient frequency)
    int order = 2;        // 1: exponential Euler, 2: exponential midpoint
    int sample_every = 5;
    double tail_radius = 10.0;

    void validate() const;
};

/// Actual step: min(h_max, c_osc / (omega * max_frequency)).
double step_size(const ProblemSpec& p, const SchemeConfig& scheme);

struct TrajectorySample {
    double time = 0.0;
    SpectralField state;
    double l2 = 0.0;
    double h1 = 0.0;
    double tail = 0.0;
};

struct Trajectory {
    ProblemSpec spec;
    SchemeConfig scheme;
    std::vector<TrajectorySample> samples;

    const TrajectorySample& front() const { return samples.front(); }
    const TrajectorySample& back() const { return samples.back(); }
    /// State at a given time, linear interpolation between samples.
    SpectralField state_at(double t) const;
};

/// Reaction operator -b(tau) u^3 evaluated pseudospectrally; the product is
/// dealiased on output. averaged = true uses the mean of b.
SpectralField nemitski(const ProblemSpec& p, double tau, const SpectralField& u,
                       bool averaged = false);

/// Certified constant for |nemitski(u)|_{L2} <= C (|u|_{L2} + |u|_{H1}^3),
/// from the sup of b and the grid's embedding sum.
double nemitski_bound_constant(const ProblemSpec& p);

/// One step of size h from (t, u); averaged = true integrates the mean-field
/// problem instead.
SpectralField step(const ProblemSpec& p, const SchemeConfig& scheme, double t,
                   const SpectralField& u, double h, bool averaged = false);

/// Integrate from s to t_end, sampling every scheme.sample_every steps (plus
/// the initial and final states). The initial state is dealiased on entry.
/// Throws blowup_error if the state leaves the finite range.
Trajectory evolve(const ProblemSpec& p, const SchemeConfig& scheme, double s,
                  double t_end, const SpectralField& u_s, bool averaged = false);

/// Step count evolve() would use for this interval.
long recommended_steps(const ProblemSpec& p, const SchemeConfig& scheme, double s,
                       double t_end);

/// evolve with an explicit uniform step count; lets two runs share their
/// sample times exactly.
Trajectory evolve_fixed_steps(const ProblemSpec& p, const SchemeConfig& scheme,
                              double s, double t_end, const SpectralField& u_s,
                              long n_steps, int sample_every,
                              bool averaged = false);

/// Dissipative constants computed from the certified hypothesis bounds; the
/// trajectory checks in the verifier compare against these.
struct DissipativeConstants {
    double lambda0 = 0.0;
    double nu0 = 0.0;
    double cg = 0.0;
    double l2_limit = 0.0;        // cg^2 / lambda0^2
    double grad_limit = 0.0;      // cg^2 / (lambda0 nu0)
    double absorbing_sq = 0.0;    // 2 * (l2_limit + grad_limit)
    double absorbing_radius = 0.0;

    /// Entry time into the absorbing ball for data of H1 norm at most R.
    double entry_time(double R) const;
    /// Entry time after which the relative tail must stay below eta_rel.
    double tail_time(double R, double eta_rel) const;
};

DissipativeConstants dissipative_constants(const ProblemSpec& p);

/// Self-convergence estimate: runs [s, t_end] at the scheme step and at half
/// the step, returns the Richardson error estimate
/// sup_t |u_h - u_{h/2}|_{H1} / (1 - 2^{-order}).
double self_convergence_error(const ProblemSpec& p, const SchemeConfig& scheme,
                              double s, double t_end, const SpectralField& u_s,
                              bool averaged = false);

/// Columnar diagnostics (time, l2, h1, tail) with '#'-prefixed header lines.
void write_trajectory_diagnostics(const Trajectory& traj, std::ostream& out);

/// Little-endian state snapshot: magic "RDAVGF01", u32 dim, u32 modes,
/// f64 half_width, f64 dealias_fraction, u64 count, then count pairs of
/// f64 (re, im) in row-major mode order.
void write_field_snapshot(const SpectralField& f, const std::string& path);
SpectralField read_field_snapshot(const std::string& path);

}  // namespace rdavg

#endif
