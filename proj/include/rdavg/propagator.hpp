#ifndef RDAVG_PROPAGATOR_HPP
#define RDAVG_PROPAGATOR_HPP

#include "rdavg/coefficients.hpp"
#include "rdavg/spectral.hpp"

namespace rdavg {

/// Per-mode exponent of the oscillatory linear flow over [s, t]:
///   E_k(s,t) = sum_ij (\int_s^t a_ij(omega p) dp) xi_i xi_j,
/// evaluated from exact primitives, so the two-parameter laws
/// (identity, composition) hold to rounding.
double propagator_exponent(const ProblemSpec& p, double s, double t,
                           std::size_t flat_index);

/// Linear solution operator: c_k <- exp(-E_k(s,t)) c_k. Requires t >= s and a
/// field on the problem grid; t == s returns the input unchanged.
SpectralField apply_propagator(const ProblemSpec& p, double s, double t,
                               const SpectralField& u);

/// Semigroup of the mean diffusion matrix over a duration dt >= 0.
SpectralField apply_averaged_semigroup(const ProblemSpec& p, double dt,
                                       const SpectralField& u);

/// Upper envelope for the H1 distance of two linear flows whose diffusion
/// coefficients differ by at most q in the sup norm, acting on L2 data:
///   |(V1 - V2) u|_{H1} <= (1 + (t-s)^{-1/2}) * difference_envelope_l2(q, nu0) * |u|_{L2}.
/// Valid for 0 < q <= 8 nu0^3 (throws std::domain_error otherwise).
double difference_envelope_l2(double q, double nu0);

/// Same comparison for H1 data, without the short-time singular factor:
///   |(V1 - V2) u|_{H1} <= difference_envelope_h1(q, nu0) * |u|_{H1}.
double difference_envelope_h1(double q, double nu0);

/// Envelope constants for the oscillatory-vs-averaged linear comparison;
/// derived once from nu0, mu_sup and the dimension by following the two-term
/// high/low frequency split with cutoff k = (1/(2 nu0)) sqrt(mu_sup / mu).
struct AveragingEnvelope {
    double kappa_bar = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;

    /// theta value for a given window-average deviation mu in [0, mu_sup].
    double from_mu(double mu) const;
};

AveragingEnvelope make_averaging_envelope(const ProblemSpec& p);

/// theta(q) with q = omega * (t - s); uses the problem's own mu envelope. The
/// guaranteed bound is
///   |U(t,s)u - e^{-A_mean (t-s)} u|_{H1} <= (1 + (t-s)^{-1/2}) theta(omega (t-s)) |u|_{L2}.
double averaging_envelope(const ProblemSpec& p, double q);

/// Measured H1 gap between the oscillatory flow and the averaged semigroup on
/// one field. Requires t > s.
double theta_gap(const ProblemSpec& p, double s, double t, const SpectralField& u);

/// Smallest M with |U(t,s)u|_{H1} <= M (1 + (t-s)^{-1/2}) |u|_{L2} certified
/// from the multiplier form; depends only on nu0.
double smoothing_constant(double nu0);

}  // namespace rdavg

#endif
