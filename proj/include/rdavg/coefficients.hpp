#ifndef RDAVG_COEFFICIENTS_HPP
#define RDAVG_COEFFICIENTS_HPP

#include <array>
#include <vector>

#include "rdavg/spectral.hpp"

namespace rdavg {

/// Finite trigonometric sum  value(tau) = mean + sum_m c_m cos(nu_m tau + phi_m)
/// with all frequencies nu_m > 0. Bounds, means, primitives and averaging
/// envelopes are exact closed forms.
struct QuasiPeriodicScalar {
    struct Term {
        double amplitude = 0.0;
        double frequency = 1.0;  // must be > 0
        double phase = 0.0;
    };

    double mean = 0.0;
    std::vector<Term> terms;

    void validate() const;

    double value(double tau) const;
    /// |mean| + sum |c_m|, a certified sup bound.
    double sup_bound() const;
    /// mean - sum |c_m|, a certified inf bound.
    double inf_bound() const;
    /// sum |c_m| (deviation-from-mean sup; also sup_T mu(T)).
    double amplitude_sum() const;
};

/// Constant-term extraction; rejects zero-frequency terms.
double mean_value(const QuasiPeriodicScalar& q);

/// Exact integral of q(omega * p) for p in [s, t].
double primitive(const QuasiPeriodicScalar& q, double s, double t, double omega);

/// Certified nonincreasing envelope for the window-average deviation,
///   sup_s |(1/T) \int_s^{s+T} (q(tau) - mean) dtau| <= mu_bound(q, T),
/// given by min(sum |c_m|, sum_m 2|c_m| / (nu_m T)).
double mu_bound(const QuasiPeriodicScalar& q, double T);

/// Phase shift by omega*h: result(tau) = q(tau + omega*h) exactly.
QuasiPeriodicScalar translate(const QuasiPeriodicScalar& q, double omega, double h);

/// Symmetric dim x dim matrix of quasi-periodic entries (upper triangle stored).
/// Construction certifies uniform ellipticity: the certified bounds
///   nu0 = lambda_min(mean matrix) - deviation slack,
///   nu1 = lambda_max(mean matrix) + deviation slack
/// hold for every tau, where the slack is the Frobenius bound
/// sqrt(sum_{ij} amplitude_sum(a_ij)^2) over all ordered entries.
struct QuasiPeriodicMatrix {
    int dim = 1;
    std::vector<QuasiPeriodicScalar> entries;  // (0,0) | (0,0),(0,1),(1,1)

    void validate() const;

    const QuasiPeriodicScalar& entry(int i, int j) const;
    double value(int i, int j, double tau) const;

    double nu0_certified() const;
    double nu1_certified() const;
    /// max over entries of mu_bound(entry, T); used with the dimension factor
    /// by the averaging envelopes.
    double mu(double T) const;
    double mu_sup() const;

    QuasiPeriodicMatrix mean_matrix() const;  // oscillation amplitudes dropped

  private:
    double mean_eigen_bound(bool largest) const;
    double deviation_slack() const;
};

QuasiPeriodicMatrix translate(const QuasiPeriodicMatrix& a, double omega, double h);

/// Cubic reaction term f(tau, u) = -b(tau) u^3 with b(tau) >= b_min > 0.
/// By construction f(tau, 0) = 0, f(tau,u)*u = -b u^4 <= 0 and
/// f_u = -3 b u^2 <= 0, so the one-sided derivative cap is 0.
struct NonlinearitySpec {
    QuasiPeriodicScalar b;
    double lipschitz_cap = 1.0;  // declared cap; f_u <= 0 <= cap

    static constexpr double growth_exponent = 2.0;  // cubic

    void validate() const;
    double b_min_certified() const { return b.inf_bound(); }
    double b_max() const { return b.sup_bound(); }
    /// Certified sup of max(f_u, 0); identically 0 for the cubic model.
    double fu_plus_sup() const { return 0.0; }
};

/// Forcing g(tau, x) = gA(x) + cos(freq*tau + phase) * gB(x); a one-parameter
/// family inside a two-dimensional affine set, uniformly bounded by
/// |gA|_{L2} + |gB|_{L2}.
struct ForcingSpec {
    SpectralField profile_a;
    SpectralField profile_b;
    double frequency = 1.0;
    double phase = 0.0;

    void validate() const;
    SpectralField value(double tau) const;
    SpectralField mean() const { return profile_a; }
    double bound_cg() const;
    /// Time-modulus profile |gB(x)| * frequency at grid points.
    std::vector<double> holder_modulus() const;
};

ForcingSpec translate(const ForcingSpec& g, double omega, double h);

/// One instance of the oscillatory problem: a point of the coefficient hull
/// (via hull_shift) plus the oscillation rate omega.
struct ProblemSpec {
    GridSpec grid;
    QuasiPeriodicMatrix diffusion;     // a_ij
    QuasiPeriodicScalar damping;       // a0, certified >= lambda0 > 0
    NonlinearitySpec reaction;
    ForcingSpec forcing;
    double hull_shift = 0.0;
    double omega = 1.0;

    /// Checks every hypothesis with certified bounds; throws config_error
    /// with a precise message otherwise.
    void validate() const;

    double lambda0_certified() const { return damping.inf_bound(); }
    double nu0() const { return diffusion.nu0_certified(); }
    double nu1() const { return diffusion.nu1_certified(); }
    double cg() const { return forcing.bound_cg(); }
    /// Largest oscillation frequency appearing in any coefficient (or 0 when
    /// every coefficient is constant); controls the step restriction.
    double max_frequency() const;
    bool has_oscillation() const;
};

/// Hull translate: phases advance by nu*omega*h in every coefficient and in
/// the forcing; hull_shift accumulates. Certified bounds are unchanged.
ProblemSpec translate(const ProblemSpec& p, double h);

/// Autonomous comparison problem: every coefficient replaced by its mean.
ProblemSpec averaged_problem(const ProblemSpec& p);

}  // namespace rdavg

#endif
