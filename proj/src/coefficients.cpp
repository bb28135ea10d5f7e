#include "rdavg/coefficients.hpp"

#include <algorithm>
#include <cmath>

namespace rdavg {

void QuasiPeriodicScalar::validate() const {
    for (const auto& t : terms)
        if (!(t.frequency > 0.0))
            throw config_error(
                "coefficient: oscillation frequencies must be positive; fold "
                "zero-frequency terms into the mean");
}

double QuasiPeriodicScalar::value(double tau) const {
    double v = mean;
    for (const auto& t : terms)
        v += t.amplitude * std::cos(t.frequency * tau + t.phase);
    return v;
}

double QuasiPeriodicScalar::sup_bound() const {
    return std::abs(mean) + amplitude_sum();
}

double QuasiPeriodicScalar::inf_bound() const { return mean - amplitude_sum(); }

double QuasiPeriodicScalar::amplitude_sum() const {
    double s = 0.0;
    for (const auto& t : terms) s += std::abs(t.amplitude);
    return s;
}

double mean_value(const QuasiPeriodicScalar& q) {
    q.validate();
    return q.mean;
}

double primitive(const QuasiPeriodicScalar& q, double s, double t, double omega) {
    double v = q.mean * (t - s);
    for (const auto& term : q.terms) {
        double w = term.frequency * omega;
        v += term.amplitude / w *
             (std::sin(w * t + term.phase) - std::sin(w * s + term.phase));
    }
    return v;
}

double mu_bound(const QuasiPeriodicScalar& q, double T) {
    if (!(T > 0.0)) throw std::domain_error("mu_bound: window must be positive");
    double coarse = q.amplitude_sum();
    double fine = 0.0;
    for (const auto& term : q.terms)
        fine += 2.0 * std::abs(term.amplitude) / (term.frequency * T);
    return std::min(coarse, fine);
}

QuasiPeriodicScalar translate(const QuasiPeriodicScalar& q, double omega, double h) {
    QuasiPeriodicScalar out = q;
    for (auto& t : out.terms) t.phase += t.frequency * omega * h;
    return out;
}

void QuasiPeriodicMatrix::validate() const {
    if (dim != 1 && dim != 2)
        throw config_error("diffusion matrix: dim must be 1 or 2");
    std::size_t expected = dim == 1 ? 1 : 3;
    if (entries.size() != expected)
        throw config_error("diffusion matrix: expected " + std::to_string(expected) +
                           " stored entries, got " + std::to_string(entries.size()));
    for (const auto& e : entries) e.validate();
    if (!(nu0_certified() > 0.0))
        throw config_error(
            "diffusion matrix: cannot certify ellipticity (mean eigenvalue "
            "minus oscillation slack is not positive)");
}

const QuasiPeriodicScalar& QuasiPeriodicMatrix::entry(int i, int j) const {
    if (dim == 1) return entries[0];
    int a = std::min(i, j), b = std::max(i, j);
    // (0,0) -> 0, (0,1) -> 1, (1,1) -> 2
    return entries[a == 0 ? (b == 0 ? 0 : 1) : 2];
}

double QuasiPeriodicMatrix::value(int i, int j, double tau) const {
    return entry(i, j).value(tau);
}

double QuasiPeriodicMatrix::mean_eigen_bound(bool largest) const {
    if (dim == 1) return entries[0].mean;
    double a = entries[0].mean, b = entries[1].mean, c = entries[2].mean;
    double half_trace = 0.5 * (a + c);
    double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    return largest ? half_trace + disc : half_trace - disc;
}

double QuasiPeriodicMatrix::deviation_slack() const {
    // Frobenius bound over all ordered entries dominates the spectral norm of
    // the deviation matrix at every tau.
    if (dim == 1) return entries[0].amplitude_sum();
    double d0 = entries[0].amplitude_sum();
    double d1 = entries[1].amplitude_sum();
    double d2 = entries[2].amplitude_sum();
    return std::sqrt(d0 * d0 + 2.0 * d1 * d1 + d2 * d2);
}

double QuasiPeriodicMatrix::nu0_certified() const {
    return mean_eigen_bound(false) - deviation_slack();
}

double QuasiPeriodicMatrix::nu1_certified() const {
    return mean_eigen_bound(true) + deviation_slack();
}

double QuasiPeriodicMatrix::mu(double T) const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, mu_bound(e, T));
    return m;
}

double QuasiPeriodicMatrix::mu_sup() const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, e.amplitude_sum());
    return m;
}

QuasiPeriodicMatrix QuasiPeriodicMatrix::mean_matrix() const {
    QuasiPeriodicMatrix out;
    out.dim = dim;
    for (const auto& e : entries) {
        QuasiPeriodicScalar m;
        m.mean = e.mean;
        out.entries.push_back(m);
    }
    return out;
}

QuasiPeriodicMatrix translate(const QuasiPeriodicMatrix& a, double omega, double h) {
    QuasiPeriodicMatrix out = a;
    for (auto& e : out.entries) e = translate(e, omega, h);
    return out;
}

void NonlinearitySpec::validate() const {
    b.validate();
    if (!(b_min_certified() > 0.0))
        throw config_error("reaction: cannot certify b(tau) > 0 (mean minus "
                           "oscillation amplitudes is not positive)");
    if (!(lipschitz_cap > 0.0))
        throw config_error("reaction: lipschitz_cap must be positive");
}

void ForcingSpec::validate() const {
    if (!(profile_a.grid() == profile_b.grid()))
        throw config_error("forcing: profiles live on different grids");
    if (!(frequency > 0.0))
        throw config_error("forcing: frequency must be positive");
}

SpectralField ForcingSpec::value(double tau) const {
    SpectralField g = profile_a;
    g.axpy(std::cos(frequency * tau + phase), profile_b);
    return g;
}

double ForcingSpec::bound_cg() const {
    return norm_l2(profile_a) + norm_l2(profile_b);
}

std::vector<double> ForcingSpec::holder_modulus() const {
    std::vector<double> phys = to_physical(profile_b);
    for (auto& v : phys) v = std::abs(v) * frequency;
    return phys;
}

ForcingSpec translate(const ForcingSpec& g, double omega, double h) {
    ForcingSpec out = g;
    out.phase += g.frequency * omega * h;
    return out;
}

void ProblemSpec::validate() const {
    grid.validate();
    diffusion.validate();
    if (diffusion.dim != grid.dim)
        throw config_error("problem: diffusion matrix dim does not match grid dim");
    damping.validate();
    if (!(lambda0_certified() > 0.0))
        throw config_error("problem: cannot certify damping a0(tau) >= lambda0 > 0");
    reaction.validate();
    forcing.validate();
    if (!(forcing.profile_a.grid() == grid))
        throw config_error("problem: forcing profiles are not on the problem grid");
    if (!(omega > 0.0)) throw config_error("problem: omega must be positive");
}

double ProblemSpec::max_frequency() const {
    double m = 0.0;
    auto scan = [&m](const QuasiPeriodicScalar& q) {
        for (const auto& t : q.terms) m = std::max(m, t.frequency);
    };
    for (const auto& e : diffusion.entries) scan(e);
    scan(damping);
    scan(reaction.b);
    if (norm_l2(forcing.profile_b) > 0.0) m = std::max(m, forcing.frequency);
    return m;
}

bool ProblemSpec::has_oscillation() const { return max_frequency() > 0.0; }

ProblemSpec translate(const ProblemSpec& p, double h) {
    ProblemSpec out = p;
    out.diffusion = translate(p.diffusion, p.omega, h);
    out.damping = translate(p.damping, p.omega, h);
    out.reaction.b = translate(p.reaction.b, p.omega, h);
    out.forcing = translate(p.forcing, p.omega, h);
    out.hull_shift = p.hull_shift + h;
    return out;
}

ProblemSpec averaged_problem(const ProblemSpec& p) {
    ProblemSpec out = p;
    out.diffusion = p.diffusion.mean_matrix();
    out.damping.terms.clear();
    out.reaction.b.terms.clear();
    out.forcing.profile_b *= 0.0;
    out.forcing.phase = 0.0;
    out.hull_shift = 0.0;
    return out;
}

}  // namespace rdavg
