#include "rdavg/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <ostream>

namespace rdavg {

void SchemeConfig::validate() const {
    if (!(h_max > 0.0)) throw config_error("scheme: h_max must be positive");
    if (!(c_osc > 0.0) || c_osc > 1.0)
        throw config_error("scheme: c_osc must lie in (0, 1]");
    if (order != 1 && order != 2)
        throw config_error("scheme: order must be 1 or 2");
    if (sample_every < 1) throw config_error("scheme: sample_every must be >= 1");
    if (!(tail_radius > 0.0)) throw config_error("scheme: tail_radius must be positive");
}

double step_size(const ProblemSpec& p, const SchemeConfig& scheme) {
    double h = scheme.h_max;
    double fmax = p.max_frequency();
    if (fmax > 0.0) h = std::min(h, scheme.c_osc / (p.omega * fmax));
    return h;
}

SpectralField Trajectory::state_at(double t) const {
    if (samples.empty()) throw numerical_error("trajectory: no samples");
    if (t <= samples.front().time) return samples.front().state;
    if (t >= samples.back().time) return samples.back().state;
    auto it = std::lower_bound(samples.begin(), samples.end(), t,
                               [](const TrajectorySample& s, double v) {
                                   return s.time < v;
                               });
    const TrajectorySample& hi = *it;
    const TrajectorySample& lo = *(it - 1);
    double w = (t - lo.time) / (hi.time - lo.time);
    SpectralField out = lo.state;
    out *= 1.0 - w;
    out.axpy(w, hi.state);
    return out;
}

SpectralField nemitski(const ProblemSpec& p, double tau, const SpectralField& u,
                       bool averaged) {
    if (!u.finite())
        throw blowup_error(tau / p.omega, "nemitski: non-finite state");
    double b = averaged ? p.reaction.b.mean : p.reaction.b.value(tau);
    std::vector<double> phys = to_physical(u);
    for (auto& v : phys) v = -b * v * v * v;
    SpectralField out = to_spectral(phys, u.grid());
    apply_dealias_mask(out);
    return out;
}

double nemitski_bound_constant(const ProblemSpec& p) {
    // |u|_inf <= sqrt(S / (2l)^dim) |u|_{H1} with S = sum_k 1/(1 + |xi_k|^2),
    // hence |b u^3|_{L2} <= b_sup * (S / (2l)^dim) * |u|_{H1}^2 |u|_{L2}.
    double s = 0.0;
    for (std::size_t i = 0; i < p.grid.mode_count(); ++i)
        s += 1.0 / (1.0 + p.grid.xi_squared(i));
    return p.reaction.b_max() * s / p.grid.box_volume();
}

namespace {

// Exponent of the full linear symbol (diffusion quadratic form plus damping)
// over [t1, t2], exact per mode.
class LinearSymbol {
  public:
    LinearSymbol(const ProblemSpec& p) : p_(p) {}

    // multiplier[i] = exp(-(E_i(t1,t2) + \int a0)) applied in place
    void apply(double t1, double t2, SpectralField& u) const {
        double ia0 = primitive(p_.damping, t1, t2, p_.omega);
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] *= std::exp(-(propagator_exponent(p_, t1, t2, i) + ia0));
    }

  private:
    const ProblemSpec& p_;
};

SpectralField reaction_plus_forcing(const ProblemSpec& p, double t,
                                    const SpectralField& u) {
    SpectralField n = nemitski(p, p.omega * t, u);
    n += p.forcing.value(p.omega * t);
    return n;
}

SpectralField step_impl(const ProblemSpec& p, const SchemeConfig& scheme, double t,
                        const SpectralField& u, double h) {
    LinearSymbol sym(p);
    if (scheme.order == 1) {
        SpectralField out = u;
        out.axpy(h, reaction_plus_forcing(p, t, u));
        sym.apply(t, t + h, out);
        return out;
    }
    // exponential midpoint: predict the half step, then midpoint quadrature
    double tm = t + 0.5 * h;
    SpectralField n0 = reaction_plus_forcing(p, t, u);
    SpectralField half = u;
    half.axpy(0.5 * h, n0);
    sym.apply(t, tm, half);
    SpectralField nm = reaction_plus_forcing(p, tm, half);
    sym.apply(tm, t + h, nm);
    SpectralField out = u;
    sym.apply(t, t + h, out);
    out.axpy(h, nm);
    return out;
}

TrajectorySample make_sample(const SchemeConfig& scheme, double t,
                             const SpectralField& u) {
    TrajectorySample s;
    s.time = t;
    s.state = u;
    s.l2 = norm_l2(u);
    s.h1 = norm_h1(u);
    s.tail = scheme.tail_radius < u.grid().half_width
                 ? tail_mass(u, scheme.tail_radius)
                 : 0.0;
    return s;
}

Trajectory evolve_n(const ProblemSpec& p, const SchemeConfig& scheme, double s,
                    double t_end, const SpectralField& u_s, long n_steps,
                    int sample_every) {
    Trajectory traj;
    traj.spec = p;
    traj.scheme = scheme;
    SpectralField u = u_s;
    apply_dealias_mask(u);
    traj.samples.push_back(make_sample(scheme, s, u));
    if (n_steps == 0) return traj;
    double h = (t_end - s) / static_cast<double>(n_steps);
    for (long n = 0; n < n_steps; ++n) {
        double t = s + h * static_cast<double>(n);
        u = step_impl(p, scheme, t, u, h);
        if (!u.finite())
            throw blowup_error(t + h, "integrator blow-up at t = " +
                                          std::to_string(t + h));
        if ((n + 1) % sample_every == 0 || n + 1 == n_steps)
            traj.samples.push_back(make_sample(scheme, s + h * (n + 1), u));
    }
    return traj;
}

long steps_for(const ProblemSpec& p, const SchemeConfig& scheme, double s,
               double t_end) {
    if (t_end == s) return 0;
    double h = step_size(p, scheme);
    return std::max<long>(1, static_cast<long>(std::ceil((t_end - s) / h - 1e-9)));
}

}  // namespace

SpectralField step(const ProblemSpec& p, const SchemeConfig& scheme, double t,
                   const SpectralField& u, double h, bool averaged) {
    scheme.validate();
    if (!(h > 0.0)) throw std::domain_error("step: h must be positive");
    if (averaged) return step_impl(averaged_problem(p), scheme, t, u, h);
    return step_impl(p, scheme, t, u, h);
}

Trajectory evolve(const ProblemSpec& p, const SchemeConfig& scheme, double s,
                  double t_end, const SpectralField& u_s, bool averaged) {
    scheme.validate();
    if (t_end < s) throw std::domain_error("evolve: requires t_end >= s");
    if (!(u_s.grid() == p.grid)) throw config_error("evolve: field grid mismatch");
    const ProblemSpec work = averaged ? averaged_problem(p) : p;
    return evolve_n(work, scheme, s, t_end, u_s, steps_for(work, scheme, s, t_end),
                    scheme.sample_every);
}

long recommended_steps(const ProblemSpec& p, const SchemeConfig& scheme, double s,
                       double t_end) {
    return steps_for(p, scheme, s, t_end);
}

Trajectory evolve_fixed_steps(const ProblemSpec& p, const SchemeConfig& scheme,
                              double s, double t_end, const SpectralField& u_s,
                              long n_steps, int sample_every, bool averaged) {
    scheme.validate();
    if (t_end < s) throw std::domain_error("evolve: requires t_end >= s");
    if (!(u_s.grid() == p.grid)) throw config_error("evolve: field grid mismatch");
    const ProblemSpec work = averaged ? averaged_problem(p) : p;
    return evolve_n(work, scheme, s, t_end, u_s, n_steps, sample_every);
}

double DissipativeConstants::entry_time(double R) const {
    double limit = l2_limit + grad_limit;
    double ratio = 2.0 * R * R / std::max(limit, 1e-12);
    return ratio <= 1.0 ? 0.0 : std::log(ratio) / lambda0;
}

double DissipativeConstants::tail_time(double R, double eta_rel) const {
    // assumes the late-time signal keeps at least 1% of the forced L2 limit
    double signal_sq = std::max(0.01 * l2_limit, 1e-12);
    double eta_abs = eta_rel * signal_sq;
    return entry_time(R) +
           std::log(std::max(absorbing_sq / eta_abs, 1.0)) / lambda0;
}

DissipativeConstants dissipative_constants(const ProblemSpec& p) {
    DissipativeConstants d;
    d.lambda0 = p.lambda0_certified();
    d.nu0 = p.nu0();
    d.cg = p.cg();
    d.l2_limit = d.cg * d.cg / (d.lambda0 * d.lambda0);
    d.grad_limit = d.cg * d.cg / (d.lambda0 * d.nu0);
    d.absorbing_sq = 2.0 * (d.l2_limit + d.grad_limit) + 1e-10;
    d.absorbing_radius = std::sqrt(d.absorbing_sq);
    return d;
}

double self_convergence_error(const ProblemSpec& p, const SchemeConfig& scheme,
                              double s, double t_end, const SpectralField& u_s,
                              bool averaged) {
    scheme.validate();
    const ProblemSpec work = averaged ? averaged_problem(p) : p;
    long n = steps_for(work, scheme, s, t_end);
    if (n == 0) return 0.0;
    SpectralField u0 = u_s;
    apply_dealias_mask(u0);
    Trajectory coarse = evolve_n(work, scheme, s, t_end, u0, n, scheme.sample_every);
    Trajectory fine =
        evolve_n(work, scheme, s, t_end, u0, 2 * n, 2 * scheme.sample_every);
    double sup = 0.0;
    for (std::size_t i = 0; i < coarse.samples.size(); ++i)
        sup = std::max(sup, distance_h1(coarse.samples[i].state,
                                        fine.samples[i].state));
    return sup / (1.0 - std::pow(2.0, -scheme.order));
}

void write_trajectory_diagnostics(const Trajectory& traj, std::ostream& out) {
    char line[256];
    out << "# time l2 h1 tail\n";
    for (const auto& s : traj.samples) {
        std::snprintf(line, sizeof line, "%.17g %.17g %.17g %.17g\n", s.time, s.l2,
                      s.h1, s.tail);
        out << line;
    }
}

namespace {
constexpr char kSnapshotMagic[8] = {'R', 'D', 'A', 'V', 'G', 'F', '0', '1'};

template <typename T>
void write_raw(std::ofstream& out, T v) {
    static_assert(std::endian::native == std::endian::little,
                  "snapshot format is little-endian");
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T read_raw(std::ifstream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}
}  // namespace

void write_field_snapshot(const SpectralField& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open snapshot for writing: " + path);
    out.write(kSnapshotMagic, sizeof kSnapshotMagic);
    write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(f.grid().dim));
    write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(f.grid().modes_per_axis));
    write_raw<double>(out, f.grid().half_width);
    write_raw<double>(out, f.grid().dealias_fraction);
    write_raw<std::uint64_t>(out, static_cast<std::uint64_t>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) {
        write_raw<double>(out, f[i].real());
        write_raw<double>(out, f[i].imag());
    }
    if (!out) throw io_error("short write on snapshot: " + path);
}

SpectralField read_field_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open snapshot: " + path);
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kSnapshotMagic, sizeof magic) != 0)
        throw io_error("bad snapshot magic in " + path);
    GridSpec g;
    g.dim = static_cast<int>(read_raw<std::uint32_t>(in));
    g.modes_per_axis = static_cast<int>(read_raw<std::uint32_t>(in));
    g.half_width = read_raw<double>(in);
    g.dealias_fraction = read_raw<double>(in);
    std::uint64_t count = read_raw<std::uint64_t>(in);
    g.validate();
    if (count != g.mode_count()) throw io_error("snapshot size mismatch in " + path);
    SpectralField f(g);
    for (std::uint64_t i = 0; i < count; ++i) {
        double re = read_raw<double>(in);
        double im = read_raw<double>(in);
        f[i] = {re, im};
    }
    if (!in) throw io_error("short read on snapshot: " + path);
    return f;
}

}  // namespace rdavg
