// trajectory.hpp
// Single-excitation amplitude dynamics in the interaction picture:
//   dc_i/dt = -i sum_f lambda_f e^{-i(w_f - w0) t} c_f
//   dc_f/dt = -i lambda_f e^{+i(w_f - w0) t} c_i
// integrated with a fixed-step classical 4th-order Runge-Kutta scheme.

#pragma once

#include <cmath>
#include <vector>

#include "qnoise/channel.hpp"
#include "qnoise/environment.hpp"

namespace qnoise {

struct AmplitudeTrajectory {
    std::vector<double> times;
    std::vector<cplx> c_i;           // interaction-picture qubit amplitude
    std::vector<Vec> c_f;            // per time step, n_modes mode amplitudes
    double omega0 = 0.0;
    double max_norm_drift = 0.0;

    std::size_t n_times() const { return times.size(); }

    double norm_sq(std::size_t idx) const {
        return std::norm(c_i[idx]) + c_f[idx].squaredNorm();
    }
};

namespace detail {
struct AmpState {
    cplx ci;
    Vec cf;
};

inline AmpState deriv(const EnvironmentModel& env, double t, const AmpState& y) {
    const int m = env.n_modes();
    AmpState d;
    d.cf = Vec(m);
    cplx acc = 0.0;
    for (int f = 0; f < m; ++f) {
        const double det = env.mode_freqs[static_cast<std::size_t>(f)] - env.omega0;
        const cplx ph(std::cos(det * t), std::sin(det * t));
        const double lam = env.couplings[static_cast<std::size_t>(f)];
        acc += lam * std::conj(ph) * y.cf(f);
        d.cf(f) = cplx(0, -1) * lam * ph * y.ci;
    }
    d.ci = cplx(0, -1) * acc;
    return d;
}
} // namespace detail

// Recommended step count: resolves the fastest detuning phase well enough
// to hold norm drift below 1e-8 over a few 1/gamma.
inline int default_steps(const EnvironmentModel& env, double t_max) {
    const double rate = std::max(env.max_detuning, 1.0e-6);
    return std::max(64, static_cast<int>(std::ceil(t_max * rate / 0.02)));
}

// store_stride > 1 keeps every k-th sample (plus the endpoint) to bound memory
inline AmplitudeTrajectory integrate(const EnvironmentModel& env, double t_max, int steps,
                                     int store_stride = 1) {
    if (t_max <= 0.0) throw config_error("integrate: t_max <= 0");
    if (steps < 1) throw config_error("integrate: steps < 1");
    if (store_stride < 1) throw config_error("integrate: store_stride < 1");
    const int m = env.n_modes();
    const double dt = t_max / steps;

    AmplitudeTrajectory traj;
    traj.omega0 = env.omega0;
    const std::size_t reserve = static_cast<std::size_t>(steps / store_stride) + 2;
    traj.times.reserve(reserve);
    traj.c_i.reserve(reserve);
    traj.c_f.reserve(reserve);

    detail::AmpState y{cplx(1.0, 0.0), Vec::Zero(m)};
    traj.times.push_back(0.0);
    traj.c_i.push_back(y.ci);
    traj.c_f.push_back(y.cf);

    for (int s = 0; s < steps; ++s) {
        const double t = s * dt;
        const auto k1 = detail::deriv(env, t, y);
        detail::AmpState y2{y.ci + 0.5 * dt * k1.ci, y.cf + 0.5 * dt * k1.cf};
        const auto k2 = detail::deriv(env, t + 0.5 * dt, y2);
        detail::AmpState y3{y.ci + 0.5 * dt * k2.ci, y.cf + 0.5 * dt * k2.cf};
        const auto k3 = detail::deriv(env, t + 0.5 * dt, y3);
        detail::AmpState y4{y.ci + dt * k3.ci, y.cf + dt * k3.cf};
        const auto k4 = detail::deriv(env, t + dt, y4);
        y.ci += dt / 6.0 * (k1.ci + 2.0 * k2.ci + 2.0 * k3.ci + k4.ci);
        y.cf += dt / 6.0 * (k1.cf + 2.0 * k2.cf + 2.0 * k3.cf + k4.cf);
        if ((s + 1) % store_stride == 0 || s + 1 == steps) {
            traj.times.push_back((s + 1) * dt);
            traj.c_i.push_back(y.ci);
            traj.c_f.push_back(y.cf);
        }
    }

    for (std::size_t idx = 0; idx < traj.n_times(); ++idx)
        traj.max_norm_drift = std::max(traj.max_norm_drift,
                                       std::abs(traj.norm_sq(idx) - 1.0));
    if (traj.max_norm_drift > 1e-6)
        throw diagnostic_error("integrate: step size too coarse (norm drift > 1e-6)");
    return traj;
}

// Relative environment states in the Schroedinger picture.  R1 and R2 live on
// the single-excitation sector, R0 and R3 on the vacuum; R2 = -R1.
struct RelativeStates {
    cplx r0_vacuum;
    cplx r3_vacuum;
    Vec r1_modes;   // r2 = -r1 componentwise
};

inline RelativeStates relative_states(const AmplitudeTrajectory& traj, std::size_t idx,
                                      const EnvironmentModel& env) {
    if (idx >= traj.n_times()) throw config_error("relative_states: bad index");
    const double t = traj.times[idx];
    const cplx rot(std::cos(env.omega0 * t), -std::sin(env.omega0 * t));
    const cplx ci_lab = traj.c_i[idx] * rot;
    RelativeStates r;
    r.r0_vacuum = 0.5 * (1.0 + ci_lab);
    r.r3_vacuum = 0.5 * (1.0 - ci_lab);
    const int m = env.n_modes();
    r.r1_modes = Vec(m);
    for (int f = 0; f < m; ++f) {
        const double wf = env.mode_freqs[static_cast<std::size_t>(f)];
        const cplx ph(std::cos(wf * t), -std::sin(wf * t));
        r.r1_modes(f) = 0.5 * traj.c_f[idx](f) * ph;
    }
    return r;
}

// Lab-frame amplitude-damping channel at the given trajectory sample
inline QubitChannel damping_channel(const AmplitudeTrajectory& traj, std::size_t idx) {
    if (idx >= traj.n_times()) throw config_error("damping_channel: bad index");
    const double t = traj.times[idx];
    const cplx rot(std::cos(traj.omega0 * t), -std::sin(traj.omega0 * t));
    return damping_channel_from_amplitude(traj.c_i[idx] * rot, t);
}

struct FidelityCurves {
    std::vector<double> f_par;
    std::vector<double> f_exp;
};

// Closed-form short-time and exponential-regime fidelities
inline FidelityCurves fidelity_curves(const EnvironmentModel& env,
                                      const std::vector<double>& times) {
    FidelityCurves out;
    out.f_par.reserve(times.size());
    out.f_exp.reserve(times.size());
    for (double t : times) {
        if (t < 0.0) throw config_error("fidelity_curves: negative time");
        out.f_par.push_back(std::max(0.0, 1.0 - 2.0 * t * t * env.sum_lambda_sq));
        out.f_exp.push_back(std::exp(-env.gamma * t));
    }
    return out;
}

} // namespace qnoise
