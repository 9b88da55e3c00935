// environment.hpp
// Discretized harmonic bath: coupling density, decay rate, level shift.
// hbar = 1 throughout.

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qnoise/errors.hpp"

namespace qnoise {

enum class SpectrumShape { Flat, Gaussian, Lorentzian };

struct EnvironmentSpec {
    double omega0 = 1.0;           // qubit level splitting
    SpectrumShape shape = SpectrumShape::Flat;
    double center = 1.0;           // spectrum center
    double width = 1.0;            // typical width of the coupling-density curve
    double g0 = 1.0;               // peak coupling density (coupling^2 per unit frequency)
    int n_modes = 400;
    double omega_min = 0.0;
    double omega_max = 2.0;

    double coupling_density(double omega) const {
        switch (shape) {
            case SpectrumShape::Flat:
                return g0;
            case SpectrumShape::Gaussian: {
                const double x = (omega - center) / width;
                return g0 * std::exp(-0.5 * x * x);
            }
            case SpectrumShape::Lorentzian: {
                const double x = (omega - center) / width;
                return g0 / (1.0 + x * x);
            }
        }
        return 0.0;
    }

    void validate() const {
        if (!(omega_min < omega0 && omega0 < omega_max))
            throw config_error("EnvironmentSpec: resonance outside grid");
        if (n_modes < 2) throw config_error("EnvironmentSpec: n_modes < 2");
        if (width <= 0.0) throw config_error("EnvironmentSpec: width <= 0");
    }

    // Flat bath tuned to a target decay rate: g = gamma/(2 pi) on
    // [omega0 - half_window, omega0 + half_window]
    static EnvironmentSpec flat_for_gamma(double gamma, double omega0,
                                          double half_window, int n_modes) {
        if (gamma <= 0.0) throw config_error("flat_for_gamma: gamma <= 0");
        EnvironmentSpec spec;
        spec.omega0 = omega0;
        spec.shape = SpectrumShape::Flat;
        spec.center = omega0;
        spec.width = 2.0 * half_window;
        spec.g0 = gamma / (2.0 * std::numbers::pi);
        spec.n_modes = n_modes;
        spec.omega_min = omega0 - half_window;
        spec.omega_max = omega0 + half_window;
        return spec;
    }
};

struct EnvironmentModel {
    double omega0 = 0.0;
    std::vector<double> mode_freqs;     // omega_f, midpoint grid
    std::vector<double> couplings;      // lambda_f (real, >= 0)
    double gamma = 0.0;                 // 2 pi g(omega0)
    double delta = 0.0;                 // principal-value level shift
    double sum_lambda_sq = 0.0;
    double max_detuning = 0.0;
    double bandwidth = 0.0;             // omega_max - omega_min

    int n_modes() const { return static_cast<int>(mode_freqs.size()); }
};

// Midpoint-rule discretization: lambda_f^2 = g(omega_f) * dw.  The decay rate
// comes from the continuum density, gamma = 2 pi g(omega0), so refining the
// grid leaves it unchanged.  The resonant bin (if one lands on omega0) is
// excluded from the principal-value shift sum.
inline EnvironmentModel discretize(const EnvironmentSpec& spec) {
    spec.validate();
    EnvironmentModel env;
    env.omega0 = spec.omega0;
    env.bandwidth = spec.omega_max - spec.omega_min;
    const double dw = env.bandwidth / spec.n_modes;
    env.mode_freqs.reserve(static_cast<std::size_t>(spec.n_modes));
    env.couplings.reserve(static_cast<std::size_t>(spec.n_modes));
    for (int j = 0; j < spec.n_modes; ++j) {
        const double w = spec.omega_min + (j + 0.5) * dw;
        const double lam_sq = spec.coupling_density(w) * dw;
        env.mode_freqs.push_back(w);
        env.couplings.push_back(std::sqrt(lam_sq));
        env.sum_lambda_sq += lam_sq;
        const double det = w - spec.omega0;
        env.max_detuning = std::max(env.max_detuning, std::abs(det));
        if (std::abs(det) > 0.25 * dw) env.delta += lam_sq / (spec.omega0 - w);
    }
    env.gamma = 2.0 * std::numbers::pi * spec.coupling_density(spec.omega0);
    return env;
}

} // namespace qnoise
