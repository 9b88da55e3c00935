// Shared random-state generators for the test suites (seeded, deterministic).

#pragma once

#include <random>

#include "qnoise/density.hpp"

namespace qnoise::testing {

inline StateVector random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(gauss(rng), gauss(rng));
    return StateVector::raw(n, v);
}

// Random full-rank mixed state via a Wishart-style construction
inline DensityOperator random_density(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::Index d = Eigen::Index{1} << n;
    Mat g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
    Mat m = g * g.adjoint();
    m /= m.trace().real();
    return DensityOperator(n, std::move(m));
}

// Least-squares slope of log(y) vs log(x): the fitted power law exponent
inline double fit_power(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace qnoise::testing
