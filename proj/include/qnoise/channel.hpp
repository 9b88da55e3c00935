// channel.hpp
// Single-qubit Kraus channels and their action on multi-qubit registers.

#pragma once

#include <cmath>
#include <vector>

#include "qnoise/density.hpp"

namespace qnoise {

struct QubitChannel {
    std::vector<Eigen::Matrix2cd> kraus_ops;
    double time = 0.0;

    bool is_trace_preserving(double tol = 1e-10) const {
        Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
        for (const auto& k : kraus_ops) sum += k.adjoint() * k;
        return (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= tol;
    }
};

inline QubitChannel identity_channel() {
    QubitChannel ch;
    ch.kraus_ops = {Eigen::Matrix2cd::Identity()};
    return ch;
}

// Kraus set {sqrt(1-p) I, sqrt(p) Z}: populations fixed, coherences scaled by 1-2p
inline QubitChannel dephasing_channel(double p) {
    if (p < 0.0 || p > 1.0) throw config_error("dephasing_channel: p out of range");
    QubitChannel ch;
    Eigen::Matrix2cd k0 = std::sqrt(1.0 - p) * Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
    k1(0, 0) = std::sqrt(p);
    k1(1, 1) = -std::sqrt(p);
    ch.kraus_ops = {k0, k1};
    return ch;
}

// K0 = diag(1, c), K1 = sqrt(1-|c|^2) |0><1|, with c the surviving
// excited-state amplitude (phase included by the caller when relevant)
inline QubitChannel damping_channel_from_amplitude(cplx c, double time = 0.0) {
    const double cc = std::norm(c);
    if (cc > 1.0 + 1e-10)
        throw diagnostic_error("damping channel: |c_i| exceeds 1");
    QubitChannel ch;
    ch.time = time;
    Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
    k0(0, 0) = 1.0;
    k0(1, 1) = c;
    Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
    k1(0, 1) = std::sqrt(std::max(0.0, 1.0 - cc));
    ch.kraus_ops = {k0, k1};
    return ch;
}

// Exponential-regime damping at decay rate gamma: |c_i|^2 = e^{-gamma t}
inline QubitChannel damping_channel_exponential(double gamma, double t) {
    return damping_channel_from_amplitude(std::exp(-0.5 * gamma * t), t);
}

namespace detail {
// Lift a 2x2 operator onto `qubit` of an n-qubit register (qubit 0 = MSB)
inline Mat lift_single(const Eigen::Matrix2cd& op, int n, int qubit) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const std::uint64_t mask = std::uint64_t{1} << (n - 1 - qubit);
    Mat out = Mat::Zero(dim, dim);
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(dim); ++j) {
        const int bj = (j & mask) ? 1 : 0;
        for (int bi = 0; bi < 2; ++bi) {
            const cplx v = op(bi, bj);
            if (v == cplx(0.0, 0.0)) continue;
            const std::uint64_t i = bi ? (j | mask) : (j & ~mask);
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        }
    }
    return out;
}
} // namespace detail

inline DensityOperator apply_channel(const DensityOperator& rho,
                                     const QubitChannel& ch, int qubit) {
    if (qubit < 0 || qubit >= rho.n_qubits)
        throw config_error("apply_channel: qubit out of range");
    Mat out = Mat::Zero(rho.dim(), rho.dim());
    for (const auto& k : ch.kraus_ops) {
        Mat kl = detail::lift_single(k, rho.n_qubits, qubit);
        out += kl * rho.matrix * kl.adjoint();
    }
    return DensityOperator(rho.n_qubits, std::move(out));
}

// Independent copies of the same channel, one per qubit
inline DensityOperator apply_channel_all(const DensityOperator& rho,
                                         const QubitChannel& ch) {
    DensityOperator out = rho;
    for (int q = 0; q < rho.n_qubits; ++q) out = apply_channel(out, ch, q);
    return out;
}

} // namespace qnoise
