// symmetrize.hpp
// Symmetric-subspace projection of R qubit copies, purity and fidelity
// accounting, and the repeated-projection (Zeno) success probability.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qnoise/density.hpp"

namespace qnoise {

struct SymmetricProjector {
    int r_copies = 1;
    Mat matrix;   // 2^R x 2^R, (1/R!) sum over copy permutations

    Eigen::Index dim() const { return matrix.rows(); }
};

// Average of all R! copy-permutation operators; rank is R+1 for qubits.
inline SymmetricProjector build_projector(int r) {
    if (r < 1 || r > 8) throw config_error("build_projector: r outside 1..8");
    const Eigen::Index dim = Eigen::Index{1} << r;
    Mat s = Mat::Zero(dim, dim);
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        // P_perm |b_0 ... b_{R-1}> = |b_{perm(0)} ... b_{perm(R-1)}>
        for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
            std::uint64_t pb = 0;
            for (int q = 0; q < r; ++q) {
                const int src = perm[static_cast<std::size_t>(q)];
                if ((b >> (r - 1 - src)) & 1u) pb |= std::uint64_t{1} << (r - 1 - q);
            }
            s(static_cast<Eigen::Index>(pb), static_cast<Eigen::Index>(b)) += 1.0;
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    s /= static_cast<double>(count);
    return SymmetricProjector{r, std::move(s)};
}

struct SymmetrizationOutcome {
    DensityOperator post_state;   // joint, renormalised
    double success_prob = 0.0;    // Tr(S rho S)
    DensityOperator single_copy;  // partial trace onto copy 0
};

inline SymmetrizationOutcome project(const DensityOperator& joint,
                                     const SymmetricProjector& s) {
    if (joint.dim() != s.dim()) throw config_error("project: dimension mismatch");
    Mat m = s.matrix * joint.matrix * s.matrix;
    const double prob = m.trace().real();
    if (prob < 1e-14)
        throw diagnostic_error("project: success probability below 1e-14");
    SymmetrizationOutcome out;
    out.success_prob = prob;
    out.post_state = DensityOperator(joint.n_qubits, m / prob);
    std::vector<int> keep;
    const int per_copy = joint.n_qubits / s.r_copies;
    for (int q = 0; q < per_copy; ++q) keep.push_back(q);
    out.single_copy = partial_trace(out.post_state, keep);
    return out;
}

// Purity before and after successful two-copy projection of rho (x) rho;
// the post state is (rho + rho^2)/Tr(rho + rho^2).
inline std::pair<double, double> purity_gain(const DensityOperator& rho) {
    const double before = purity(rho);
    Mat num = rho.matrix + rho.matrix * rho.matrix;
    DensityOperator rs(rho.n_qubits, num / num.trace().real());
    return {before, purity(rs)};
}

struct FirstOrderReport {
    int r_copies = 0;
    double trace_rho0_pert = 0.0;      // Tr(rho0 pert_avg), <= 0 for physical noise
    double f_before = 0.0;             // 1 + <psi|pert_avg|psi>
    double f_after_predicted = 0.0;    // 1 + (1/R) Tr(rho0 pert_avg)
    double purity_predicted = 0.0;     // 1 + (2/R) Tr(rho0 pert_avg)
    double f_after_exact = 0.0;
    double purity_exact = 0.0;
    double success_prob = 0.0;
    double f_residual = 0.0;
    double purity_residual = 0.0;
};

// First-order symmetrisation accounting for R copies of a pure single-qubit
// state, each perturbed by its own traceless Hermitian term, compared with
// the exact projection.
inline FirstOrderReport first_order_report(const StateVector& psi0,
                                           const std::vector<Mat>& perturbations) {
    if (psi0.n_qubits != 1)
        throw config_error("first_order_report: single-qubit state required");
    const int r = static_cast<int>(perturbations.size());
    if (r < 1 || r > 8) throw config_error("first_order_report: need 1..8 copies");

    const DensityOperator rho0 = DensityOperator::pure(psi0);
    Mat pert_avg = Mat::Zero(2, 2);
    for (const auto& p : perturbations) {
        if (p.rows() != 2 || p.cols() != 2 ||
            (p - p.adjoint()).cwiseAbs().maxCoeff() > 1e-12 ||
            std::abs(p.trace()) > 1e-12)
            throw config_error("first_order_report: perturbation not traceless Hermitian");
        Eigen::SelfAdjointEigenSolver<Mat> es(p, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().cwiseAbs().maxCoeff() > 0.05)
            throw config_error("first_order_report: perturbation too large for first order");
        pert_avg += p;
    }
    pert_avg /= static_cast<double>(r);

    FirstOrderReport rep;
    rep.r_copies = r;
    rep.trace_rho0_pert = (rho0.matrix * pert_avg).trace().real();
    rep.f_before = 1.0 + rep.trace_rho0_pert;
    rep.f_after_predicted = 1.0 + rep.trace_rho0_pert / r;
    rep.purity_predicted = 1.0 + 2.0 * rep.trace_rho0_pert / r;

    DensityOperator joint(0, Mat::Ones(1, 1));
    for (const auto& p : perturbations)
        joint = tensor_product(joint, DensityOperator(1, rho0.matrix + p));
    const SymmetricProjector s = build_projector(r);
    const SymmetrizationOutcome out = project(joint, s);
    rep.success_prob = out.success_prob;
    rep.f_after_exact = fidelity(out.single_copy, psi0);
    rep.purity_exact = purity(out.single_copy);
    rep.f_residual = rep.f_after_exact - rep.f_after_predicted;
    rep.purity_residual = rep.purity_exact - rep.purity_predicted;
    return rep;
}

// Cumulative probability that n projections per unit time all succeed
inline double zeno_success(double k, int n_projections) {
    if (k < 0.0 || n_projections < 1)
        throw config_error("zeno_success: invalid arguments");
    const double n = static_cast<double>(n_projections);
    const double base = 1.0 - k / (n * n);
    if (base < 0.0) throw config_error("zeno_success: k/n^2 exceeds 1");
    return std::pow(base, n);
}

} // namespace qnoise
