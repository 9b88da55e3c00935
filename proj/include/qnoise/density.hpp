// density.hpp
// Density operators: validity checks, fidelity, purity, partial trace.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cstdint>
#include <vector>

#include "qnoise/state.hpp"

namespace qnoise {

struct DensityOperator {
    int n_qubits = 0;
    Mat matrix;

    DensityOperator() = default;

    // Unchecked wrap for internal arithmetic; use from_matrix for inputs.
    DensityOperator(int n, Mat m) : n_qubits(n), matrix(std::move(m)) {}

    Eigen::Index dim() const { return matrix.rows(); }

    // Hermitian to 1e-12, unit trace to 1e-12, eigenvalues >= -1e-10
    bool is_valid(double herm_tol = 1e-12, double trace_tol = 1e-12,
                  double eig_floor = -1e-10) const {
        if (matrix.rows() != matrix.cols()) return false;
        if (matrix.rows() != (Eigen::Index{1} << n_qubits)) return false;
        if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > herm_tol) return false;
        if (std::abs(matrix.trace() - cplx(1.0, 0.0)) > trace_tol) return false;
        Eigen::SelfAdjointEigenSolver<Mat> es(matrix, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff() >= eig_floor;
    }

    static DensityOperator from_matrix(int n, Mat m) {
        DensityOperator rho(n, std::move(m));
        if (!rho.is_valid())
            throw config_error("DensityOperator: not a valid density matrix");
        return rho;
    }

    static DensityOperator pure(const StateVector& psi) {
        return DensityOperator(psi.n_qubits,
                               psi.amplitudes * psi.amplitudes.adjoint());
    }

    static DensityOperator maximally_mixed(int n) {
        const Eigen::Index d = Eigen::Index{1} << n;
        return DensityOperator(n, Mat::Identity(d, d) / static_cast<double>(d));
    }
};

inline DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
    const Eigen::Index da = a.dim(), db = b.dim();
    Mat out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a.matrix(i, j) * b.matrix;
    return DensityOperator(a.n_qubits + b.n_qubits, std::move(out));
}

// <psi|rho|psi>; asserts the imaginary residue is negligible, then discards it
inline double fidelity(const DensityOperator& rho, const StateVector& psi) {
    if (rho.dim() != psi.dim()) throw config_error("fidelity: dimension mismatch");
    const cplx f = psi.amplitudes.dot(rho.matrix * psi.amplitudes);
    if (std::abs(f.imag()) > 1e-10)
        throw diagnostic_error("fidelity: non-real value");
    return f.real();
}

inline double purity(const DensityOperator& rho) {
    return (rho.matrix * rho.matrix).trace().real();
}

// Reduced density operator on `keep` (original qubit order preserved)
inline DensityOperator partial_trace(const DensityOperator& rho,
                                     const std::vector<int>& keep) {
    const int n = rho.n_qubits;
    if (keep.empty()) throw config_error("partial_trace: empty keep set");
    std::vector<int> ks = keep;
    std::sort(ks.begin(), ks.end());
    if (std::adjacent_find(ks.begin(), ks.end()) != ks.end() ||
        ks.front() < 0 || ks.back() >= n)
        throw config_error("partial_trace: invalid index set");

    std::vector<int> tr;
    for (int q = 0; q < n; ++q)
        if (!std::binary_search(ks.begin(), ks.end(), q)) tr.push_back(q);

    const int nk = static_cast<int>(ks.size());
    const int nt = static_cast<int>(tr.size());
    const std::uint64_t dk = std::uint64_t{1} << nk;
    const std::uint64_t dt = std::uint64_t{1} << nt;

    auto compose = [&](std::uint64_t kept_bits, std::uint64_t traced_bits) {
        std::uint64_t idx = 0;
        for (int a = 0; a < nk; ++a)
            if ((kept_bits >> (nk - 1 - a)) & 1u)
                idx |= std::uint64_t{1} << (n - 1 - ks[static_cast<std::size_t>(a)]);
        for (int a = 0; a < nt; ++a)
            if ((traced_bits >> (nt - 1 - a)) & 1u)
                idx |= std::uint64_t{1} << (n - 1 - tr[static_cast<std::size_t>(a)]);
        return idx;
    };

    Mat out = Mat::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::uint64_t i = 0; i < dk; ++i)
        for (std::uint64_t j = 0; j < dk; ++j) {
            cplx sum = 0;
            for (std::uint64_t e = 0; e < dt; ++e)
                sum += rho.matrix(static_cast<Eigen::Index>(compose(i, e)),
                                  static_cast<Eigen::Index>(compose(j, e)));
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum;
        }
    return DensityOperator(nk, std::move(out));
}

} // namespace qnoise
