// state.hpp
// State vectors and Pauli strings over an ordered qubit register.
// Qubit 0 is the most significant bit of the basis-state index.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qnoise/errors.hpp"

namespace qnoise {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kNormTol = 1e-12;

struct StateVector {
    int n_qubits = 0;
    Vec amplitudes;

    StateVector() = default;

    // Validating constructor: requires unit norm.
    StateVector(int n, Vec amps) : n_qubits(n), amplitudes(std::move(amps)) {
        if (n < 1 || amplitudes.size() != (Eigen::Index{1} << n))
            throw config_error("StateVector: amplitude count != 2^n");
        if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-10)
            throw config_error("StateVector: not unit norm");
    }

    // Raw constructor: normalises whatever it is given.
    static StateVector raw(int n, Vec amps) {
        double nrm = amps.norm();
        if (nrm < 1e-300) throw config_error("StateVector::raw: zero vector");
        StateVector s;
        s.n_qubits = n;
        s.amplitudes = amps / nrm;
        if (s.amplitudes.size() != (Eigen::Index{1} << n))
            throw config_error("StateVector::raw: amplitude count != 2^n");
        return s;
    }

    static StateVector basis(int n, std::uint64_t index) {
        Vec v = Vec::Zero(Eigen::Index{1} << n);
        v(static_cast<Eigen::Index>(index)) = 1.0;
        StateVector s;
        s.n_qubits = n;
        s.amplitudes = std::move(v);
        return s;
    }

    Eigen::Index dim() const { return amplitudes.size(); }
};

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

struct PauliString {
    std::vector<Pauli> labels;

    PauliString() = default;
    explicit PauliString(std::vector<Pauli> ls) : labels(std::move(ls)) {}

    // e.g. "IXZ" acts with X on qubit 1 and Z on qubit 2 of a 3-qubit register
    explicit PauliString(const std::string& s) {
        labels.reserve(s.size());
        for (char c : s) {
            switch (c) {
                case 'I': labels.push_back(Pauli::I); break;
                case 'X': labels.push_back(Pauli::X); break;
                case 'Y': labels.push_back(Pauli::Y); break;
                case 'Z': labels.push_back(Pauli::Z); break;
                default: throw config_error("PauliString: bad label");
            }
        }
    }

    static PauliString identity(int n) {
        return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I));
    }

    static PauliString single(int n, int qubit, Pauli p) {
        PauliString s = identity(n);
        s.labels[static_cast<std::size_t>(qubit)] = p;
        return s;
    }

    int size() const { return static_cast<int>(labels.size()); }

    int weight() const {
        int w = 0;
        for (Pauli p : labels)
            if (p != Pauli::I) ++w;
        return w;
    }

    std::string str() const {
        std::string s;
        for (Pauli p : labels) s.push_back(static_cast<char>(p));
        return s;
    }
};

inline StateVector tensor_product(const StateVector& a, const StateVector& b) {
    Vec out(a.dim() * b.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i)
        out.segment(i * b.dim(), b.dim()) = a.amplitudes(i) * b.amplitudes;
    StateVector s;
    s.n_qubits = a.n_qubits + b.n_qubits;
    s.amplitudes = std::move(out);
    return s;
}

// sigma|psi> with standard X, Y, Z matrices applied qubit by qubit
inline StateVector apply_pauli(const StateVector& state, const PauliString& p) {
    if (p.size() != state.n_qubits)
        throw config_error("apply_pauli: dimension mismatch");
    const int n = state.n_qubits;
    std::uint64_t flip = 0;
    for (int k = 0; k < n; ++k) {
        Pauli lab = p.labels[static_cast<std::size_t>(k)];
        if (lab == Pauli::X || lab == Pauli::Y)
            flip |= std::uint64_t{1} << (n - 1 - k);
    }
    Vec out = Vec::Zero(state.dim());
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(state.dim()); ++j) {
        cplx phase(1.0, 0.0);
        for (int k = 0; k < n; ++k) {
            const bool bit = (j >> (n - 1 - k)) & 1u;
            switch (p.labels[static_cast<std::size_t>(k)]) {
                case Pauli::Z: if (bit) phase = -phase; break;
                case Pauli::Y: phase *= bit ? cplx(0, -1) : cplx(0, 1); break;
                default: break;
            }
        }
        out(static_cast<Eigen::Index>(j ^ flip)) += phase * state.amplitudes(static_cast<Eigen::Index>(j));
    }
    StateVector s;
    s.n_qubits = n;
    s.amplitudes = std::move(out);
    return s;
}

inline cplx expectation(const StateVector& psi, const PauliString& p) {
    const StateVector sp = apply_pauli(psi, p);
    return psi.amplitudes.dot(sp.amplitudes); // Eigen dot conjugates the left argument
}

inline cplx inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw config_error("inner: dimension mismatch");
    return a.amplitudes.dot(b.amplitudes);
}

// 2^n x 2^n matrix of a Pauli string (used by small-register code paths)
inline Mat pauli_matrix(const PauliString& p) {
    const int n = p.size();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Mat m = Mat::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        StateVector col = apply_pauli(StateVector::basis(n, static_cast<std::uint64_t>(j)), p);
        m.col(j) = col.amplitudes;
    }
    return m;
}

} // namespace qnoise
