// codes.hpp
// Quantum error-correcting codes: built-in encoders (3-qubit phase code,
// bit-flip correction unitary, Shor-9, five-qubit), the code-existence
// condition verifier, and projection-based syndrome recovery.

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qnoise/channel.hpp"
#include "qnoise/density.hpp"
#include "qnoise/state.hpp"

namespace qnoise {

struct RecoveryClass {
    PauliString correction;          // class representative, self-inverse
    std::vector<int> members;        // indices into the code's error set
    Mat image_basis;                 // 2^n x 2 orthonormal columns E|C0>, E|C1>
};

struct QuantumCode {
    std::string name;
    int n = 0;                       // physical qubits
    int l = 1;                       // logical qubits
    int t = 1;                       // correctable weight
    std::vector<StateVector> codewords;
    std::vector<PauliString> error_set;   // declared correctable errors, identity first
    std::vector<RecoveryClass> recovery;  // built on demand
    bool degenerate = false;

    bool has_recovery() const { return !recovery.empty(); }
};

// All Pauli strings of weight <= t on n qubits, identity first
inline std::vector<PauliString> pauli_errors_up_to(int n, int t) {
    std::vector<PauliString> out;
    out.push_back(PauliString::identity(n));
    std::vector<PauliString> frontier = out;
    for (int w = 1; w <= t; ++w) {
        std::vector<PauliString> next;
        for (const auto& base : frontier) {
            int first_free = 0;
            for (int q = n - 1; q >= 0; --q)
                if (base.labels[static_cast<std::size_t>(q)] != Pauli::I) {
                    first_free = q + 1;
                    break;
                }
            for (int q = first_free; q < n; ++q)
                for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                    PauliString e = base;
                    e.labels[static_cast<std::size_t>(q)] = p;
                    next.push_back(e);
                }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

namespace detail {
inline StateVector logical_superposition(const QuantumCode& code, cplx alpha, cplx beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10)
        throw config_error("encode: input amplitudes not normalised");
    Vec v = alpha * code.codewords[0].amplitudes + beta * code.codewords[1].amplitudes;
    StateVector s;
    s.n_qubits = code.n;
    s.amplitudes = std::move(v);
    return s;
}

// Parse a signed bitstring term, e.g. "-01011"
inline void add_term(Vec& v, const std::string& term, int n) {
    std::string bits = term;
    double sign = 1.0;
    if (!bits.empty() && (bits[0] == '+' || bits[0] == '-')) {
        sign = bits[0] == '-' ? -1.0 : 1.0;
        bits = bits.substr(1);
    }
    if (static_cast<int>(bits.size()) != n)
        throw config_error("code file: bitstring length != n");
    std::uint64_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw config_error("code file: bad bitstring");
        idx = (idx << 1) | static_cast<std::uint64_t>(c - '0');
    }
    v(static_cast<Eigen::Index>(idx)) += sign;
}
} // namespace detail

// ---------------------------------------------------------------------------
// Built-in codes

// |C0> = (|0>+|1>)^3 / sqrt(8), |C1> = (|0>-|1>)^3 / sqrt(8)
inline QuantumCode make_phase3_code() {
    QuantumCode code;
    code.name = "phase3";
    code.n = 3;
    const Eigen::Index dim = 8;
    Vec c0 = Vec::Ones(dim) / std::sqrt(8.0);
    Vec c1(dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        c1(j) = (std::popcount(static_cast<std::uint64_t>(j)) % 2 ? -1.0 : 1.0) / std::sqrt(8.0);
    code.codewords = {StateVector(3, c0), StateVector(3, c1)};
    // The phase code only protects against single phase flips.
    code.error_set = {PauliString("III"), PauliString("ZII"),
                      PauliString("IZI"), PauliString("IIZ")};
    return code;
}

// |C0> = |000>, |C1> = |111>: the repetition code for single bit flips
inline QuantumCode make_bitflip3_code() {
    QuantumCode code;
    code.name = "bitflip3";
    code.n = 3;
    code.codewords = {StateVector::basis(3, 0), StateVector::basis(3, 7)};
    code.error_set = {PauliString("III"), PauliString("XII"),
                      PauliString("IXI"), PauliString("IIX")};
    return code;
}

inline StateVector encode_phase3(cplx alpha, cplx beta) {
    static const QuantumCode code = make_phase3_code();
    return detail::logical_superposition(code, alpha, beta);
}

// Eight-basis-state permutation that moves the majority bit to qubit 0
inline StateVector bitflip_correction_unitary(const StateVector& state) {
    if (state.n_qubits != 3)
        throw config_error("bitflip_correction_unitary: 3-qubit state required");
    static constexpr int kPerm[8] = {0, 1, 2, 7, 3, 6, 5, 4};
    Vec out(8);
    for (Eigen::Index j = 0; j < 8; ++j) out(kPerm[j]) = state.amplitudes(j);
    StateVector s;
    s.n_qubits = 3;
    s.amplitudes = std::move(out);
    return s;
}

inline QuantumCode make_shor9_code() {
    QuantumCode code;
    code.name = "shor9";
    code.n = 9;
    const StateVector zero = StateVector::basis(1, 0);
    auto block = [&](double sign) {
        // (|000> + sign |111>)/sqrt(2)
        Vec v = Vec::Zero(8);
        v(0) = 1.0 / std::sqrt(2.0);
        v(7) = sign / std::sqrt(2.0);
        return StateVector(3, v);
    };
    for (double sign : {+1.0, -1.0}) {
        StateVector b = block(sign);
        code.codewords.push_back(tensor_product(tensor_product(b, b), b));
    }
    code.degenerate = true;
    code.error_set = pauli_errors_up_to(9, 1);
    return code;
}

inline StateVector encode_shor9(cplx alpha, cplx beta) {
    static const QuantumCode code = make_shor9_code();
    return detail::logical_superposition(code, alpha, beta);
}

inline QuantumCode make_five_code() {
    QuantumCode code;
    code.name = "five";
    code.n = 5;
    Vec c0 = Vec::Zero(32), c1 = Vec::Zero(32);
    auto fill = [&](Vec& v, const std::vector<std::string>& terms) {
        for (const auto& t : terms) detail::add_term(v, t, 5);
        v /= std::sqrt(8.0);
    };
    fill(c0, {"+00010", "+00101", "-01011", "+01100",
              "+10001", "-10110", "-11000", "-11111"});
    // Sign of the |10100> term fixed relative to the commonly reprinted form;
    // with -|10100> the X error on qubit 3 leaks between the codewords and
    // the orthogonality conditions fail.
    fill(c1, {"+00000", "-00111", "+01001", "+01110",
              "+10011", "+10100", "+11010", "-11101"});
    code.codewords = {StateVector(5, c0), StateVector(5, c1)};
    code.error_set = pauli_errors_up_to(5, 1);
    return code;
}

inline StateVector encode_five(cplx alpha, cplx beta) {
    static const QuantumCode code = make_five_code();
    return detail::logical_superposition(code, alpha, beta);
}

inline StateVector encode(const QuantumCode& code, cplx alpha, cplx beta) {
    return detail::logical_superposition(code, alpha, beta);
}

inline QuantumCode builtin_code(const std::string& id) {
    if (id == "phase3") return make_phase3_code();
    if (id == "bitflip3") return make_bitflip3_code();
    if (id == "shor9") return make_shor9_code();
    if (id == "five") return make_five_code();
    throw config_error("unknown code id: " + id);
}

/// Plain-text codeword file: header line "n l t", then one signed basis-string
// term per line, prefixed by the codeword index, e.g. "0 -01011".
inline QuantumCode load_code(std::istream& in) {
    QuantumCode code;
    code.name = "custom";
    std::string line;
    if (!std::getline(in, line)) throw config_error("code file: empty");
    {
        std::istringstream hs(line);
        if (!(hs >> code.n >> code.l >> code.t))
            throw config_error("code file: bad header, expected 'n l t'");
    }
    if (code.n < 1 || code.n > 12 || code.l < 1 || code.t < 0)
        throw config_error("code file: bad parameters");
    const Eigen::Index dim = Eigen::Index{1} << code.n;
    std::vector<Vec> words(std::size_t{1} << code.l, Vec::Zero(dim));
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::size_t k;
        std::string term;
        if (!(ls >> k >> term)) throw config_error("code file: bad term line");
        if (k >= words.size()) throw config_error("code file: codeword index out of range");
        detail::add_term(words[k], term, code.n);
    }
    for (auto& w : words) code.codewords.push_back(StateVector::raw(code.n, w));
    for (std::size_t a = 0; a < code.codewords.size(); ++a)
        for (std::size_t b = a + 1; b < code.codewords.size(); ++b)
            if (std::abs(inner(code.codewords[a], code.codewords[b])) > 1e-12)
                throw config_error("code file: codewords not orthogonal");
    code.error_set = pauli_errors_up_to(code.n, code.t);
    return code;
}

inline QuantumCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open code file: " + path);
    return load_code(in);
}

// ---------------------------------------------------------------------------
// Code conditions

struct CodeConditionReport {
    // gram[a*2+b] holds <C_a| E_k^dag E_l |C_b> over the error set
    Mat gram00, gram01, gram11;
    Mat ancilla_gram;                 // the common diagonal block when general holds
    bool satisfies_general = false;   // equal diagonal blocks, zero cross block
    bool satisfies_nondegenerate = false;
    double max_cross = 0.0;
    double max_diag_mismatch = 0.0;
    double max_offdiag = 0.0;         // largest |off-diagonal| of the diagonal block
};

inline CodeConditionReport verify_conditions(const QuantumCode& code,
                                             const std::vector<PauliString>& errors,
                                             double tol = 1e-10) {
    const int ne = static_cast<int>(errors.size());
    std::vector<StateVector> img0, img1;
    img0.reserve(static_cast<std::size_t>(ne));
    img1.reserve(static_cast<std::size_t>(ne));
    for (const auto& e : errors) {
        img0.push_back(apply_pauli(code.codewords[0], e));
        img1.push_back(apply_pauli(code.codewords[1], e));
    }
    CodeConditionReport rep;
    rep.gram00 = Mat(ne, ne);
    rep.gram01 = Mat(ne, ne);
    rep.gram11 = Mat(ne, ne);
    for (int k = 0; k < ne; ++k)
        for (int l = 0; l < ne; ++l) {
            rep.gram00(k, l) = inner(img0[static_cast<std::size_t>(k)], img0[static_cast<std::size_t>(l)]);
            rep.gram01(k, l) = inner(img0[static_cast<std::size_t>(k)], img1[static_cast<std::size_t>(l)]);
            rep.gram11(k, l) = inner(img1[static_cast<std::size_t>(k)], img1[static_cast<std::size_t>(l)]);
        }
    rep.max_cross = rep.gram01.cwiseAbs().maxCoeff();
    rep.max_diag_mismatch = (rep.gram00 - rep.gram11).cwiseAbs().maxCoeff();
    rep.satisfies_general = rep.max_cross <= tol && rep.max_diag_mismatch <= tol;
    if (rep.satisfies_general) rep.ancilla_gram = rep.gram00;
    Mat off = rep.gram00;
    off.diagonal().setZero();
    rep.max_offdiag = off.cwiseAbs().maxCoeff();
    rep.satisfies_nondegenerate = rep.satisfies_general && rep.max_offdiag <= tol;
    return rep;
}

inline CodeConditionReport verify_conditions(const QuantumCode& code, double tol = 1e-10) {
    return verify_conditions(code, code.error_set, tol);
}

// ---------------------------------------------------------------------------
// Recovery

// Partition the error set into classes with identical codespace action
// (|gram| = 1 within tol merges), store one orthonormal image basis and a
// representative correction per class.  Cross-class images must tile an
// orthogonal direct sum; anything else means the declared error set is not
// projectively correctable.
inline void build_recovery(QuantumCode& code, double tol = 1e-10) {
    const CodeConditionReport rep = verify_conditions(code, code.error_set, tol);
    if (!rep.satisfies_general)
        throw diagnostic_error("build_recovery: code conditions not satisfied");
    const int ne = static_cast<int>(code.error_set.size());
    std::vector<int> cls(static_cast<std::size_t>(ne), -1);
    code.recovery.clear();
    for (int k = 0; k < ne; ++k) {
        if (cls[static_cast<std::size_t>(k)] >= 0) continue;
        const int cid = static_cast<int>(code.recovery.size());
        RecoveryClass rc;
        rc.correction = code.error_set[static_cast<std::size_t>(k)];
        for (int l = k; l < ne; ++l)
            if (cls[static_cast<std::size_t>(l)] < 0 &&
                std::abs(std::abs(rep.gram00(k, l)) - 1.0) <= tol) {
                cls[static_cast<std::size_t>(l)] = cid;
                rc.members.push_back(l);
            }
        StateVector e0 = apply_pauli(code.codewords[0], rc.correction);
        StateVector e1 = apply_pauli(code.codewords[1], rc.correction);
        rc.image_basis = Mat(e0.dim(), 2);
        rc.image_basis.col(0) = e0.amplitudes;
        rc.image_basis.col(1) = e1.amplitudes;
        code.recovery.push_back(std::move(rc));
    }
    code.degenerate = static_cast<int>(code.recovery.size()) < ne;
    // syndrome subspaces must be mutually orthogonal
    for (std::size_t a = 0; a < code.recovery.size(); ++a)
        for (std::size_t b = a + 1; b < code.recovery.size(); ++b) {
            Mat ov = code.recovery[a].image_basis.adjoint() * code.recovery[b].image_basis;
            if (ov.cwiseAbs().maxCoeff() > 1e-8)
                throw diagnostic_error("build_recovery: syndrome subspaces overlap");
        }
}

struct CorrectionResult {
    StateVector recovered_pure;       // pure-state mode only
    DensityOperator recovered;        // density mode only
    int syndrome = -1;                // sampled class (pure mode)
    double class_probability = 0.0;   // Born probability of the sampled class
    double residual = 0.0;            // weight outside all syndrome subspaces
};

// Exact channel-averaged recovery: project onto each syndrome subspace,
// apply the class correction, sum the branches.
inline CorrectionResult correct(const QuantumCode& code, const DensityOperator& rho) {
    if (!code.has_recovery()) throw config_error("correct: recovery table not built");
    if (rho.dim() != (Eigen::Index{1} << code.n))
        throw config_error("correct: dimension mismatch");
    CorrectionResult res;
    Mat out = Mat::Zero(rho.dim(), rho.dim());
    double captured = 0.0;
    for (const auto& rc : code.recovery) {
        const Mat small = rc.image_basis.adjoint() * rho.matrix * rc.image_basis;  // 2x2
        captured += small.trace().real();
        Mat corr_basis(rho.dim(), 2);
        for (int c = 0; c < 2; ++c) {
            StateVector v = StateVector::raw(code.n, rc.image_basis.col(c));
            corr_basis.col(c) = apply_pauli(v, rc.correction).amplitudes;
        }
        out += corr_basis * small * corr_basis.adjoint();
    }
    res.residual = std::abs(rho.matrix.trace().real() - captured);
    if (res.residual > 1e-8)
        throw diagnostic_error("correct: uncorrectable component of weight " +
                               std::to_string(res.residual));
    res.recovered = DensityOperator(code.n, out / captured);
    return res;
}

// Monte-Carlo measurement mode: sample one syndrome class with its Born
// probability from the provided stream, project, renormalise, correct.
inline CorrectionResult correct(const QuantumCode& code, const StateVector& psi,
                                std::mt19937_64& rng) {
    if (!code.has_recovery()) throw config_error("correct: recovery table not built");
    if (psi.dim() != (Eigen::Index{1} << code.n))
        throw config_error("correct: dimension mismatch");
    std::vector<double> probs;
    probs.reserve(code.recovery.size());
    double total = 0.0;
    for (const auto& rc : code.recovery) {
        const double p = (rc.image_basis.adjoint() * psi.amplitudes).squaredNorm();
        probs.push_back(p);
        total += p;
    }
    CorrectionResult res;
    res.residual = std::abs(1.0 - total);
    if (res.residual > 1e-8)
        throw diagnostic_error("correct: uncorrectable component of weight " +
                               std::to_string(res.residual));
    std::uniform_real_distribution<double> uni(0.0, total);
    double draw = uni(rng), acc = 0.0;
    std::size_t pick = probs.size() - 1;
    for (std::size_t c = 0; c < probs.size(); ++c) {
        acc += probs[c];
        if (draw <= acc) { pick = c; break; }
    }
    const auto& rc = code.recovery[pick];
    Vec projected = rc.image_basis * (rc.image_basis.adjoint() * psi.amplitudes);
    StateVector proj_state = StateVector::raw(code.n, projected);
    res.recovered_pure = apply_pauli(proj_state, rc.correction);
    res.syndrome = static_cast<int>(pick);
    res.class_probability = probs[pick];
    return res;
}

} // namespace qnoise
