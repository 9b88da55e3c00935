#include <doctest.h>

#include "qnoise/channel.hpp"
#include "qnoise/symmetrize.hpp"
#include "test_helpers.hpp"

using namespace qnoise;
using qnoise::testing::random_density;
using qnoise::testing::random_state;

namespace {
DensityOperator n_copies(const DensityOperator& rho, int r) {
    DensityOperator joint = rho;
    for (int i = 1; i < r; ++i) joint = tensor_product(joint, rho);
    return joint;
}
} // namespace

TEST_CASE("projector: rank, idempotence, hermiticity") {
    for (int r = 1; r <= 6; ++r) {
        const SymmetricProjector s = build_projector(r);
        CHECK((s.matrix * s.matrix - s.matrix).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((s.matrix - s.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        // symmetric subspace of r qubits has dimension r+1
        CHECK(std::llround(s.matrix.trace().real()) == r + 1);
    }
    CHECK((build_projector(1).matrix - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(build_projector(9), config_error);
}

TEST_CASE("projection leaves identical pure products untouched") {
    std::mt19937_64 rng(31);
    for (int r : {2, 3, 4}) {
        const StateVector psi = random_state(1, rng);
        const DensityOperator joint = n_copies(DensityOperator::pure(psi), r);
        const SymmetrizationOutcome out = project(joint, build_projector(r));
        CHECK(out.success_prob == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((out.post_state.matrix - joint.matrix).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(fidelity(out.single_copy, psi) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("two-copy projection maps rho to (rho + rho^2)/Tr") {
    std::mt19937_64 rng(37);
    const SymmetricProjector s2 = build_projector(2);
    for (int trial = 0; trial < 25; ++trial) {
        const DensityOperator rho = random_density(1, rng);
        const SymmetrizationOutcome out = project(n_copies(rho, 2), s2);
        Mat expected = rho.matrix + rho.matrix * rho.matrix;
        expected /= expected.trace().real();
        CHECK((out.single_copy.matrix - expected).cwiseAbs().maxCoeff() < 1e-12);
    }

    // the maximally mixed state is a fixed point
    const SymmetrizationOutcome mixed =
        project(n_copies(DensityOperator::maximally_mixed(1), 2), s2);
    CHECK((mixed.single_copy.matrix - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

    // partial trace of the projected joint state agrees with the closed form
    // (the Eq.-level identity behind the map)
    const DensityOperator rho = random_density(1, rng);
    const SymmetrizationOutcome out = project(n_copies(rho, 2), s2);
    const DensityOperator reduced = partial_trace(out.post_state, {0});
    Mat expected = rho.matrix + rho.matrix * rho.matrix;
    expected /= expected.trace().real();
    CHECK((reduced.matrix - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("purity gain") {
    std::mt19937_64 rng(41);
    const StateVector psi = random_state(1, rng);
    const auto [pb, pa] = purity_gain(DensityOperator::pure(psi));
    CHECK(pb == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pa == doctest::Approx(1.0).epsilon(1e-12));

    Mat diag = Mat::Zero(2, 2);
    diag(0, 0) = 0.75;
    diag(1, 1) = 0.25;
    const auto [b2, a2] = purity_gain(DensityOperator(1, diag));
    CHECK(b2 == doctest::Approx(0.625).epsilon(1e-12));
    // (0.75+0.5625)^2 + (0.25+0.0625)^2 over (1+0.625)^2
    const double expected = (1.3125 * 1.3125 + 0.3125 * 0.3125) / (1.625 * 1.625);
    CHECK(a2 == doctest::Approx(expected).epsilon(1e-12));

    const auto [b3, a3] = purity_gain(DensityOperator::maximally_mixed(1));
    CHECK(b3 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(a3 == doctest::Approx(0.5).epsilon(1e-12));

    // never decreases; strict except at the fixed points
    for (int trial = 0; trial < 25; ++trial) {
        const DensityOperator rho = random_density(1, rng);
        const auto [before, after] = purity_gain(rho);
        CHECK(after >= before - 1e-12);
        if (before < 1.0 - 1e-6 && (rho.matrix - 0.5 * Mat::Identity(2, 2)).norm() > 1e-6)
            CHECK(after > before + 1e-12);
    }
}

TEST_CASE("first-order report against exact projection") {
    const StateVector plus = StateVector::raw(1, (Vec(2) << 1.0, 1.0).finished());
    const DensityOperator rho0 = DensityOperator::pure(plus);
    Mat z = Mat::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;

    SUBCASE("zero perturbations") {
        const FirstOrderReport rep = first_order_report(plus, {Mat::Zero(2, 2), Mat::Zero(2, 2)});
        CHECK(rep.f_before == 1.0);
        CHECK(rep.f_after_exact == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.success_prob == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("dephasing perturbation, R = 2 and R = 4") {
        const double p = 0.01;
        const Mat pert = p * (z * rho0.matrix * z - rho0.matrix);
        for (int r : {2, 4}) {
            const FirstOrderReport rep =
                first_order_report(plus, std::vector<Mat>(static_cast<std::size_t>(r), pert));
            CHECK(rep.f_after_predicted == doctest::Approx(1.0 - p / r).epsilon(1e-12));
            CHECK(std::abs(rep.f_residual) < 3.0 * p * p);
            CHECK(std::abs(rep.purity_residual) < 6.0 * p * p);
        }
    }

    SUBCASE("guards") {
        const Mat big = 0.2 * z;
        CHECK_THROWS_AS(first_order_report(plus, {big, big}), config_error);
        const Mat traceful = 0.01 * Mat::Identity(2, 2);
        CHECK_THROWS_AS(first_order_report(plus, {traceful, traceful}), config_error);
    }
}

TEST_CASE("infidelity scales as 1/R") {
    const StateVector plus = StateVector::raw(1, (Vec(2) << 1.0, 1.0).finished());
    const DensityOperator rho0 = DensityOperator::pure(plus);
    Mat z = Mat::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const double p = 0.01;
    const Mat pert = p * (z * rho0.matrix * z - rho0.matrix);

    std::vector<double> rs, infidelities;
    for (int r : {2, 4, 8}) {
        const FirstOrderReport rep =
            first_order_report(plus, std::vector<Mat>(static_cast<std::size_t>(r), pert));
        rs.push_back(r);
        infidelities.push_back(1.0 - rep.f_after_exact);
    }
    // fit c/R: residual of each point against c = mean(R * infidelity)
    double c = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) c += rs[i] * infidelities[i];
    c /= static_cast<double>(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        CHECK(std::abs(infidelities[i] - c / rs[i]) / (c / rs[i]) <= 0.10);
}

TEST_CASE("projection failure probability is second order for coherent drift") {
    // copies rotate out of the symmetric subspace at different rates
    const StateVector plus = StateVector::raw(1, (Vec(2) << 1.0, 1.0).finished());
    const SymmetricProjector s2 = build_projector(2);
    std::vector<double> eps, fail;
    for (double e = 1e-3; e <= 1e-2; e *= 2.0) {
        auto rotate = [&](double angle) {
            Mat u = Mat::Zero(2, 2);
            u(0, 0) = cplx(std::cos(angle), -std::sin(angle));
            u(1, 1) = cplx(std::cos(angle), std::sin(angle));
            const DensityOperator r0 = DensityOperator::pure(plus);
            return DensityOperator(1, u * r0.matrix * u.adjoint());
        };
        const DensityOperator joint = tensor_product(rotate(e), rotate(-e));
        const SymmetrizationOutcome out = project(joint, s2);
        eps.push_back(e);
        fail.push_back(1.0 - out.success_prob);
    }
    CHECK(qnoise::testing::fit_power(eps, fail) >= 1.9);
}

TEST_CASE("zeno success probability") {
    CHECK(zeno_success(0.3, 1) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(zeno_success(1.0, 10) == doctest::Approx(std::pow(0.99, 10)).epsilon(1e-15));
    // (1 - 1/n^2)^n ~ 1 - 1/n for large n
    CHECK(zeno_success(1.0, 1000) ==
          doctest::Approx(std::pow(1.0 - 1e-6, 1000)).epsilon(1e-15));
    CHECK(zeno_success(1.0, 1000) > 0.999);
    CHECK_THROWS_AS(zeno_success(4.0, 1), config_error);
    CHECK_THROWS_AS(zeno_success(-1.0, 10), config_error);

    double prev = 0.0;
    for (int n = 1; n <= 200; ++n) {
        const double cur = zeno_success(1.0, n);
        CHECK(cur >= prev);
        prev = cur;
    }
}
