#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rabi/rabi.hpp"

using namespace rabi;

namespace {

ModelParams params(double g, int n_max = 10) {
    ModelParams p;
    p.g = g;
    p.basis = FockBasis(n_max);
    return p;
}

}  // namespace

TEST(ExpPoly, ClosedFormIntegralMatchesQuadrature) {
    ExpPoly f;
    f.add(3, 2, Complex(0.5, -1.0));
    f.add(0, 1, Complex(2.0, 0.0));
    f.add(-2, 0, Complex(0.0, 1.0));
    const double omega = 1.3, t = 2.1;
    const ExpPoly F = f.integrated(omega);
    const int n = 20000;
    Complex acc{0.0, 0.0};
    const double h = t / n;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * f(i * h, omega);
    }
    acc *= h / 3.0;
    EXPECT_LT(std::abs(F(t, omega) - acc), 1e-12);
    EXPECT_LT(std::abs(F(0.0, omega)), 1e-15);
}

TEST(Dyson, FirstOrderClosedForm) {
    const double g = 0.4, tau = 1.7;
    const DysonExpansion d(params(g), 1);
    const CVector psi1 = d.term(1, tau);
    // c_{e1} = -i g ∫ e^{2it} = -g (e^{2i tau} - 1)/2, psi = e^{-2 i tau} c
    const Complex expected = std::polar(1.0, -2.0 * tau) * (-g * (std::polar(1.0, 2.0 * tau) - 1.0) / 2.0);
    EXPECT_LT(std::abs(psi1(joint_index(d.basis(), Qubit::excited, 1)) - expected), 1e-15);
    EXPECT_NEAR(psi1.norm(), std::abs(expected), 1e-15);
    EXPECT_LT(std::abs(d.term(0, tau)(joint_index(d.basis(), Qubit::ground, 0)) - 1.0), 1e-15);
}

TEST(Dyson, OrdersMatchRungeKuttaHierarchy) {
    const ModelParams p = params(0.4, 8);
    const double tau = 0.6 * std::numbers::pi;
    const DysonExpansion d(p, 4);
    const auto ref = oracle::rk4_dyson_orders(p, 4, tau, 1e-3);
    for (int j = 0; j <= 4; ++j) EXPECT_LT((d.term(j, tau) - ref[static_cast<std::size_t>(j)]).norm(), 1e-11) << "order " << j;
}

TEST(Dyson, OrderNormsScaleAsPowersOfG) {
    const double tau = 1.0;
    const DysonState a = dyson_state(params(0.1), 4, tau);
    const DysonState b = dyson_state(params(0.2), 4, tau);
    for (int j = 1; j <= 4; ++j)
        EXPECT_NEAR(b.order_norms[static_cast<std::size_t>(j)] / a.order_norms[static_cast<std::size_t>(j)],
                    std::pow(2.0, j), 1e-10);
}

TEST(Dyson, SeriesConvergesToExactForWeakCoupling) {
    const ModelParams p = params(0.1, 12).with_tau(1.3);
    const JointState exact = evolve_from(p).state;
    double previous = 1.0;
    for (int k = 0; k <= 4; ++k) {
        const DysonState ds = dyson_state(p, k, p.tau);
        const double err = (ds.state.amplitudes() - exact.amplitudes()).norm();
        EXPECT_LT(err, previous);
        previous = err;
    }
    EXPECT_LT(previous, 1e-5);
}

TEST(Dyson, OddOrdersPopulateExcitedQubitOnly) {
    const DysonExpansion d(params(0.5), 4);
    for (int j = 0; j <= 4; ++j) {
        const CVector t = d.term(j, 0.9);
        const Qubit empty = j % 2 ? Qubit::ground : Qubit::excited;
        for (int n = 0; n <= d.basis().n_max(); ++n) EXPECT_EQ(t(joint_index(d.basis(), empty, n)), Complex(0.0, 0.0));
    }
}

TEST(Dyson, Preconditions) {
    EXPECT_THROW(DysonExpansion(params(0.4), 5), std::invalid_argument);
    EXPECT_THROW(DysonExpansion(params(0.4, 3), 4), std::invalid_argument);
    ModelParams rwa = params(0.4);
    rwa.rwa = true;
    EXPECT_THROW(DysonExpansion(rwa, 2), std::invalid_argument);
    ModelParams detuned = params(0.4);
    detuned.omega_a = 1.2;
    EXPECT_THROW(DysonExpansion(detuned, 2), std::invalid_argument);
    EXPECT_THROW(perturbative_threshold(params(0.4), 3, {0.3, 2.0}, 1e-10), std::invalid_argument);
    EXPECT_THROW(dyson_state(params(0.4), 2, -1.0), std::invalid_argument);
}

TEST(Dyson, NormalizedStateIsUnitNorm) {
    const DysonState ds = dyson_state(params(0.4), 2, 2.0);
    EXPECT_GT(ds.norm, 1.0);
    EXPECT_NEAR(ds.normalized().norm(), 1.0, 1e-15);
}
