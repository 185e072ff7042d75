#include <gtest/gtest.h>

#include "rabi/rabi.hpp"

using namespace rabi;
using namespace rabi::ops;

TEST(FockBasis, Dimensions) {
    const FockBasis b(5);
    EXPECT_EQ(b.dim(), 6);
    EXPECT_EQ(b.joint_dim(), 12);
    EXPECT_EQ(joint_index(b, Qubit::ground, 3), 3);
    EXPECT_EQ(joint_index(b, Qubit::excited, 0), 6);
    EXPECT_THROW(FockBasis(0), std::invalid_argument);
}

TEST(Operators, CanonicalCommutatorBelowCutoff) {
    const FockBasis b(8);
    const CMatrix a = annihilation_matrix(b);
    const CMatrix comm = a * a.adjoint() - a.adjoint() * a;
    for (Index n = 0; n < b.n_max(); ++n) EXPECT_NEAR(comm(n, n).real(), 1.0, 1e-14);
    EXPECT_NEAR(comm(b.n_max(), b.n_max()).real(), -static_cast<double>(b.n_max()), 1e-12);
    EXPECT_LT((a.adjoint() * a - number_matrix(b)).norm(), 1e-13);
}

TEST(Operators, QubitConventions) {
    // sigma_z |g> = +|g>, sigma_+ |g> = |e>
    EXPECT_EQ(sigma_z()(0, 0), Complex(1.0, 0.0));
    EXPECT_EQ(sigma_z()(1, 1), Complex(-1.0, 0.0));
    EXPECT_EQ(sigma_plus()(1, 0), Complex(1.0, 0.0));
    EXPECT_EQ(sigma_minus()(0, 1), Complex(1.0, 0.0));
    const CMatrix anti = sigma_plus() * sigma_minus() + sigma_minus() * sigma_plus();
    EXPECT_LT((anti - identity2()).norm(), 1e-15);
}

TEST(Operators, TensorMatchesJointIndex) {
    const FockBasis b(4);
    const CMatrix op = qubit_field_tensor(sigma_plus(), creation_matrix(b), b);
    const JointState s = JointState::product(b, Qubit::ground, 2);
    const CVector out = op * s.amplitudes();
    EXPECT_NEAR(std::abs(out(joint_index(b, Qubit::excited, 3))), std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(out.norm(), std::sqrt(3.0), 1e-14);
}

TEST(JointState, ProductAndBlocks) {
    const FockBasis b(3);
    const JointState s = JointState::product(b, Qubit::excited, 1);
    EXPECT_TRUE(s.is_normalized());
    EXPECT_EQ(s.amplitude(Qubit::excited, 1), Complex(1.0, 0.0));
    EXPECT_EQ(s.block(Qubit::ground).norm(), 0.0);
    EXPECT_THROW(JointState::product(b, Qubit::ground, 4), std::invalid_argument);
    EXPECT_THROW(JointState(b, CVector::Zero(5)), std::invalid_argument);
    EXPECT_THROW(JointState(b, CVector::Zero(8), -1.0), std::invalid_argument);
}

TEST(JointState, TruncationCheck) {
    const FockBasis b(4);
    CVector v = CVector::Zero(b.joint_dim());
    v(joint_index(b, Qubit::ground, 0)) = std::sqrt(1.0 - 1e-6);
    v(joint_index(b, Qubit::excited, 4)) = 1e-3;
    const JointState s(b, v);
    EXPECT_NEAR(s.tail_population(), 1e-6, 1e-18);
    EXPECT_THROW(s.check_truncation(), TruncationError);
    EXPECT_NO_THROW(s.check_truncation(1e-5));
}

TEST(FieldState, PartialTraceOfEntangledState) {
    const FockBasis b(3);
    CVector v = CVector::Zero(b.joint_dim());
    v(joint_index(b, Qubit::ground, 0)) = std::sqrt(0.25);
    v(joint_index(b, Qubit::excited, 1)) = Complex(0.0, std::sqrt(0.75));
    const JointState s(b, v);
    const FieldState rho = partial_trace_qubit(s);
    EXPECT_NO_THROW(rho.validate());
    EXPECT_NEAR(populations(rho)(0), 0.25, 1e-15);
    EXPECT_NEAR(populations(rho)(1), 0.75, 1e-15);
    EXPECT_NEAR(std::abs(rho.matrix()(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(rho.purity(), 0.25 * 0.25 + 0.75 * 0.75, 1e-15);
    // Pi = sigma_z (-1)^n: |g0> -> +1, |e1> -> (-1)(-1) = +1
    EXPECT_NEAR(parity_expectation(s), 1.0, 1e-15);
}

TEST(FieldState, ConditioningRenormalizes) {
    const FockBasis b(3);
    CVector v = CVector::Zero(b.joint_dim());
    v(joint_index(b, Qubit::ground, 2)) = 0.6;
    v(joint_index(b, Qubit::excited, 1)) = 0.8;
    const JointState s(b, v);
    const auto cg = condition_on_qubit(s, Qubit::ground);
    EXPECT_NEAR(cg.probability, 0.36, 1e-15);
    EXPECT_NEAR(populations(cg.field)(2), 1.0, 1e-15);
    EXPECT_EQ(cg.field.kind(), FieldKind::conditioned_g);
    EXPECT_THROW(condition_on_qubit(JointState::product(b, Qubit::ground, 0), Qubit::excited),
                 ConditionalStateError);
}

TEST(FieldState, ValidateRejectsUnphysical) {
    const FockBasis b(1);
    CMatrix m(2, 2);
    m << 0.5, 0.1, 0.2, 0.5;
    EXPECT_THROW(FieldState(b, m, FieldKind::unconditional).validate(), std::domain_error);
    m << 0.6, 0.0, 0.0, 0.6;
    EXPECT_THROW(FieldState(b, m, FieldKind::unconditional).validate(), std::domain_error);
    m << 1.5, 0.0, 0.0, -0.5;
    EXPECT_THROW(FieldState(b, m, FieldKind::unconditional).validate(), std::domain_error);
    EXPECT_THROW(FieldState(b, CMatrix::Identity(3, 3), FieldKind::unconditional), std::invalid_argument);
}

TEST(Serialization, JointStateRoundTripIsExact) {
    const FockBasis b(4);
    CVector v = CVector::Random(b.joint_dim());
    v.normalize();
    const JointState s(b, v, 1.2345678901234567);
    const JointState back = joint_state_from_json(json::parse(to_json(s).dump()));
    EXPECT_EQ(back.basis().n_max(), 4);
    EXPECT_EQ(back.time(), s.time());
    for (Index i = 0; i < v.size(); ++i) EXPECT_EQ(back.amplitudes()(i), v(i));
}

TEST(Serialization, FieldStateRoundTripAndKind) {
    const FockBasis b(2);
    CVector v(3);
    v << 0.6, Complex(0.0, 0.8), 0.0;
    const FieldState f = FieldState::pure(b, v, FieldKind::conditioned_e);
    const FieldState back = field_state_from_json(json::parse(to_json(f, 2.0).dump()));
    EXPECT_EQ(back.kind(), FieldKind::conditioned_e);
    EXPECT_EQ((back.matrix() - f.matrix()).norm(), 0.0);
}

TEST(Serialization, RejectsUnknownKeys) {
    json j = to_json(JointState::product(FockBasis(2), Qubit::ground, 0));
    j["bogus"] = 1;
    EXPECT_THROW(joint_state_from_json(j), std::invalid_argument);
}
