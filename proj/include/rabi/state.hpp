// state.hpp: truncated Fock space, qubit ⊗ field states, partial trace and
// measurement conditioning.
//
// Joint amplitudes are stored with the qubit index slow and the Fock index
// fast: index = q * (n_max + 1) + n with q = 0 for |g>, q = 1 for |e>.
//
// Pauli convention: sigma_z|g> = +|g>, sigma_z|e> = -|e>, so that
// H_0 = -1/2 omega_a sigma_z gives the qubit ground state the lower energy.
// sigma_+|g> = |e>, sigma_-|e> = |g>.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rabi {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace tolerance {
inline constexpr double norm = 1e-12;
inline constexpr double hermitian = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double eigenvalue_floor = -1e-10;
inline constexpr double tail = 1e-10;
inline constexpr double conditional_probability = 1e-14;
}  // namespace tolerance

/// Thrown when population leaks into the two highest retained Fock levels.
class TruncationError : public std::runtime_error {
public:
    TruncationError(double tail_mass, int n_max)
        : std::runtime_error("truncation failure: population " + std::to_string(tail_mass) +
                             " in Fock levels {" + std::to_string(n_max - 1) + ", " +
                             std::to_string(n_max) + "} (n_max = " + std::to_string(n_max) + ")"),
          tail_mass_(tail_mass),
          n_max_(n_max) {}

    double tail_mass() const noexcept { return tail_mass_; }
    int n_max() const noexcept { return n_max_; }

private:
    double tail_mass_;
    int n_max_;
};

/// Thrown when a qubit outcome has (numerically) zero probability.
class ConditionalStateError : public std::runtime_error {
public:
    explicit ConditionalStateError(double probability)
        : std::runtime_error("conditional state undefined: outcome probability " +
                             std::to_string(probability)),
          probability_(probability) {}
    double probability() const noexcept { return probability_; }

private:
    double probability_;
};

class FockBasis {
public:
    explicit FockBasis(int n_max = 60) : n_max_(n_max) {
        if (n_max < 1) throw std::invalid_argument("FockBasis: n_max must be >= 1");
    }

    int n_max() const noexcept { return n_max_; }
    /// Field dimension n_max + 1.
    Index dim() const noexcept { return n_max_ + 1; }
    /// Qubit ⊗ field dimension.
    Index joint_dim() const noexcept { return 2 * dim(); }

    friend bool operator==(const FockBasis&, const FockBasis&) = default;

private:
    int n_max_;
};

enum class Qubit { ground = 0, excited = 1 };

inline const char* to_string(Qubit q) { return q == Qubit::ground ? "g" : "e"; }

inline Index joint_index(const FockBasis& basis, Qubit q, int n) {
    return static_cast<Index>(q) * basis.dim() + n;
}

namespace ops {

inline CMatrix identity2() { return CMatrix::Identity(2, 2); }

inline CMatrix sigma_z() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

/// |e><g|
inline CMatrix sigma_plus() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

/// |g><e|
inline CMatrix sigma_minus() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

inline CMatrix sigma_x() { return sigma_plus() + sigma_minus(); }

}  // namespace ops

/// a|n> = sqrt(n)|n-1>: entry (n-1, n) = sqrt(n).
inline CMatrix annihilation_matrix(const FockBasis& basis) {
    CMatrix a = CMatrix::Zero(basis.dim(), basis.dim());
    for (Index n = 1; n < basis.dim(); ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline CMatrix creation_matrix(const FockBasis& basis) { return annihilation_matrix(basis).adjoint(); }

inline CMatrix number_matrix(const FockBasis& basis) {
    CMatrix n = CMatrix::Zero(basis.dim(), basis.dim());
    for (Index i = 0; i < basis.dim(); ++i) n(i, i) = static_cast<double>(i);
    return n;
}

/// Kronecker product qubit_op ⊗ field_op, qubit index slow.
inline CMatrix qubit_field_tensor(const CMatrix& qubit_op, const CMatrix& field_op) {
    if (qubit_op.rows() != 2 || qubit_op.cols() != 2)
        throw std::invalid_argument("qubit_field_tensor: qubit operator must be 2x2");
    if (field_op.rows() != field_op.cols() || field_op.rows() == 0)
        throw std::invalid_argument("qubit_field_tensor: field operator must be square");
    const Index d = field_op.rows();
    CMatrix out = CMatrix::Zero(2 * d, 2 * d);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j)
            if (qubit_op(i, j) != Complex{0.0, 0.0})
                out.block(i * d, j * d, d, d) = qubit_op(i, j) * field_op;
    return out;
}

inline CMatrix qubit_field_tensor(const CMatrix& qubit_op, const CMatrix& field_op, const FockBasis& basis) {
    if (field_op.rows() != basis.dim())
        throw std::invalid_argument("qubit_field_tensor: field operator does not match basis dimension");
    return qubit_field_tensor(qubit_op, field_op);
}

/// Pure qubit ⊗ field state. Not forced to unit norm: truncated perturbative
/// series are carried unnormalized.
class JointState {
public:
    JointState(FockBasis basis, CVector amplitudes, double time = 0.0)
        : basis_(basis), amplitudes_(std::move(amplitudes)), time_(time) {
        if (amplitudes_.size() != basis_.joint_dim())
            throw std::invalid_argument("JointState: amplitude vector has length " +
                                        std::to_string(amplitudes_.size()) + ", expected " +
                                        std::to_string(basis_.joint_dim()));
        if (!(time_ >= 0.0)) throw std::invalid_argument("JointState: time must be >= 0");
    }

    /// |q>|n>
    static JointState product(const FockBasis& basis, Qubit q, int n) {
        if (n < 0 || n > basis.n_max()) throw std::invalid_argument("JointState::product: Fock index out of range");
        CVector v = CVector::Zero(basis.joint_dim());
        v(joint_index(basis, q, n)) = 1.0;
        return JointState(basis, std::move(v), 0.0);
    }

    const FockBasis& basis() const noexcept { return basis_; }
    const CVector& amplitudes() const noexcept { return amplitudes_; }
    double time() const noexcept { return time_; }

    Complex amplitude(Qubit q, int n) const { return amplitudes_(joint_index(basis_, q, n)); }

    /// Unnormalized field vector c_q |phi_q>.
    CVector block(Qubit q) const {
        return amplitudes_.segment(static_cast<Index>(q) * basis_.dim(), basis_.dim());
    }

    double norm() const { return amplitudes_.norm(); }
    bool is_normalized(double tol = tolerance::norm) const { return std::abs(norm() - 1.0) <= tol; }

    JointState normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::domain_error("JointState: cannot normalize the zero vector");
        return JointState(basis_, amplitudes_ / n, time_);
    }

    /// Population in Fock levels {n_max - 1, n_max}, summed over the qubit.
    double tail_population() const {
        double mass = 0.0;
        for (Qubit q : {Qubit::ground, Qubit::excited})
            for (int n = basis_.n_max() - 1; n <= basis_.n_max(); ++n) mass += std::norm(amplitude(q, n));
        return mass;
    }

    void check_truncation(double tail_tolerance = tolerance::tail) const {
        const double mass = tail_population();
        if (mass > tail_tolerance) throw TruncationError(mass, basis_.n_max());
    }

    /// |<q,n|psi>|^2 in storage order.
    RVector joint_populations() const { return amplitudes_.cwiseAbs2(); }

private:
    FockBasis basis_;
    CVector amplitudes_;
    double time_;
};

enum class FieldKind { unconditional, conditioned_g, conditioned_e };

inline const char* to_string(FieldKind k) {
    switch (k) {
    case FieldKind::unconditional: return "unconditional";
    case FieldKind::conditioned_g: return "conditioned_g";
    case FieldKind::conditioned_e: return "conditioned_e";
    }
    return "unconditional";
}

inline FieldKind field_kind_from_string(const std::string& s) {
    if (s == "unconditional") return FieldKind::unconditional;
    if (s == "conditioned_g") return FieldKind::conditioned_g;
    if (s == "conditioned_e") return FieldKind::conditioned_e;
    throw std::invalid_argument("unknown field state kind '" + s + "'");
}

/// Field density matrix in the Fock basis.
class FieldState {
public:
    FieldState(FockBasis basis, CMatrix matrix, FieldKind kind)
        : basis_(basis), matrix_(std::move(matrix)), kind_(kind) {
        if (matrix_.rows() != basis_.dim() || matrix_.cols() != basis_.dim())
            throw std::invalid_argument("FieldState: matrix dimension does not match basis");
    }

    /// |v><v| / <v|v>
    static FieldState pure(const FockBasis& basis, const CVector& v, FieldKind kind) {
        const double n2 = v.squaredNorm();
        if (n2 == 0.0) throw std::domain_error("FieldState::pure: zero vector");
        return FieldState(basis, v * v.adjoint() / n2, kind);
    }

    static FieldState fock(const FockBasis& basis, int n) {
        CVector v = CVector::Zero(basis.dim());
        v(n) = 1.0;
        return pure(basis, v, FieldKind::unconditional);
    }

    const FockBasis& basis() const noexcept { return basis_; }
    const CMatrix& matrix() const noexcept { return matrix_; }
    FieldKind kind() const noexcept { return kind_; }

    double trace() const { return matrix_.trace().real(); }
    double purity() const { return (matrix_ * matrix_).trace().real(); }

    double hermiticity_error() const { return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff(); }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix_, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }

    /// Hermitian, unit trace, positive semidefinite; throws std::domain_error.
    void validate() const {
        if (const double h = hermiticity_error(); h > tolerance::hermitian)
            throw std::domain_error("FieldState: not Hermitian (max deviation " + std::to_string(h) + ")");
        if (std::abs(trace() - 1.0) > tolerance::trace)
            throw std::domain_error("FieldState: trace " + std::to_string(trace()) + " != 1");
        if (const double m = min_eigenvalue(); m < tolerance::eigenvalue_floor)
            throw std::domain_error("FieldState: negative eigenvalue " + std::to_string(m));
    }

private:
    FockBasis basis_;
    CMatrix matrix_;
    FieldKind kind_;
};

/// rho = Tr_q |psi><psi| = |c_g|^2 |phi_g><phi_g| + |c_e|^2 |phi_e><phi_e|.
inline FieldState partial_trace_qubit(const JointState& state) {
    const CVector g = state.block(Qubit::ground);
    const CVector e = state.block(Qubit::excited);
    CMatrix rho = g * g.adjoint() + e * e.adjoint();
    return FieldState(state.basis(), std::move(rho), FieldKind::unconditional);
}

struct ConditionalField {
    double probability;
    FieldState field;
};

/// Projective measurement of the qubit in {|g>, |e>}.
inline ConditionalField condition_on_qubit(const JointState& state, Qubit outcome) {
    const CVector v = state.block(outcome);
    const double p = v.squaredNorm();
    if (p < tolerance::conditional_probability) throw ConditionalStateError(p);
    const FieldKind kind = outcome == Qubit::ground ? FieldKind::conditioned_g : FieldKind::conditioned_e;
    return {p, FieldState::pure(state.basis(), v, kind)};
}

/// p_n = rho_nn
inline RVector populations(const FieldState& field) { return field.matrix().diagonal().real(); }

/// <Pi> with Pi = sigma_z (-1)^{a^dagger a}.
inline double parity_expectation(const JointState& state) {
    double acc = 0.0;
    const auto& basis = state.basis();
    for (Qubit q : {Qubit::ground, Qubit::excited}) {
        const double qubit_sign = q == Qubit::ground ? 1.0 : -1.0;
        for (int n = 0; n <= basis.n_max(); ++n) {
            const double field_sign = (n % 2 == 0) ? 1.0 : -1.0;
            acc += qubit_sign * field_sign * std::norm(state.amplitude(q, n));
        }
    }
    return acc / state.amplitudes().squaredNorm();
}

}  // namespace rabi
