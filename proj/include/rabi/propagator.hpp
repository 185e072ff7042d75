// propagator.hpp: exact evolution under the time-independent on-interval
// Hamiltonian via its Hermitian spectral decomposition,
//
//   U(tau) = V exp(-i Lambda tau) V^dagger.
//
// One factorization serves every tau at fixed parameters; tau only enters
// through phases.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "rabi/model.hpp"
#include "rabi/state.hpp"

namespace rabi {

class NonHermitianError : public std::invalid_argument {
public:
    explicit NonHermitianError(double deviation)
        : std::invalid_argument("diagonalize: input is not Hermitian (max |H - H^dagger| = " +
                                std::to_string(deviation) + ")") {}
};

namespace detail {
inline constexpr double hermitian_reject = 1e-8;
inline constexpr double symmetrize_warn = 1e-13;
}  // namespace detail

struct SpectralCache {
    RVector eigenvalues;
    CMatrix eigenvectors;
    std::uint64_t source_hash = 0;
    /// max |H - H^dagger| / 2 removed by symmetrization before factorizing.
    double symmetrization_correction = 0.0;

    Index dim() const noexcept { return eigenvalues.size(); }

    /// True when symmetrization changed the input by more than 1e-13.
    bool symmetrization_warning() const noexcept { return symmetrization_correction > detail::symmetrize_warn; }

    /// max |V diag(lambda) V^dagger - H|
    double reconstruction_error(const CMatrix& h) const {
        const CMatrix r = eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
        return (r - h).cwiseAbs().maxCoeff();
    }

    /// max |V^dagger V - 1|
    double orthonormality_error() const {
        const CMatrix id = CMatrix::Identity(dim(), dim());
        return (eigenvectors.adjoint() * eigenvectors - id).cwiseAbs().maxCoeff();
    }
};

inline SpectralCache diagonalize(const CMatrix& h, std::uint64_t source_hash = 0) {
    if (h.rows() != h.cols() || h.rows() == 0) throw std::invalid_argument("diagonalize: matrix must be square");
    const double deviation = (h - h.adjoint()).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if (deviation > detail::hermitian_reject * scale) throw NonHermitianError(deviation);

    const CMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
    if (es.info() != Eigen::Success) throw std::runtime_error("diagonalize: eigensolver failed to converge");

    SpectralCache cache;
    cache.eigenvalues = es.eigenvalues();
    cache.eigenvectors = es.eigenvectors();
    cache.source_hash = source_hash;
    cache.symmetrization_correction = 0.5 * deviation;
    return cache;
}

inline SpectralCache diagonalize(const ModelParams& params) {
    params.validate();
    return diagonalize(build_hamiltonian(params), params.hamiltonian_hash());
}

namespace detail {

inline void check_dims(const JointState& s, const SpectralCache& cache) {
    if (s.amplitudes().size() != cache.dim())
        throw std::invalid_argument("evolve: state dimension " + std::to_string(s.amplitudes().size()) +
                                    " does not match spectral cache dimension " + std::to_string(cache.dim()));
}

inline JointState propagate(const JointState& initial, const SpectralCache& cache, const CVector& coeffs,
                            double tau, double tail_tolerance) {
    if (!(tau >= 0.0)) throw std::invalid_argument("evolve: tau must be >= 0");
    CVector phased(coeffs.size());
    for (Index k = 0; k < coeffs.size(); ++k)
        phased(k) = std::polar(1.0, -cache.eigenvalues(k) * tau) * coeffs(k);
    JointState out(initial.basis(), cache.eigenvectors * phased, tau);
    out.check_truncation(tail_tolerance);
    return out;
}

}  // namespace detail

/// |psi(tau)> = V exp(-i lambda tau) V^dagger |psi(0)>. Throws TruncationError
/// when the result leaks into the top two Fock levels.
inline JointState evolve(const JointState& initial, const SpectralCache& cache, double tau,
                         double tail_tolerance = tolerance::tail) {
    detail::check_dims(initial, cache);
    const CVector coeffs = cache.eigenvectors.adjoint() * initial.amplitudes();
    return detail::propagate(initial, cache, coeffs, tau, tail_tolerance);
}

/// evolve at each tau, sharing the eigenbasis projection of the initial state.
inline std::vector<JointState> evolve_series(const JointState& initial, const SpectralCache& cache,
                                             std::span<const double> taus,
                                             double tail_tolerance = tolerance::tail) {
    detail::check_dims(initial, cache);
    if (!std::is_sorted(taus.begin(), taus.end()))
        throw std::invalid_argument("evolve_series: taus must be sorted ascending");
    const CVector coeffs = cache.eigenvectors.adjoint() * initial.amplitudes();
    std::vector<JointState> out;
    out.reserve(taus.size());
    for (double tau : taus) out.push_back(detail::propagate(initial, cache, coeffs, tau, tail_tolerance));
    return out;
}

inline double energy_expectation(const JointState& s, const CMatrix& h) {
    return (s.amplitudes().adjoint() * h * s.amplitudes())(0, 0).real() / s.amplitudes().squaredNorm();
}

struct Evolution {
    JointState state;
    ModelParams params;  // parameters actually used (n_max may be escalated)
    bool escalated = false;
};

/// Evolve |q0>|n0> for params.tau. On a truncation failure the run is repeated
/// once at 2 n_max; a second failure propagates the TruncationError.
inline Evolution evolve_from(const ModelParams& params, Qubit q0 = Qubit::ground, int n0 = 0,
                             double tail_tolerance = tolerance::tail) {
    try {
        const SpectralCache cache = diagonalize(params);
        return {evolve(JointState::product(params.basis, q0, n0), cache, params.tau, tail_tolerance), params, false};
    } catch (const TruncationError&) {
        const ModelParams bigger = params.with_n_max(2 * params.basis.n_max());
        const SpectralCache cache = diagonalize(bigger);
        return {evolve(JointState::product(bigger.basis, q0, n0), cache, bigger.tau, tail_tolerance), bigger, true};
    }
}

}  // namespace rabi
