// model.hpp: Rabi Hamiltonian with a suddenly switched coupling.
//
//   H(t)   = H_0 + f(t) H_I
//   H_0    = -1/2 omega_a sigma_z + omega (a^dagger a + 1/2)
//   H_I    = g (sigma_+ + sigma_-)(a + a^dagger)          full model
//   H_I    = g (sigma_+ a + sigma_- a^dagger)             rotating-wave (Jaynes-Cummings)
//   f(t)   = 1 for 0 <= t <= tau, 0 otherwise
//
// Units: hbar = 1; times are in 1/omega when omega = 1.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

#include "rabi/serialization.hpp"
#include "rabi/state.hpp"

namespace rabi {

enum class Switching { step };

inline const char* to_string(Switching) { return "step"; }

inline Switching switching_from_string(const std::string& s) {
    if (s == "step") return Switching::step;
    throw std::invalid_argument("unsupported switching profile '" + s + "' (only 'step')");
}

struct ModelParams {
    double omega = 1.0;
    double omega_a = 1.0;
    double g = 0.0;
    double tau = 0.0;
    FockBasis basis{60};
    bool rwa = false;
    Switching switching = Switching::step;

    bool resonant() const noexcept { return omega == omega_a; }

    void validate() const {
        if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
        if (!(omega_a > 0.0)) throw std::invalid_argument("omega_a must be > 0");
        if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("g must be a finite real >= 0");
        if (!(tau >= 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be a finite real >= 0");
    }

    ModelParams with_g(double value) const {
        ModelParams p = *this;
        p.g = value;
        return p;
    }

    ModelParams with_tau(double value) const {
        ModelParams p = *this;
        p.tau = value;
        return p;
    }

    ModelParams with_n_max(int n_max) const {
        ModelParams p = *this;
        p.basis = FockBasis(n_max);
        return p;
    }

    /// Fingerprint of everything that determines H (tau excluded).
    std::uint64_t hamiltonian_hash() const {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](const void* data, std::size_t n) {
            const auto* bytes = static_cast<const unsigned char*>(data);
            for (std::size_t i = 0; i < n; ++i) {
                h ^= bytes[i];
                h *= 1099511628211ULL;
            }
        };
        const int n_max = basis.n_max();
        const int flags = (rwa ? 1 : 0) | (static_cast<int>(switching) << 1);
        mix(&omega, sizeof omega);
        mix(&omega_a, sizeof omega_a);
        mix(&g, sizeof g);
        mix(&n_max, sizeof n_max);
        mix(&flags, sizeof flags);
        return h;
    }
};

/// f(t) for the given profile.
inline double switching_profile(Switching s, double t, double tau) {
    switch (s) {
    case Switching::step: return (t >= 0.0 && t <= tau) ? 1.0 : 0.0;
    }
    return 0.0;
}

inline CMatrix build_h0(const ModelParams& params) {
    const FockBasis& b = params.basis;
    const CMatrix field = params.omega * (number_matrix(b) + 0.5 * CMatrix::Identity(b.dim(), b.dim()));
    return -0.5 * params.omega_a * qubit_field_tensor(ops::sigma_z(), CMatrix::Identity(b.dim(), b.dim())) +
           qubit_field_tensor(ops::identity2(), field);
}

inline CMatrix build_interaction(const ModelParams& params) {
    const FockBasis& b = params.basis;
    const CMatrix a = annihilation_matrix(b);
    const CMatrix ad = a.adjoint();
    if (params.rwa)
        return params.g * (qubit_field_tensor(ops::sigma_plus(), a) + qubit_field_tensor(ops::sigma_minus(), ad));
    return params.g * qubit_field_tensor(ops::sigma_x(), a + ad);
}

/// H during the on-interval 0 <= t <= tau.
inline CMatrix build_hamiltonian(const ModelParams& params) { return build_h0(params) + build_interaction(params); }

/// H(t) including the switching profile.
inline CMatrix build_hamiltonian_at(const ModelParams& params, double t) {
    const double f = switching_profile(params.switching, t, params.tau);
    return f == 0.0 ? build_h0(params) : CMatrix(build_h0(params) + f * build_interaction(params));
}

/// Pi = sigma_z (-1)^{a^dagger a}, diagonal +/-1.
inline CMatrix parity_operator(const FockBasis& basis) {
    CMatrix field = CMatrix::Zero(basis.dim(), basis.dim());
    for (Index n = 0; n < basis.dim(); ++n) field(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    return qubit_field_tensor(ops::sigma_z(), field);
}

inline json to_json(const ModelParams& p) {
    return json{{"omega", p.omega},  {"omega_a", p.omega_a},         {"g", p.g},
                {"tau", p.tau},      {"n_max", p.basis.n_max()},     {"rwa", p.rwa},
                {"switching", to_string(p.switching)}};
}

/// Missing keys keep their defaults; unknown keys are rejected.
inline ModelParams model_params_from_json(const json& j, ModelParams base = {}) {
    detail::reject_unknown_keys(j, {"omega", "omega_a", "g", "tau", "n_max", "rwa", "switching"}, "ModelParams");
    if (j.contains("omega")) base.omega = j["omega"].get<double>();
    if (j.contains("omega_a")) base.omega_a = j["omega_a"].get<double>();
    if (j.contains("g")) base.g = j["g"].get<double>();
    if (j.contains("tau")) base.tau = j["tau"].get<double>();
    if (j.contains("n_max")) base.basis = FockBasis(j["n_max"].get<int>());
    if (j.contains("rwa")) base.rwa = j["rwa"].get<bool>();
    if (j.contains("switching")) base.switching = switching_from_string(j["switching"].get<std::string>());
    base.validate();
    return base;
}

}  // namespace rabi
