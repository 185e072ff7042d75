// dyson.hpp: time-dependent perturbation theory for the initial state |g>|0>.
//
// In the interaction picture (H_0 unperturbed, H_I the coupling) the order-j
// amplitudes obey
//
//   c^(0)_s(t) = delta_{s, |g,0>}
//   c^(j)_s(t) = -i sum_{s'} <s|H_I|s'> ∫_0^t exp(i (E_s - E_s') t') c^(j-1)_{s'}(t') dt'
//
// At resonance (omega = omega_a) every E_s is an integer multiple of omega, so
// each c^(j)_s is a finite sum of terms t^p exp(i m omega t) and the nested
// integrals are done in closed form. The Schrödinger-picture contribution is
// psi^(j)_s(tau) = exp(-i E_s tau) c^(j)_s(tau).

#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rabi/model.hpp"
#include "rabi/state.hpp"
#include "rabi/threshold.hpp"
#include "rabi/wigner.hpp"

namespace rabi {

inline constexpr int max_dyson_order = 4;

/// Finite sum  sum_{(m, p)} c_{m,p} t^p exp(i m omega t).
class ExpPoly {
public:
    using Key = std::pair<int, int>;  // (frequency multiple m, power p)

    void add(int m, int p, Complex c) {
        if (c == Complex{0.0, 0.0}) return;
        terms_[{m, p}] += c;
    }

    bool empty() const noexcept { return terms_.empty(); }
    const std::map<Key, Complex>& terms() const noexcept { return terms_; }

    Complex operator()(double t, double omega) const {
        Complex acc{0.0, 0.0};
        for (const auto& [key, c] : terms_)
            acc += c * std::pow(t, key.second) * std::polar(1.0, key.first * omega * t);
        return acc;
    }

    /// Multiplies by exp(i dm omega t) and scales by `factor`.
    ExpPoly shifted(int dm, Complex factor) const {
        ExpPoly out;
        for (const auto& [key, c] : terms_) out.add(key.first + dm, key.second, factor * c);
        return out;
    }

    /// ∫_0^t f(t') dt'
    ExpPoly integrated(double omega) const {
        ExpPoly out;
        for (const auto& [key, c] : terms_) {
            const auto [m, p] = key;
            if (m == 0) {
                out.add(0, p + 1, c / static_cast<double>(p + 1));
                continue;
            }
            // I_p = t^p e^{iWt}/(iW) - p/(iW) I_{p-1},  I_0 = (e^{iWt} - 1)/(iW)
            const Complex iw{0.0, m * omega};
            Complex f{1.0, 0.0};
            for (int q = p; q >= 0; --q) {
                out.add(m, q, c * f / iw);
                if (q == 0) out.add(0, 0, -c * f / iw);
                f = -f * static_cast<double>(q) / iw;
            }
        }
        return out;
    }

    ExpPoly& operator+=(const ExpPoly& other) {
        for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
        return *this;
    }

private:
    std::map<Key, Complex> terms_;
};

/// Closed-form Dyson terms up to a maximum order for initial |g>|0>.
class DysonExpansion {
public:
    DysonExpansion(const ModelParams& params, int max_order) : basis_(params.basis), omega_(params.omega) {
        params.validate();
        if (max_order < 0 || max_order > max_dyson_order)
            throw std::invalid_argument("Dyson order " + std::to_string(max_order) + " unsupported (0..4)");
        if (params.rwa) throw std::invalid_argument("Dyson expansion requires the full (non-RWA) model");
        if (!params.resonant()) throw std::invalid_argument("closed-form Dyson terms require omega == omega_a");
        if (max_order >= basis_.n_max())
            throw std::invalid_argument("Dyson order " + std::to_string(max_order) + " needs n_max > order");

        const Index dim = basis_.joint_dim();
        const CMatrix h0 = build_h0(params);
        level_.resize(static_cast<std::size_t>(dim));
        for (Index s = 0; s < dim; ++s) {
            const double m = h0(s, s).real() / omega_;
            level_[static_cast<std::size_t>(s)] = static_cast<int>(std::lround(m));
            if (std::abs(m - std::round(m)) > 1e-12)
                throw std::logic_error("unperturbed level is not an integer multiple of omega");
        }

        const CMatrix hi = build_interaction(params);
        couplings_.resize(static_cast<std::size_t>(dim));
        for (Index col = 0; col < dim; ++col)
            for (Index row = 0; row < dim; ++row)
                if (hi(row, col) != Complex{0.0, 0.0})
                    couplings_[static_cast<std::size_t>(col)].push_back({row, hi(row, col)});

        orders_.assign(static_cast<std::size_t>(max_order) + 1, std::vector<ExpPoly>(static_cast<std::size_t>(dim)));
        orders_[0][static_cast<std::size_t>(joint_index(basis_, Qubit::ground, 0))].add(0, 0, 1.0);
        const Complex minus_i{0.0, -1.0};
        for (std::size_t j = 1; j < orders_.size(); ++j) {
            for (Index src = 0; src < dim; ++src) {
                const ExpPoly& prev = orders_[j - 1][static_cast<std::size_t>(src)];
                if (prev.empty()) continue;
                for (const auto& [dst, h] : couplings_[static_cast<std::size_t>(src)]) {
                    const int dm = level_[static_cast<std::size_t>(dst)] - level_[static_cast<std::size_t>(src)];
                    orders_[j][static_cast<std::size_t>(dst)] += prev.shifted(dm, minus_i * h).integrated(omega_);
                }
            }
        }
    }

    int max_order() const noexcept { return static_cast<int>(orders_.size()) - 1; }
    const FockBasis& basis() const noexcept { return basis_; }

    /// Interaction-picture coefficient polynomial of order j on joint index s.
    const ExpPoly& coefficient(int j, Index s) const {
        return orders_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(s));
    }

    /// Schrödinger-picture order-j contribution psi^(j)(tau).
    CVector term(int j, double tau) const {
        const auto& polys = orders_.at(static_cast<std::size_t>(j));
        CVector v = CVector::Zero(basis_.joint_dim());
        for (Index s = 0; s < v.size(); ++s) {
            const ExpPoly& c = polys[static_cast<std::size_t>(s)];
            if (c.empty()) continue;
            v(s) = std::polar(1.0, -level_[static_cast<std::size_t>(s)] * omega_ * tau) * c(tau, omega_);
        }
        return v;
    }

    /// sum_{j <= k} psi^(j)(tau), unnormalized.
    CVector partial_sum(int k, double tau) const {
        if (k < 0 || k > max_order()) throw std::invalid_argument("partial_sum: order out of range");
        CVector v = term(0, tau);
        for (int j = 1; j <= k; ++j) v += term(j, tau);
        return v;
    }

private:
    struct Coupling {
        Index row;
        Complex value;
    };

    FockBasis basis_;
    double omega_;
    std::vector<int> level_;
    std::vector<std::vector<Coupling>> couplings_;
    std::vector<std::vector<ExpPoly>> orders_;
};

struct DysonState {
    /// Truncated series, unnormalized.
    JointState state;
    /// Norm of the truncated series.
    double norm = 0.0;
    /// Norm of each order's contribution, j = 0..k.
    std::vector<double> order_norms;

    JointState normalized() const { return state.normalized(); }
};

inline DysonState dyson_state(const DysonExpansion& expansion, int k, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("dyson_state: tau must be >= 0");
    DysonState out{JointState(expansion.basis(), expansion.partial_sum(k, tau), tau), 0.0, {}};
    out.norm = out.state.norm();
    for (int j = 0; j <= k; ++j) out.order_norms.push_back(expansion.term(j, tau).norm());
    return out;
}

inline DysonState dyson_state(const ModelParams& params, int k, double tau) {
    return dyson_state(DysonExpansion(params, k), k, tau);
}

/// delta of the unconditional field state of the normalized order-k series.
inline double dyson_negativity(const DysonExpansion& expansion, int k, double tau, const WignerOptions& wigner = {}) {
    const JointState psi = dyson_state(expansion, k, tau).normalized();
    return field_negativity(partial_trace_qubit(psi), wigner).delta;
}

/// Smallest tau in the search interval where the normalized order-k series
/// has delta > epsilon.
inline ThresholdResult perturbative_threshold(const ModelParams& params, int k, Interval tau_search, double epsilon,
                                              const ThresholdOptions& options = {},
                                              const WignerOptions& wigner = {}) {
    if (k != 2 && k != 4) throw std::invalid_argument("perturbative threshold supports orders 2 and 4");
    const DysonExpansion expansion(params, k);
    ThresholdResult r = locate_threshold([&](double tau) { return dyson_negativity(expansion, k, tau, wigner); },
                                         tau_search, epsilon, options);
    r.parameter = ThresholdAxis::tau;
    r.order = std::to_string(k);
    r.fixed_value = params.g;
    return r;
}

}  // namespace rabi
