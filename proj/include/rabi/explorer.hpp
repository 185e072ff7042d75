// explorer.hpp: (g, tau) sweeps of the negativity, exact transition points
// and data sets for re-plotting the field-state figures.

#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rabi/io.hpp"
#include "rabi/model.hpp"
#include "rabi/parallel.hpp"
#include "rabi/propagator.hpp"
#include "rabi/state.hpp"
#include "rabi/threshold.hpp"
#include "rabi/wigner.hpp"

namespace rabi {

enum class Conditioning { none, g, e };

inline const char* to_string(Conditioning c) {
    switch (c) {
    case Conditioning::none: return "none";
    case Conditioning::g: return "g";
    case Conditioning::e: return "e";
    }
    return "none";
}

inline Conditioning conditioning_from_string(const std::string& s) {
    if (s == "none") return Conditioning::none;
    if (s == "g") return Conditioning::g;
    if (s == "e") return Conditioning::e;
    throw std::invalid_argument("unknown conditioning '" + s + "' (none, g, e)");
}

/// rho (none) or the normalized conditional state.
inline FieldState field_state(const JointState& psi, Conditioning c) {
    switch (c) {
    case Conditioning::none: return partial_trace_qubit(psi);
    case Conditioning::g: return condition_on_qubit(psi, Qubit::ground).field;
    case Conditioning::e: return condition_on_qubit(psi, Qubit::excited).field;
    }
    return partial_trace_qubit(psi);
}

inline double state_negativity(const JointState& psi, Conditioning c, const WignerOptions& wigner = {}) {
    return field_negativity(field_state(psi, c), wigner).delta;
}

/// Converts a tau given in units of pi/(2g) to an absolute time.
inline double tau_from_pi_over_2g(double value, double g) {
    if (!(g > 0.0)) throw std::invalid_argument("tau in units of pi/2g is undefined at g = 0");
    return value * std::numbers::pi / (2.0 * g);
}

struct SweepSpec {
    std::vector<double> g_values;
    std::vector<double> tau_values;
    /// tau_values are in units of pi/(2g) rather than absolute.
    bool tau_in_pi_over_2g = false;
    Conditioning conditioning = Conditioning::none;
    WignerOptions wigner;

    void validate() const {
        auto check = [](const std::vector<double>& axis, const char* name) {
            if (axis.empty()) throw std::invalid_argument(std::string(name) + " axis is empty");
            for (std::size_t i = 1; i < axis.size(); ++i)
                if (!(axis[i] > axis[i - 1]))
                    throw std::invalid_argument(std::string(name) + " axis must be strictly increasing");
        };
        check(g_values, "g");
        check(tau_values, "tau");
        for (double g : g_values)
            if (!(g >= 0.0)) throw std::invalid_argument("g values must be >= 0");
        for (double t : tau_values)
            if (!(t >= 0.0)) throw std::invalid_argument("tau values must be >= 0");
    }

    double absolute_tau(double g, double tau) const { return tau_in_pi_over_2g ? tau_from_pi_over_2g(tau, g) : tau; }
};

struct SurfacePoint {
    double g = 0.0;
    double tau = 0.0;  // absolute
    double delta = std::numeric_limits<double>::quiet_NaN();
    std::string status = "ok";  // "ok" or the failure message
    bool ok() const { return status == "ok"; }
};

/// Per-g spectral caches, with a lazily built 2 n_max fallback for points that
/// fail the truncation check.
class CacheSet {
public:
    explicit CacheSet(const ModelParams& params) : params_(params) {}

    const SpectralCache& primary() {
        std::call_once(primary_once_, [&] { primary_ = std::make_unique<SpectralCache>(diagonalize(params_)); });
        return *primary_;
    }

    const SpectralCache& escalated() {
        std::call_once(escalated_once_, [&] {
            escalated_ = std::make_unique<SpectralCache>(diagonalize(escalated_params()));
        });
        return *escalated_;
    }

    ModelParams escalated_params() const { return params_.with_n_max(2 * params_.basis.n_max()); }

    JointState evolve_ground(double tau) {
        try {
            return evolve(JointState::product(params_.basis, Qubit::ground, 0), primary(), tau);
        } catch (const TruncationError&) {
            return evolve(JointState::product(escalated_params().basis, Qubit::ground, 0), escalated(), tau);
        }
    }

private:
    ModelParams params_;
    std::once_flag primary_once_, escalated_once_;
    std::unique_ptr<SpectralCache> primary_, escalated_;
};

/// delta at every (g, tau) node, sorted by g then tau. One diagonalization per g.
inline std::vector<SurfacePoint> negativity_surface(const SweepSpec& spec, const ModelParams& params, int jobs = 1) {
    spec.validate();
    params.validate();
    const std::size_t ng = spec.g_values.size();
    const std::size_t nt = spec.tau_values.size();

    std::vector<std::unique_ptr<CacheSet>> caches;
    caches.reserve(ng);
    for (double g : spec.g_values) caches.push_back(std::make_unique<CacheSet>(params.with_g(g)));

    std::vector<SurfacePoint> out(ng * nt);
    WignerOptions wigner = spec.wigner;
    wigner.threads = 1;
    parallel_for(out.size(), jobs, [&](std::size_t idx) {
        const std::size_t gi = idx / nt;
        const std::size_t ti = idx % nt;
        SurfacePoint& pt = out[idx];
        pt.g = spec.g_values[gi];
        try {
            pt.tau = spec.absolute_tau(pt.g, spec.tau_values[ti]);
            const JointState psi = caches[gi]->evolve_ground(pt.tau);
            pt.delta = state_negativity(psi, spec.conditioning, wigner);
        } catch (const std::exception& e) {
            pt.delta = std::numeric_limits<double>::quiet_NaN();
            pt.status = e.what();
        }
    });
    return out;
}

/// CSV "g,tau,delta"; failed points carry delta = nan and a trailing comment.
inline void write_surface_csv(const std::vector<SurfacePoint>& surface, std::ostream& out,
                              const std::string& provenance = {}) {
    if (!provenance.empty()) out << "# " << provenance << '\n';
    for (const auto& pt : surface)
        if (!pt.ok()) out << "# failed g=" << format_double(pt.g) << " tau=" << format_double(pt.tau) << ": " << pt.status << '\n';
    out << "g,tau,delta\n";
    for (const auto& pt : surface)
        out << format_double(pt.g) << ',' << format_double(pt.tau) << ',' << (pt.ok() ? format_double(pt.delta) : "nan")
            << '\n';
}

struct ExactThresholdOptions {
    ThresholdOptions search;
    Conditioning conditioning = Conditioning::none;
    WignerOptions wigner;
};

/// Transition point of the exact dynamics along tau (g = params.g fixed) or
/// along g (tau = params.tau fixed).
inline ThresholdResult exact_threshold(const ModelParams& params, ThresholdAxis axis, Interval search, double epsilon,
                                       const ExactThresholdOptions& options) {
    params.validate();
    ThresholdResult r;
    if (axis == ThresholdAxis::tau) {
        CacheSet cache(params);
        r = locate_threshold(
            [&](double tau) { return state_negativity(cache.evolve_ground(tau), options.conditioning, options.wigner); },
            search, epsilon, options.search);
        r.fixed_value = params.g;
    } else {
        if (!(search.lo >= 0.0)) throw std::invalid_argument("g search interval must be non-negative");
        r = locate_threshold(
            [&](double g) {
                CacheSet cache(params.with_g(g));
                return state_negativity(cache.evolve_ground(params.tau), options.conditioning, options.wigner);
            },
            search, epsilon, options.search);
        r.fixed_value = params.tau;
    }
    r.parameter = axis;
    r.order = "exact";
    return r;
}

inline ThresholdResult exact_threshold(const ModelParams& params, ThresholdAxis axis, Interval search,
                                       double epsilon = 1e-10) {
    return exact_threshold(params, axis, search, epsilon, ExactThresholdOptions{ThresholdOptions::for_axis(axis), {}, {}});
}

// ---------------------------------------------------------------------------
// Figure data sets

enum class Figure { fig1, fig2, fig3, fig4 };

inline Figure figure_from_string(const std::string& s) {
    if (s == "fig1") return Figure::fig1;
    if (s == "fig2") return Figure::fig2;
    if (s == "fig3") return Figure::fig3;
    if (s == "fig4") return Figure::fig4;
    throw std::invalid_argument("unknown figure '" + s + "' (fig1..fig4)");
}

struct FigureOptions {
    ModelParams base;  // g and tau are overridden per data point
    WignerOptions wigner;
    int jobs = 1;
    /// fig3 axes; tau in units of pi.
    std::vector<double> fig3_g;
    std::vector<double> fig3_tau_over_pi;
    /// fig4 line: tau from 0 to fig4_tau_max_over_pi (units of pi).
    double fig4_g = 0.4;
    double fig4_tau_max_over_pi = 1.2;
    double fig4_step_over_pi = 0.005;
    std::string provenance;
};

struct Fig1Row {
    double g;
    double tau_over_pi_over_2g;
};

/// The four (g, tau) rows of the Wigner-function figure, tau in units of pi/(2g).
inline std::vector<Fig1Row> fig1_rows() { return {{0.5, 1.0}, {1.5, 1.0}, {1.0, 0.75}, {1.0, 1.5}}; }

namespace detail {

inline std::vector<double> arange(double start, double stop, double step) {
    std::vector<double> v;
    const long n = std::lround(std::floor((stop - start) / step + 1e-9));
    for (long k = 0; k <= n; ++k) v.push_back(start + static_cast<double>(k) * step);
    return v;
}

inline void write_header(std::ostream& out, const std::string& provenance) {
    if (!provenance.empty()) out << "# " << provenance << '\n';
}

}  // namespace detail

/// Writes the files needed to re-plot one figure into `dir`; returns their paths.
inline std::vector<std::filesystem::path> figure_dataset(Figure which, const std::filesystem::path& dir,
                                                         FigureOptions options = {}) {
    std::vector<std::filesystem::path> written;
    static constexpr Conditioning kinds[3] = {Conditioning::none, Conditioning::g, Conditioning::e};
    static constexpr const char* kind_names[3] = {"rho", "rho_g", "rho_e"};

    switch (which) {
    case Figure::fig1: {
        json summary{{"provenance", options.provenance}, {"convention", WignerGrid::convention}, {"panels", json::array()}};
        int row_no = 1;
        for (const auto& row : fig1_rows()) {
            const double tau = tau_from_pi_over_2g(row.tau_over_pi_over_2g, row.g);
            const JointState psi = evolve_from(options.base.with_g(row.g).with_tau(tau)).state;
            for (int k = 0; k < 3; ++k) {
                const WignerGrid grid = wigner_function(field_state(psi, kinds[k]), options.wigner);
                const NegativityResult neg = negativity(grid);
                const auto path = dir / ("fig1_row" + std::to_string(row_no) + "_" + kind_names[k] + ".csv");
                auto out = open_output(path);
                write_csv(grid, out, options.provenance);
                written.push_back(path);
                summary["panels"].push_back({{"row", row_no},
                                             {"g", row.g},
                                             {"tau", tau},
                                             {"tau_over_pi_over_2g", row.tau_over_pi_over_2g},
                                             {"state", kind_names[k]},
                                             {"delta", neg.delta},
                                             {"file", path.filename().string()}});
            }
            ++row_no;
        }
        const auto path = dir / "fig1_summary.json";
        open_output(path) << summary.dump(2) << '\n';
        written.push_back(path);
        break;
    }
    case Figure::fig2: {
        for (double g : {0.5, 1.5}) {
            const double tau = tau_from_pi_over_2g(1.0, g);
            const JointState psi = evolve_from(options.base.with_g(g).with_tau(tau)).state;
            for (int k = 0; k < 3; ++k) {
                const RVector p = populations(field_state(psi, kinds[k]));
                const auto path = dir / ("fig2_g" + format_double(g) + "_" + kind_names[k] + ".csv");
                auto out = open_output(path);
                detail::write_header(out, options.provenance);
                out << "n,p\n";
                for (Index n = 0; n < p.size(); ++n) out << n << ',' << format_double(p(n)) << '\n';
                written.push_back(path);
            }
        }
        break;
    }
    case Figure::fig3: {
        SweepSpec spec;
        spec.g_values = options.fig3_g.empty() ? detail::arange(0.0, 1.5, 0.1) : options.fig3_g;
        const std::vector<double> taus_pi =
            options.fig3_tau_over_pi.empty() ? detail::arange(0.0, 1.0, 0.05) : options.fig3_tau_over_pi;
        for (double t : taus_pi) spec.tau_values.push_back(t * std::numbers::pi);
        spec.wigner = options.wigner;
        const auto surface = negativity_surface(spec, options.base, options.jobs);
        const auto path = dir / "fig3_surface.csv";
        auto out = open_output(path);
        write_surface_csv(surface, out, options.provenance);
        written.push_back(path);
        break;
    }
    case Figure::fig4: {
        SweepSpec spec;
        spec.g_values = {options.fig4_g};
        for (double t : detail::arange(0.0, options.fig4_tau_max_over_pi, options.fig4_step_over_pi))
            spec.tau_values.push_back(t * std::numbers::pi);
        spec.wigner = options.wigner;
        const auto surface = negativity_surface(spec, options.base, options.jobs);
        const auto lin = dir / "fig4_linear.csv";
        const auto log = dir / "fig4_log.csv";
        auto out_lin = open_output(lin);
        auto out_log = open_output(log);
        detail::write_header(out_lin, options.provenance);
        detail::write_header(out_log, options.provenance);
        out_lin << "tau_over_pi,delta\n";
        // delta <= 1e-300 is written as -300.
        out_log << "tau_over_pi,log10_delta\n";
        for (const auto& pt : surface) {
            const std::string t = format_double(pt.tau / std::numbers::pi);
            out_lin << t << ',' << (pt.ok() ? format_double(pt.delta) : "nan") << '\n';
            out_log << t << ',' << (pt.ok() ? format_double(std::log10(std::max(pt.delta, 1e-300))) : "nan") << '\n';
        }
        written.push_back(lin);
        written.push_back(log);
        break;
    }
    }
    return written;
}

}  // namespace rabi
