// wigner.hpp: Wigner function of a field state and its negativity volume.
//
// Convention: hbar = 1, x = (a + a^dagger)/sqrt(2), p = (a - a^dagger)/(i sqrt(2)).
// The vacuum is W = exp(-(x^2 + p^2))/pi and, with t = 2(x^2 + p^2), the
// Fock-basis kernel for |m><n|, m = n + k >= n, is
//
//   K_{mn}(x, p) = (-1)^n / pi * sqrt(n!/m!) * (sqrt(2)(x - i p))^k * exp(-t/2) * L_n^(k)(t),
//
// with K_{nm} = conj(K_{mn}).
//
// Negativity: delta = ∬ (|W| - W) dx dp = 2 ∬_{W<0} |W| dx dp.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rabi/io.hpp"
#include "rabi/parallel.hpp"
#include "rabi/state.hpp"

namespace rabi {

namespace detail {
/// Populations below this (and the coherences they bound) are dropped from the kernel sum.
inline constexpr double kernel_population_cutoff = 1e-30;
inline constexpr double boundary_tolerance = 1e-8;
inline constexpr double imaginary_tolerance = 1e-10;
}  // namespace detail

/// Point evaluator for W of a fixed density matrix.
class WignerKernel {
public:
    struct Value {
        double w;
        double imag_residue;
    };

    explicit WignerKernel(const FieldState& field) {
        const RVector p = populations(field);
        Index last = 0;
        for (Index n = 0; n < p.size(); ++n)
            if (p(n) > detail::kernel_population_cutoff) last = n;
        dim_ = last + 1;
        const CMatrix& rho = field.matrix();
        // diagonal k of rho with (-1)^n folded in, and the Laguerre recurrence
        // coefficients, both stored contiguously per k
        lower_.resize(static_cast<std::size_t>(dim_));
        upper_.resize(static_cast<std::size_t>(dim_));
        rec_a_.resize(static_cast<std::size_t>(dim_));
        rec_b_.resize(static_cast<std::size_t>(dim_));
        rec_c_.resize(static_cast<std::size_t>(dim_));
        for (Index k = 0; k < dim_; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const double kd = static_cast<double>(k);
            for (Index n = 0; n + k < dim_; ++n) {
                const double sign = (n % 2 == 0) ? 1.0 : -1.0;
                const double nd = static_cast<double>(n);
                lower_[kk].push_back(sign * rho(n + k, n));
                upper_[kk].push_back(sign * rho(n, n + k));
                const double norm = 1.0 / std::sqrt((nd + 1.0) * (nd + kd + 1.0));
                rec_a_[kk].push_back((2.0 * nd + kd + 1.0) * norm);
                rec_b_[kk].push_back(norm);
                rec_c_[kk].push_back(std::sqrt(nd * (nd + kd)) * norm);
            }
        }
    }

    /// Number of Fock levels that enter the sum.
    Index effective_dim() const noexcept { return dim_; }

    Value evaluate(double x, double p) const {
        const double r2 = x * x + p * p;
        const double t = 2.0 * r2;
        const Complex unit = r2 > 0.0 ? Complex{x, -p} / std::sqrt(r2) : Complex{1.0, 0.0};

        Complex total{0.0, 0.0};
        Complex phase{1.0, 0.0};  // unit^k
        double f0 = std::exp(-0.5 * t);  // f_{0,k} = t^{k/2} e^{-t/2} / sqrt(k!)
        for (Index k = 0; k < dim_; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            if (k > 0) {
                if (r2 == 0.0) break;
                phase *= unit;
                f0 *= std::sqrt(t / static_cast<double>(k));
            }
            const Complex* lo = lower_[kk].data();
            const Complex* up = upper_[kk].data();
            const double* a = rec_a_[kk].data();
            const double* b = rec_b_[kk].data();
            const double* c = rec_c_[kk].data();
            const std::size_t len = lower_[kk].size();
            double f_prev = 0.0;
            double f = f0;
            Complex lower{0.0, 0.0};  // sum over rho(n + k, n)
            Complex upper{0.0, 0.0};  // sum over rho(n, n + k)
            for (std::size_t n = 0; n < len; ++n) {
                lower += lo[n] * f;
                upper += up[n] * f;
                const double f_next = (a[n] - t * b[n]) * f - c[n] * f_prev;
                f_prev = f;
                f = f_next;
            }
            total += lower * phase;
            if (k > 0) total += upper * std::conj(phase);
        }
        total /= std::numbers::pi;
        return {total.real(), std::abs(total.imag())};
    }

    double operator()(double x, double p) const { return evaluate(x, p).w; }

private:
    Index dim_ = 1;
    std::vector<std::vector<Complex>> lower_, upper_;
    std::vector<std::vector<double>> rec_a_, rec_b_, rec_c_;
};

/// W sampled on a square, odd-sized grid centred at the origin.
struct WignerGrid {
    double x_min = 0.0, x_max = 0.0, p_min = 0.0, p_max = 0.0;
    double step = 0.0;
    int nx = 0, np = 0;
    std::vector<double> values;  // row-major: x index slow, p index fast
    double max_imag_residue = 0.0;
    double boundary_max = 0.0;
    std::vector<std::string> warnings;
    /// Source state; lets negativity() refine panels where W changes sign.
    std::shared_ptr<const FieldState> source;

    static constexpr const char* convention = "hbar=1, x=(a+a^dagger)/sqrt(2), p=(a-a^dagger)/(i sqrt(2))";

    double x(int i) const { return static_cast<double>(i - (nx - 1) / 2) * step; }
    double p(int j) const { return static_cast<double>(j - (np - 1) / 2) * step; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(np) + j]; }

    /// Composite Simpson integral of fn(W) over the grid.
    template <class Fn>
    double integrate(Fn&& fn) const {
        const auto weight = [](int i, int n) { return (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0); };
        double acc = 0.0;
        for (int i = 0; i < nx; ++i) {
            double row = 0.0;
            for (int j = 0; j < np; ++j) row += weight(j, np) * fn(at(i, j));
            acc += weight(i, nx) * row;
        }
        return acc * step * step / 9.0;
    }

    /// ∬ W dx dp
    double integral() const {
        return integrate([](double w) { return w; });
    }

    /// ∬ W^2 dx dp; equals Tr(rho^2) / (2 pi).
    double integral_squared() const {
        return integrate([](double w) { return w * w; });
    }

    double min_value() const { return *std::min_element(values.begin(), values.end()); }
};

struct WignerOptions {
    /// Half-width of the square grid; automatic when empty.
    std::optional<double> extent;
    double step = 0.05;
    int threads = 1;
};

/// L = sqrt(2 n_eff + 1) + 3, n_eff the smallest n with cumulative population >= 1 - 1e-8.
inline double auto_extent(const FieldState& field) {
    const RVector p = populations(field);
    double cumulative = 0.0;
    Index n_eff = p.size() - 1;
    for (Index n = 0; n < p.size(); ++n) {
        cumulative += p(n);
        if (cumulative >= 1.0 - 1e-8) {
            n_eff = n;
            break;
        }
    }
    return std::sqrt(2.0 * static_cast<double>(n_eff) + 1.0) + 3.0;
}

namespace detail {

inline WignerGrid sample_grid(const WignerKernel& kernel, double extent, double step, int threads) {
    const int half = static_cast<int>(std::ceil(extent / step - 1e-9));
    WignerGrid grid;
    grid.step = step;
    grid.nx = grid.np = 2 * half + 1;
    grid.x_min = grid.p_min = -half * step;
    grid.x_max = grid.p_max = half * step;
    grid.values.assign(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.np), 0.0);
    std::vector<double> row_imag(static_cast<std::size_t>(grid.nx), 0.0);
    parallel_for(static_cast<std::size_t>(grid.nx), threads, [&](std::size_t i) {
        const double xv = static_cast<double>(static_cast<int>(i) - half) * step;
        double imag = 0.0;
        for (int j = 0; j < grid.np; ++j) {
            const auto v = kernel.evaluate(xv, static_cast<double>(j - half) * step);
            grid.values[i * static_cast<std::size_t>(grid.np) + static_cast<std::size_t>(j)] = v.w;
            imag = std::max(imag, v.imag_residue);
        }
        row_imag[i] = imag;
    });
    grid.max_imag_residue = *std::max_element(row_imag.begin(), row_imag.end());
    double boundary = 0.0;
    for (int k = 0; k < grid.nx; ++k) {
        boundary = std::max({boundary, std::abs(grid.at(0, k)), std::abs(grid.at(grid.nx - 1, k)),
                             std::abs(grid.at(k, 0)), std::abs(grid.at(k, grid.np - 1))});
    }
    grid.boundary_max = boundary;
    return grid;
}

}  // namespace detail

/// Samples W on [-L, L]^2. With an automatic extent the box grows until the
/// boundary |W| drops below 1e-8; an explicit extent that is too small only
/// records a warning.
inline WignerGrid wigner_function(const FieldState& field, const WignerOptions& options = {}) {
    if (!(options.step > 0.0)) throw std::invalid_argument("wigner_function: step must be > 0");
    if (options.extent && !(*options.extent > 0.0)) throw std::invalid_argument("wigner_function: extent must be > 0");

    const WignerKernel kernel(field);
    double extent = options.extent.value_or(auto_extent(field));
    WignerGrid grid = detail::sample_grid(kernel, extent, options.step, options.threads);
    if (!options.extent) {
        for (int attempt = 0; attempt < 16 && grid.boundary_max > detail::boundary_tolerance; ++attempt) {
            extent += 1.0;
            grid = detail::sample_grid(kernel, extent, options.step, options.threads);
        }
    }
    if (grid.boundary_max > detail::boundary_tolerance)
        grid.warnings.push_back("boundary |W| = " + format_double(grid.boundary_max) + " exceeds 1e-8 at extent " +
                                format_double(grid.x_max));
    if (grid.max_imag_residue > detail::imaginary_tolerance)
        throw std::domain_error("wigner_function: imaginary residue " + format_double(grid.max_imag_residue) +
                                " (density matrix not Hermitian?)");
    grid.source = std::make_shared<const FieldState>(field);
    return grid;
}

inline WignerGrid wigner_function(const FieldState& field, std::optional<double> extent, double step) {
    return wigner_function(field, WignerOptions{extent, step, 1});
}

struct NegativityResult {
    double delta = 0.0;
    double negative_mass = 0.0;  // ∬_{W<0} |W|
    double extent = 0.0;
    double step = 0.0;
    int refined_panels = 0;
};

struct NegativityOptions {
    /// Maximum bisection depth for panels with negative nodes.
    int refine_depth = 7;
    /// |W| below this counts as zero.
    double sign_floor = 1e-13;
    /// Split tolerance for panels straddling W = 0.
    double refine_tolerance = 1e-12;
    /// Split tolerance for wholly negative panels.
    double smooth_tolerance = 1e-9;
};

namespace detail {

using Panel = std::array<std::array<double, 3>, 3>;

inline double simpson_negative_part(const Panel& w, double half_width) {
    static constexpr double wt[3] = {1.0, 4.0, 1.0};
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc += wt[i] * wt[j] * std::max(-w[i][j], 0.0);
    return acc * half_width * half_width / 9.0;
}

inline bool changes_sign(const Panel& w, double floor) {
    bool pos = false, neg = false;
    for (const auto& row : w)
        for (double v : row) {
            pos = pos || v > floor;
            neg = neg || v < -floor;
        }
    return pos && neg;
}

inline bool has_negative_node(const Panel& w, double floor) {
    for (const auto& row : w)
        for (double v : row)
            if (v < -floor) return true;
    return false;
}

/// ∬ max(-W, 0) over [x0, x0 + 2h] x [p0, p0 + 2h] given W at the 3x3 nodes
/// and the panel's plain Simpson value. Panels with negative nodes are split
/// in four until the split changes the estimate by less than the tolerance
/// (or depth runs out). Panels straddling W = 0 use the split value as is;
/// wholly negative panels take the Richardson-corrected value.
inline double refine_panel(const WignerKernel& kernel, double x0, double p0, double h, const Panel& w, double coarse,
                           int depth, const NegativityOptions& opt, int& refined) {
    if (depth == 0 || !has_negative_node(w, opt.sign_floor)) return coarse;
    const bool kink = changes_sign(w, opt.sign_floor);
    ++refined;
    const double q = 0.5 * h;
    std::array<std::array<double, 5>, 5> fine{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            fine[i][j] = (i % 2 == 0 && j % 2 == 0) ? w[i / 2][j / 2] : kernel(x0 + i * q, p0 + j * q);
    std::array<Panel, 4> sub;
    std::array<double, 4> value;
    double sum = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const auto idx = static_cast<std::size_t>(2 * a + b);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) sub[idx][i][j] = fine[2 * a + i][2 * b + j];
            value[idx] = simpson_negative_part(sub[idx], q);
            sum += value[idx];
        }
    const double change = std::abs(sum - coarse);
    if (kink && change < opt.refine_tolerance) return sum;
    if (!kink && change < opt.smooth_tolerance) return sum + (sum - coarse) / 15.0;
    double acc = 0.0;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        const double sx = x0 + static_cast<double>(idx / 2) * h;
        const double sp = p0 + static_cast<double>(idx % 2) * h;
        acc += refine_panel(kernel, sx, sp, q, sub[idx], value[idx], depth - 1, opt, refined);
    }
    return acc;
}

}  // namespace detail

/// Composite Simpson evaluation of delta. When the grid carries its source
/// state, panels with negative nodes are refined adaptively (see refine_panel)
/// so neither the kink of max(-W, 0) nor the step limits accuracy.
inline NegativityResult negativity(const WignerGrid& grid, const NegativityOptions& options = {}) {
    NegativityResult result;
    result.extent = grid.x_max;
    result.step = grid.step;
    if (grid.nx < 3 || grid.np < 3 || grid.nx % 2 == 0 || grid.np % 2 == 0)
        throw std::invalid_argument("negativity: grid must have an odd node count >= 3 per axis");

    std::optional<WignerKernel> kernel;
    if (grid.source && options.refine_depth > 0) kernel.emplace(*grid.source);

    double acc = 0.0;
    for (int i = 0; i + 2 < grid.nx; i += 2) {
        for (int j = 0; j + 2 < grid.np; j += 2) {
            detail::Panel w;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) w[a][b] = grid.at(i + a, j + b);
            if (kernel)
                acc += detail::refine_panel(*kernel, grid.x(i), grid.p(j), grid.step, w,
                                            detail::simpson_negative_part(w, grid.step), options.refine_depth, options,
                                            result.refined_panels);
            else
                acc += detail::simpson_negative_part(w, grid.step);
        }
    }
    result.negative_mass = acc;
    result.delta = 2.0 * acc;
    return result;
}

/// Wigner grid + delta for a field state.
inline NegativityResult field_negativity(const FieldState& field, const WignerOptions& options = {}) {
    return negativity(wigner_function(field, options));
}

/// CSV: optional "# ..." provenance line, header "x,p,w", one row per node,
/// x slow and p fast.
inline void write_csv(const WignerGrid& grid, std::ostream& out, const std::string& provenance = {}) {
    if (!provenance.empty()) out << "# " << provenance << '\n';
    out << "x,p,w\n";
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.np; ++j)
            out << format_double(grid.x(i)) << ',' << format_double(grid.p(j)) << ',' << format_double(grid.at(i, j))
                << '\n';
}

/// gnuplot matrix block: comment lines with the axes, then one line per x
/// holding W at every p separated by spaces. Successive grids written to the
/// same stream are separated by two blank lines (gnuplot `index`).
inline void write_gnuplot_matrix(const WignerGrid& grid, std::ostream& out, const std::string& provenance = {},
                                 bool leading_separator = false) {
    if (leading_separator) out << "\n\n";
    if (!provenance.empty()) out << "# " << provenance << '\n';
    out << "# rows: x from " << format_double(grid.x_min) << " to " << format_double(grid.x_max) << " step "
        << format_double(grid.step) << "; columns: p from " << format_double(grid.p_min) << " to "
        << format_double(grid.p_max) << '\n';
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.np; ++j) {
            if (j) out << ' ';
            out << format_double(grid.at(i, j));
        }
        out << '\n';
    }
}

}  // namespace rabi
