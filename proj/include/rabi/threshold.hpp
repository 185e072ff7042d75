// threshold.hpp: locating the onset of Wigner negativity along one parameter.

#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rabi/serialization.hpp"

namespace rabi {

enum class ThresholdAxis { tau, g };

inline const char* to_string(ThresholdAxis a) { return a == ThresholdAxis::tau ? "tau" : "g"; }

inline ThresholdAxis threshold_axis_from_string(const std::string& s) {
    if (s == "tau") return ThresholdAxis::tau;
    if (s == "g") return ThresholdAxis::g;
    throw std::invalid_argument("unknown threshold axis '" + s + "'");
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct ThresholdOptions {
    /// Final bracket width.
    double resolution = 1e-3 * std::numbers::pi;
    /// Forward scan step used to find the first sample above epsilon. A step
    /// wider than the interval reduces the search to plain bisection.
    double scan_step = 1e-2 * std::numbers::pi;

    static ThresholdOptions for_axis(ThresholdAxis axis) {
        if (axis == ThresholdAxis::tau) return {};
        return {1e-3, 1e-2};
    }
};

struct ThresholdResult {
    ThresholdAxis parameter = ThresholdAxis::tau;
    /// Midpoint of the final bracket; NaN when no crossing was found.
    double critical_value = std::numeric_limits<double>::quiet_NaN();
    Interval bracket;
    double epsilon = 0.0;
    double delta_below = 0.0;
    double delta_above = 0.0;
    std::string order = "exact";  // "exact", "2" or "4"
    bool found = false;
    std::string status;  // "found", "no_crossing", "above_at_lower_bound"
    /// Value of the parameter held fixed (g for a tau search, tau for a g search).
    double fixed_value = 0.0;
    int evaluations = 0;
};

/// Smallest x in [lo, hi] with delta(x) > epsilon: forward scan to the first
/// sample above epsilon, then bisection of the straddling bracket down to the
/// requested resolution. On success delta_below <= epsilon < delta_above.
inline ThresholdResult locate_threshold(const std::function<double(double)>& delta, Interval search, double epsilon,
                                        const ThresholdOptions& options = {}) {
    if (!(search.hi > search.lo)) throw std::invalid_argument("threshold search interval must satisfy lo < hi");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
    if (!(options.resolution > 0.0) || !(options.scan_step > 0.0))
        throw std::invalid_argument("resolution and scan step must be > 0");

    ThresholdResult r;
    r.epsilon = epsilon;
    r.bracket = search;

    double lo = search.lo;
    double d_lo = delta(lo);
    ++r.evaluations;
    r.delta_below = d_lo;
    if (d_lo > epsilon) {
        r.status = "above_at_lower_bound";
        r.delta_above = d_lo;
        return r;
    }

    double hi = lo;
    double d_hi = d_lo;
    bool straddles = false;
    for (int k = 1;; ++k) {
        const double x = std::min(search.lo + k * options.scan_step, search.hi);
        const double d = delta(x);
        ++r.evaluations;
        if (d > epsilon) {
            hi = x;
            d_hi = d;
            straddles = true;
            break;
        }
        lo = x;
        d_lo = d;
        if (x >= search.hi) break;
    }
    if (!straddles) {
        r.status = "no_crossing";
        r.delta_above = d_lo;
        return r;
    }

    while (hi - lo > options.resolution) {
        const double mid = 0.5 * (lo + hi);
        const double d = delta(mid);
        ++r.evaluations;
        if (d > epsilon) {
            hi = mid;
            d_hi = d;
        } else {
            lo = mid;
            d_lo = d;
        }
    }
    r.found = true;
    r.status = "found";
    r.bracket = {lo, hi};
    r.critical_value = 0.5 * (lo + hi);
    r.delta_below = d_lo;
    r.delta_above = d_hi;
    return r;
}

inline json to_json(const ThresholdResult& r) {
    json j{{"parameter", to_string(r.parameter)},
           {"critical_value", r.found ? json(r.critical_value) : json(nullptr)},
           {"bracket", json::array({r.bracket.lo, r.bracket.hi})},
           {"epsilon", r.epsilon},
           {"delta_below", r.delta_below},
           {"delta_above", r.delta_above},
           {"order", r.order},
           {"status", r.status},
           {"evaluations", r.evaluations}};
    if (r.parameter == ThresholdAxis::tau) {
        j["fixed"] = {{"g", r.fixed_value}};
        j["critical_value_over_pi"] = r.found ? json(r.critical_value / std::numbers::pi) : json(nullptr);
    } else {
        j["fixed"] = {{"tau", r.fixed_value}};
    }
    return j;
}

}  // namespace rabi
