// Acceptance gate: one PASS/FAIL line per criterion, measured values alongside.
// Exit status is the number of failed criteria (0 when all pass).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rabi/rabi.hpp"

using namespace rabi;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> info;

    void check(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [x]");
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

ModelParams base(double g, double tau, bool rwa = false, int n_max = 60) {
    ModelParams p;
    p.g = g;
    p.tau = tau;
    p.rwa = rwa;
    p.basis = FockBasis(n_max);
    return p;
}

double tau_half(double g) { return tau_from_pi_over_2g(1.0, g); }

Outcome rwa_stationarity() {
    Outcome o;
    double worst = 0.0;
    for (double g : {0.5, 1.5})
        for (double tau : {0.1, 1.0, 10.0}) {
            const ModelParams p = base(g, tau, true);
            const JointState s0 = JointState::product(p.basis, Qubit::ground, 0);
            const JointState s = evolve_from(p).state;
            worst = std::max(worst, (s.joint_populations() - s0.joint_populations()).cwiseAbs().maxCoeff());
        }
    o.check(worst < 1e-12, "max population change " + fmt("%.3e", worst) + " < 1e-12");
    return o;
}

Outcome rwa_transfer() {
    Outcome o;
    for (double g : {0.5, 1.5}) {
        const JointState s = evolve_from(base(g, tau_half(g), true), Qubit::excited).state;
        const double p = std::norm(s.amplitude(Qubit::ground, 1));
        o.check(std::abs(p - 1.0) < 1e-10, "g=" + fmt("%g", g) + " |<g,1|psi>|^2-1 = " + fmt("%.3e", p - 1.0));
    }
    return o;
}

Outcome parity_structure() {
    Outcome o;
    for (double g : {0.5, 1.5}) {
        const JointState s = evolve_from(base(g, tau_half(g))).state;
        const RVector pg = populations(condition_on_qubit(s, Qubit::ground).field);
        const RVector pe = populations(condition_on_qubit(s, Qubit::excited).field);
        double odd_g = 0.0, even_e = 0.0;
        for (Index n = 0; n < pg.size(); ++n) {
            if (n % 2) odd_g = std::max(odd_g, pg(n));
            else even_e = std::max(even_e, pe(n));
        }
        o.check(odd_g < 1e-12 && even_e < 1e-12,
                "g=" + fmt("%g", g) + " rho_g odd " + fmt("%.1e", odd_g) + ", rho_e even " + fmt("%.1e", even_e));
        if (g == 1.5) {
            const RVector p = populations(partial_trace_qubit(s));
            const double beyond = p.tail(p.size() - 5).sum();
            o.check(beyond > 1e-3, "g=1.5 P(n>=5) = " + fmt("%.4f", beyond) + " > 1e-3");
        }
    }
    return o;
}

Outcome wigner_calibration() {
    Outcome o;
    const double vac = field_negativity(FieldState::fock(FockBasis(10), 0)).delta;
    o.check(vac < 1e-10, "vacuum delta " + fmt("%.2e", vac));
    const double one = field_negativity(FieldState::fock(FockBasis(10), 1)).delta;
    const double err = std::abs(one - oracle::fock1_negativity());
    o.check(err < 1e-4, "|1> delta " + fmt("%.9f", one) + " err " + fmt("%.1e", err));
    double worst = 0.0;
    for (unsigned seed = 100; seed < 120; ++seed) {
        const int dim = 4 + static_cast<int>(seed % 9);
        CMatrix rho = CMatrix::Zero(21, 21);
        rho.topLeftCorner(dim, dim) = oracle::random_density(dim, 1 + static_cast<int>(seed % 3), seed);
        const FieldState f(FockBasis(20), rho, FieldKind::unconditional);
        const RVector p = populations(f);
        double parity = 0.0;
        for (Index n = 0; n < p.size(); ++n) parity += (n % 2 ? -1.0 : 1.0) * p(n);
        worst = std::max(worst, std::abs(pi * WignerKernel(f)(0.0, 0.0) - parity));
    }
    o.check(worst < 1e-8, "pi W(0,0) parity max err " + fmt("%.1e", worst) + " (20 states)");
    return o;
}

ThresholdResult exact_tau_c(double g) {
    return exact_threshold(base(g, 0.0), ThresholdAxis::tau, {0.3 * pi, 0.8 * pi}, 1e-10);
}

double exact_tau_c_04 = std::numeric_limits<double>::quiet_NaN();

Outcome exact_transition() {
    Outcome o;
    const ThresholdResult r = exact_tau_c(0.4);
    exact_tau_c_04 = r.critical_value;
    const double c = r.critical_value / pi;
    o.check(r.found && c >= 0.55 && c <= 0.57, "tau_c/pi = " + fmt("%.4f", c) + " in [0.55, 0.57]");
    CacheSet cache(base(0.4, 0.0));
    const double d_lo = state_negativity(cache.evolve_ground(0.5 * pi), Conditioning::none);
    const double d_hi = state_negativity(cache.evolve_ground(0.7 * pi), Conditioning::none);
    o.check(d_lo < 1e-10, "delta(0.5pi) = " + fmt("%.2e", d_lo));
    o.check(d_hi > 1e-4, "delta(0.7pi) = " + fmt("%.3e", d_hi));
    const double orders = d_lo > 0.0 ? std::log10(d_hi / d_lo) : std::numeric_limits<double>::infinity();
    o.check(orders >= 6.0, d_lo > 0.0 ? "jump " + fmt("%.1f", orders) + " decades"
                                      : std::string("jump unbounded (delta(0.5pi) is exactly 0)"));
    o.info.push_back("exact bracket/pi [" + fmt("%.5f", r.bracket.lo / pi) + ", " + fmt("%.5f", r.bracket.hi / pi) +
                     "], delta_above " + fmt("%.2e", r.delta_above));
    return o;
}

/// Order-4 series with every Fock component above n = 2 dropped before
/// normalization; reported for comparison only.
double truncated_order4_threshold() {
    const DysonExpansion d(base(0.4, 0.0), 4);
    auto delta = [&](double tau) {
        CVector v = d.partial_sum(4, tau);
        for (Qubit q : {Qubit::ground, Qubit::excited})
            for (int n = 3; n <= d.basis().n_max(); ++n) v(joint_index(d.basis(), q, n)) = 0.0;
        const JointState psi = JointState(d.basis(), v, tau).normalized();
        return field_negativity(partial_trace_qubit(psi)).delta;
    };
    return locate_threshold(delta, {0.3 * pi, 0.8 * pi}, 1e-10).critical_value;
}

Outcome perturbative_thresholds() {
    Outcome o;
    const ModelParams p = base(0.4, 0.0);
    const ThresholdResult r2 = perturbative_threshold(p, 2, {0.3 * pi, 0.8 * pi}, 1e-10);
    const ThresholdResult r4 = perturbative_threshold(p, 4, {0.2 * pi, 0.8 * pi}, 1e-10);
    const double t2 = r2.critical_value / pi, t4 = r4.critical_value / pi;
    o.check(r2.found && t2 >= 0.59 && t2 <= 0.61, "order-2 tau/pi = " + fmt("%.4f", t2) + " in [0.59, 0.61]");
    o.check(r4.found && t4 >= 0.57 && t4 <= 0.59, "order-4 tau/pi = " + fmt("%.4f", t4) + " in [0.57, 0.59]");
    const double te = (std::isnan(exact_tau_c_04) ? exact_tau_c(0.4).critical_value : exact_tau_c_04) / pi;
    o.check(t4 < t2 && std::abs(t4 - te) < std::abs(t2 - te),
            "ordering tau4 < tau2 and closer to exact " + fmt("%.4f", te));
    o.info.push_back("order-4 delta_above at onset " + fmt("%.2e", r4.delta_above));
    o.info.push_back("order-4 series truncated to n <= 2: tau/pi = " + fmt("%.4f", truncated_order4_threshold() / pi));
    return o;
}

Outcome exotic_states() {
    Outcome o;
    int positive = 0;
    std::string values;
    for (const auto& row : fig1_rows()) {
        const JointState s = evolve_from(base(row.g, tau_from_pi_over_2g(row.tau_over_pi_over_2g, row.g))).state;
        for (Conditioning c : {Conditioning::none, Conditioning::g, Conditioning::e}) {
            const double d = state_negativity(s, c);
            positive += d > 0.0 ? 1 : 0;
            values += (values.empty() ? "" : " ") + fmt("%.3f", d);
        }
    }
    o.check(positive == 12, std::to_string(positive) + "/12 states with delta > 0");
    o.info.push_back("delta (rho rho_g rho_e per row): " + values);
    return o;
}

Outcome onset_trend() {
    Outcome o;
    const double t04 = std::isnan(exact_tau_c_04) ? exact_tau_c(0.4).critical_value : exact_tau_c_04;
    const ThresholdResult r08 = exact_tau_c(0.8);
    o.check(r08.found && r08.critical_value < t04,
            "tau_c(0.8)/pi = " + fmt("%.4f", r08.critical_value / pi) + " < tau_c(0.4)/pi = " + fmt("%.4f", t04 / pi));
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    for (double g : {0.5, 1.5}) {
        const ModelParams p = base(g, tau_half(g));
        const JointState s0 = JointState::product(p.basis, Qubit::ground, 0);
        const JointState s = evolve(s0, diagonalize(p), p.tau);
        const CVector ref = oracle::rk4_schrodinger(build_hamiltonian(p), s0.amplitudes(), p.tau, 1e-4);
        const double err = (s.amplitudes() - ref).cwiseAbs().maxCoeff();
        o.check(err < 1e-6, "g=" + fmt("%g", g) + " max amplitude diff " + fmt("%.2e", err));
    }
    return o;
}

Outcome truncation_robustness() {
    Outcome o;
    const double g = 1.5;
    const double d60 = state_negativity(evolve_from(base(g, tau_half(g), false, 60)).state, Conditioning::none);
    const double d120 = state_negativity(evolve_from(base(g, tau_half(g), false, 120)).state, Conditioning::none);
    o.check(std::abs(d60 - d120) < 1e-8, "|delta(60) - delta(120)| = " + fmt("%.2e", std::abs(d60 - d120)));
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double max_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "RWA stationarity", 1.0, rwa_stationarity},
        {2, "RWA excitation transfer", 1.0, rwa_transfer},
        {3, "parity structure", 5.0, parity_structure},
        {4, "Wigner calibration", 10.0, wigner_calibration},
        {5, "exact transition", 120.0, exact_transition},
        {6, "perturbative thresholds", 120.0, perturbative_thresholds},
        {7, "exotic-state existence", 60.0, exotic_states},
        {8, "monotone onset trend", 120.0, onset_trend},
        {9, "oracle equivalence", 60.0, oracle_equivalence},
        {10, "truncation robustness", 60.0, truncation_robustness},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.check(seconds < c.max_seconds, "runtime " + fmt("%.2f", seconds) + " s < " + fmt("%g", c.max_seconds) + " s");
        std::printf("%s  %2d  %-24s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        for (const auto& line : o.info) std::printf("          info: %s\n", line.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
