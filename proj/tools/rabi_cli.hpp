// rabi_cli.hpp: command-line front end.
//
//   rabi evolve    --g 0.5 --tau 1 --tau-units pi-over-2g --condition e --out state.json
//   rabi wigner    --state state.json --out grid.csv [--gnuplot grid.dat]
//   rabi sweep     --g-range 0:1.5:0.1 --tau-range 0:1pi:0.05pi --out surface.csv
//   rabi threshold --g 0.4 --order exact
//   rabi dyson     --g 0.4 --tau 0.6pi --order 2 --out dyson.json
//   rabi figure    --which fig4 --out-dir figs
//
// Values accept a "pi" suffix (0.56pi). Precedence: flags > --config file >
// defaults. Relative output paths are resolved against $RABI_OUTPUT_DIR when set.
//
// Exit codes: 0 success (including "no transition found"), 2 usage error,
// 3 numerical or truncation failure, 1 anything else.

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rabi/rabi.hpp"

namespace rabi::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;

/// Raised for malformed flag or config values; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "0.56pi", "pi", "-2.5", "1e-10"
inline double parse_scalar(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw UsageError("empty numeric value");
    double scale = 1.0;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        scale = std::numbers::pi;
        s.resize(s.size() - 2);
        if (s.empty() || s == "+") return scale;
        if (s == "-") return -scale;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("invalid number '" + raw + "'");
    }
    if (used != s.size()) throw UsageError("invalid number '" + raw + "'");
    return v * scale;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

/// "start:stop:step", inclusive of stop (within 1e-9 steps).
inline std::vector<double> parse_range(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw UsageError("range '" + s + "' must be start:stop:step");
    const double start = parse_scalar(parts[0]);
    const double stop = parse_scalar(parts[1]);
    const double step = parse_scalar(parts[2]);
    if (stop < start) throw UsageError("range '" + s + "' has stop < start");
    if (stop == start) return {start};
    if (!(step > 0.0)) throw UsageError("range '" + s + "' needs a positive step");
    std::vector<double> v;
    const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long k = 0; k <= n; ++k) v.push_back(start + static_cast<double>(k) * step);
    return v;
}

/// "lo:hi"
inline Interval parse_interval(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() != 2) throw UsageError("interval '" + s + "' must be lo:hi");
    Interval iv{parse_scalar(parts[0]), parse_scalar(parts[1])};
    if (!(iv.hi > iv.lo)) throw UsageError("interval '" + s + "' must satisfy lo < hi");
    return iv;
}

/// Resolved settings of one invocation: defaults, then config file, then flags.
class RunConfig {
public:
    explicit RunConfig(std::string command) : command_(std::move(command)) {}

    void set_default(const std::string& key, json value) { values_[key] = std::move(value); }

    void apply_config_file(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read config file '" + path.string() + "'");
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw UsageError("config file '" + path.string() + "': " + e.what());
        }
        if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
        for (const auto& [key, value] : doc.items()) {
            if (!values_.contains(key)) throw UsageError("config file: unknown key '" + key + "' for " + command_);
            values_[key] = value;
        }
    }

    void set_flag(const std::string& key, json value) { values_[key] = std::move(value); }

    bool has(const std::string& key) const { return values_.contains(key) && !values_[key].is_null(); }

    double number(const std::string& key) const {
        const json& v = at(key);
        if (v.is_number()) return v.get<double>();
        if (v.is_string()) return parse_scalar(v.get<std::string>());
        throw UsageError("'" + key + "' must be a number");
    }

    std::string string(const std::string& key) const {
        const json& v = at(key);
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number()) return v.dump();
        throw UsageError("'" + key + "' must be a string");
    }

    bool boolean(const std::string& key) const {
        const json& v = at(key);
        if (!v.is_boolean()) throw UsageError("'" + key + "' must be true or false");
        return v.get<bool>();
    }

    int integer(const std::string& key) const {
        const double d = number(key);
        if (d != std::floor(d)) throw UsageError("'" + key + "' must be an integer");
        return static_cast<int>(d);
    }

    json provenance() const { return json{{"command", command_}, {"config", values_}}; }
    std::string provenance_line() const { return provenance().dump(); }

private:
    const json& at(const std::string& key) const {
        if (!has(key)) throw UsageError("missing value for '" + key + "'");
        return values_[key];
    }

    std::string command_;
    json values_ = json::object();
};

inline std::filesystem::path output_path(const std::string& raw) {
    std::filesystem::path p(raw);
    if (p.is_relative())
        if (const char* dir = std::getenv("RABI_OUTPUT_DIR"); dir && *dir) return std::filesystem::path(dir) / p;
    return p;
}

namespace detail {

/// Declared flag: CLI11 option bound to a string, copied into the RunConfig
/// only when given on the command line.
struct FlagBinding {
    std::string key;
    CLI::Option* option = nullptr;
    std::string text;
    bool is_switch = false;
    bool switch_value = false;
};

class Command {
public:
    Command(CLI::App& app, const std::string& name, const std::string& description)
        : sub_(app.add_subcommand(name, description)), config_(name) {
        sub_->add_option("--config", config_path_, "JSON config file (keys as flag names with '_')");
    }

    CLI::App* app() { return sub_; }
    RunConfig& config() { return config_; }

    /// --flag-name <value>, stored under key flag_name.
    void option(const std::string& flag, json fallback, const std::string& help) {
        auto b = std::make_unique<FlagBinding>();
        b->key = key_of(flag);
        b->option = sub_->add_option("--" + flag, b->text, help);
        config_.set_default(b->key, std::move(fallback));
        bindings_.push_back(std::move(b));
    }

    void option_choice(const std::string& flag, const std::string& fallback, std::vector<std::string> choices,
                       const std::string& help) {
        option(flag, fallback, help);
        bindings_.back()->option->check(CLI::IsMember(std::move(choices)));
    }

    void boolean(const std::string& flag, const std::string& help) {
        auto b = std::make_unique<FlagBinding>();
        b->key = key_of(flag);
        b->is_switch = true;
        b->option = sub_->add_flag("--" + flag, b->switch_value, help);
        config_.set_default(b->key, false);
        bindings_.push_back(std::move(b));
    }

    /// Config file first, then explicit flags.
    void resolve() {
        if (!config_path_.empty()) config_.apply_config_file(config_path_);
        for (const auto& b : bindings_) {
            if (b->option->count() == 0) continue;
            if (b->is_switch)
                config_.set_flag(b->key, b->switch_value);
            else
                config_.set_flag(b->key, b->text);
        }
    }

private:
    static std::string key_of(std::string flag) {
        for (char& c : flag)
            if (c == '-') c = '_';
        return flag;
    }

    CLI::App* sub_;
    RunConfig config_;
    std::string config_path_;
    std::vector<std::unique_ptr<FlagBinding>> bindings_;
};

inline void add_model_flags(Command& c) {
    c.option("g", 0.0, "coupling strength g");
    c.option("tau", 0.0, "interaction time (absolute, or units of pi/2g with --tau-units pi-over-2g)");
    c.option_choice("tau-units", "abs", {"abs", "pi-over-2g"}, "units of --tau");
    c.option("nmax", 60, "highest retained Fock level");
    c.option("omega", 1.0, "field frequency");
    c.option("omega-a", 1.0, "qubit frequency");
    c.boolean("rwa", "drop the counter-rotating terms (Jaynes-Cummings model)");
}

inline void add_wigner_flags(Command& c) {
    c.option("step", 0.05, "phase-space grid step");
    c.option("extent", "auto", "grid half-width, or 'auto'");
}

inline ModelParams model_from(const RunConfig& cfg) {
    ModelParams p;
    p.g = cfg.number("g");
    p.omega = cfg.number("omega");
    p.omega_a = cfg.number("omega_a");
    p.rwa = cfg.boolean("rwa");
    const int n_max = cfg.integer("nmax");
    if (n_max < 1) throw UsageError("--nmax must be >= 1");
    p.basis = FockBasis(n_max);
    const double tau = cfg.number("tau");
    const std::string units = cfg.string("tau_units");
    if (units == "abs")
        p.tau = tau;
    else if (units == "pi-over-2g") {
        if (!(p.g > 0.0)) throw UsageError("--tau-units pi-over-2g requires g > 0");
        p.tau = tau_from_pi_over_2g(tau, p.g);
    } else {
        throw UsageError("--tau-units must be abs or pi-over-2g");
    }
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return p;
}

inline WignerOptions wigner_from(const RunConfig& cfg, int threads = 1) {
    WignerOptions w;
    w.step = cfg.number("step");
    if (!(w.step > 0.0)) throw UsageError("--step must be > 0");
    if (cfg.string("extent") != "auto") {
        w.extent = cfg.number("extent");
        if (!(*w.extent > 0.0)) throw UsageError("--extent must be > 0 or auto");
    }
    w.threads = threads;
    return w;
}

inline Conditioning conditioning_from(const RunConfig& cfg) {
    try {
        return conditioning_from_string(cfg.string("condition"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline int jobs_from(const RunConfig& cfg) {
    const int jobs = cfg.integer("jobs");
    if (jobs < 1) throw UsageError("--jobs must be >= 1");
    return jobs;
}

inline void write_json_file(const std::string& raw, const json& doc) {
    auto out = open_output(output_path(raw));
    out << doc.dump(2) << '\n';
}

inline json populations_json(const RVector& p) {
    json a = json::array();
    for (Index i = 0; i < p.size(); ++i) a.push_back(p(i));
    return a;
}

// ---------------------------------------------------------------------------

inline int cmd_evolve(const RunConfig& cfg, std::ostream& out) {
    const ModelParams params = model_from(cfg);
    const Conditioning cond = conditioning_from(cfg);
    const std::string initial = cfg.string("initial");
    if (initial != "g" && initial != "e") throw UsageError("--initial must be g or e");

    const Evolution ev = evolve_from(params, initial == "g" ? Qubit::ground : Qubit::excited, 0);
    json doc{{"provenance", cfg.provenance()},
             {"params", to_json(ev.params)},
             {"escalated", ev.escalated},
             {"state", to_json(ev.state)},
             {"parity", parity_expectation(ev.state)},
             {"tail_population", ev.state.tail_population()},
             {"condition", to_string(cond)}};
    if (cond == Conditioning::none) {
        const FieldState rho = partial_trace_qubit(ev.state);
        doc["probability"] = 1.0;
        doc["field"] = to_json(rho, ev.state.time());
        doc["populations"] = populations_json(populations(rho));
    } else {
        const auto c = condition_on_qubit(ev.state, cond == Conditioning::g ? Qubit::ground : Qubit::excited);
        doc["probability"] = c.probability;
        doc["field"] = to_json(c.field, ev.state.time());
        doc["populations"] = populations_json(populations(c.field));
    }
    write_json_file(cfg.string("out"), doc);
    out << json{{"out", output_path(cfg.string("out")).string()}, {"escalated", ev.escalated}}.dump() << '\n';
    return exit_ok;
}

/// Field state for `wigner`: from --state (an evolve output, a bare JointState
/// or a bare FieldState), or computed inline.
inline FieldState wigner_source(const RunConfig& cfg) {
    const Conditioning cond = conditioning_from(cfg);
    if (cfg.has("state") && !cfg.string("state").empty()) {
        const std::string path = cfg.string("state");
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read state file '" + path + "'");
        json doc;
        try {
            in >> doc;
            if (doc.contains("state")) doc = doc["state"];
            if (is_joint_state_json(doc)) return field_state(joint_state_from_json(doc), cond);
            if (cond != Conditioning::none) throw UsageError("--condition needs a joint state, not a field state");
            return field_state_from_json(doc);
        } catch (const json::exception& e) {
            throw UsageError("state file '" + path + "': " + e.what());
        }
    }
    return field_state(evolve_from(model_from(cfg)).state, cond);
}

inline int cmd_wigner(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const FieldState field = wigner_source(cfg);
    const WignerGrid grid = wigner_function(field, wigner_from(cfg));
    for (const auto& w : grid.warnings) err << "warning: " << w << '\n';
    const NegativityResult neg = negativity(grid);
    const std::string provenance = cfg.provenance_line();
    if (cfg.has("out") && !cfg.string("out").empty()) {
        auto f = open_output(output_path(cfg.string("out")));
        write_csv(grid, f, provenance);
    }
    if (cfg.has("gnuplot") && !cfg.string("gnuplot").empty()) {
        auto f = open_output(output_path(cfg.string("gnuplot")));
        write_gnuplot_matrix(grid, f, provenance);
    }
    out << json{{"delta", neg.delta},
                {"negative_mass", neg.negative_mass},
                {"extent", grid.x_max},
                {"step", grid.step},
                {"integral", grid.integral()}}
               .dump()
        << '\n';
    return exit_ok;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    ModelParams base = model_from(cfg);
    SweepSpec spec;
    spec.g_values = parse_range(cfg.string("g_range"));
    spec.tau_values = parse_range(cfg.string("tau_range"));
    spec.tau_in_pi_over_2g = cfg.string("tau_units") == "pi-over-2g";
    spec.conditioning = conditioning_from(cfg);
    spec.wigner = wigner_from(cfg);
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto surface = negativity_surface(spec, base, jobs_from(cfg));
    auto f = open_output(output_path(cfg.string("out")));
    write_surface_csv(surface, f, cfg.provenance_line());
    std::size_t failed = 0;
    for (const auto& pt : surface) failed += pt.ok() ? 0 : 1;
    out << json{{"out", output_path(cfg.string("out")).string()}, {"points", surface.size()}, {"failed", failed}}.dump()
        << '\n';
    return exit_ok;
}

inline int cmd_threshold(const RunConfig& cfg, std::ostream& out) {
    const ThresholdAxis axis = cfg.string("axis") == "g" ? ThresholdAxis::g : ThresholdAxis::tau;
    const ModelParams params = model_from(cfg);
    const std::string order = cfg.string("order");
    const double epsilon = cfg.number("epsilon");
    Interval search = axis == ThresholdAxis::tau ? Interval{0.3 * std::numbers::pi, 0.8 * std::numbers::pi}
                                                 : Interval{0.05, 2.0};
    if (cfg.has("search") && !cfg.string("search").empty()) search = parse_interval(cfg.string("search"));
    ThresholdOptions opts = ThresholdOptions::for_axis(axis);
    if (cfg.has("resolution")) opts.resolution = cfg.number("resolution");
    if (cfg.has("scan_step")) opts.scan_step = cfg.number("scan_step");
    const WignerOptions wigner = wigner_from(cfg);

    ThresholdResult r;
    if (order == "exact") {
        r = exact_threshold(params, axis, search, epsilon, {opts, conditioning_from(cfg), wigner});
    } else {
        if (axis != ThresholdAxis::tau) throw UsageError("perturbative thresholds are searched along tau only");
        r = perturbative_threshold(params, order == "2" ? 2 : 4, search, epsilon, opts, wigner);
    }
    json doc = to_json(r);
    doc["provenance"] = cfg.provenance();
    if (cfg.has("out") && !cfg.string("out").empty()) write_json_file(cfg.string("out"), doc);
    out << to_json(r).dump() << '\n';
    return exit_ok;
}

inline int cmd_dyson(const RunConfig& cfg, std::ostream& out) {
    const ModelParams params = model_from(cfg);
    const int order = cfg.integer("order");
    if (order < 0 || order > max_dyson_order) throw UsageError("--order must be in 0..4");
    const WignerOptions wigner = wigner_from(cfg);
    const DysonState ds = [&] {
        try {
            return dyson_state(params, order, params.tau);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const JointState psi = ds.normalized();
    const Evolution exact = evolve_from(params);
    Complex inner{0.0, 0.0};
    for (Qubit q : {Qubit::ground, Qubit::excited})
        for (int n = 0; n <= params.basis.n_max(); ++n)
            inner += std::conj(exact.state.amplitude(q, n)) * psi.amplitude(q, n);
    const double overlap = std::norm(inner);
    const double delta_dyson = field_negativity(partial_trace_qubit(psi), wigner).delta;
    const double delta_exact = field_negativity(partial_trace_qubit(exact.state), wigner).delta;
    json doc{{"provenance", cfg.provenance()},
             {"params", to_json(params)},
             {"order", order},
             {"norm", ds.norm},
             {"order_norms", ds.order_norms},
             {"state", to_json(psi)},
             {"populations", populations_json(populations(partial_trace_qubit(psi)))},
             {"delta_dyson", delta_dyson},
             {"delta_exact", delta_exact},
             {"overlap_with_exact", overlap}};
    write_json_file(cfg.string("out"), doc);
    out << json{{"order", order},
                {"norm", ds.norm},
                {"delta_dyson", delta_dyson},
                {"delta_exact", delta_exact},
                {"overlap_with_exact", overlap}}
               .dump()
        << '\n';
    return exit_ok;
}

inline int cmd_figure(const RunConfig& cfg, std::ostream& out) {
    FigureOptions opts;
    opts.base = model_from(cfg);
    opts.wigner = wigner_from(cfg);
    opts.jobs = jobs_from(cfg);
    opts.provenance = cfg.provenance_line();
    Figure which;
    try {
        which = figure_from_string(cfg.string("which"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto files = figure_dataset(which, output_path(cfg.string("out_dir")), opts);
    json list = json::array();
    for (const auto& f : files) list.push_back(f.string());
    out << json{{"files", list}}.dump() << '\n';
    return exit_ok;
}

}  // namespace detail

/// Runs one invocation; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    using namespace detail;
    CLI::App app{"Quantum Rabi model with a suddenly switched coupling: states, Wigner negativity, thresholds"};
    app.require_subcommand(1);

    Command evolve_cmd(app, "evolve", "evolve |g>|0> (or |e>|0>) and write the state");
    add_model_flags(evolve_cmd);
    evolve_cmd.option_choice("condition", "none", {"none", "g", "e"}, "qubit outcome to condition on");
    evolve_cmd.option_choice("initial", "g", {"g", "e"}, "initial qubit level (field in |0>)");
    evolve_cmd.option("out", "state.json", "output JSON");

    Command wigner_cmd(app, "wigner", "Wigner grid and negativity of a field state");
    add_model_flags(wigner_cmd);
    add_wigner_flags(wigner_cmd);
    wigner_cmd.option_choice("condition", "none", {"none", "g", "e"}, "qubit outcome to condition on");
    wigner_cmd.option("state", "", "state JSON (from evolve) instead of --g/--tau");
    wigner_cmd.option("out", "wigner.csv", "grid CSV");
    wigner_cmd.option("gnuplot", "", "optional gnuplot matrix file");

    Command sweep_cmd(app, "sweep", "negativity over a (g, tau) grid");
    add_model_flags(sweep_cmd);
    add_wigner_flags(sweep_cmd);
    sweep_cmd.option("g-range", "0:1.5:0.1", "g axis start:stop:step");
    sweep_cmd.option("tau-range", "0:1pi:0.05pi", "tau axis start:stop:step (units per --tau-units)");
    sweep_cmd.option_choice("condition", "none", {"none", "g", "e"}, "qubit outcome to condition on");
    sweep_cmd.option("jobs", 1, "worker threads");
    sweep_cmd.option("out", "surface.csv", "surface CSV");

    Command threshold_cmd(app, "threshold", "locate the onset of Wigner negativity");
    add_model_flags(threshold_cmd);
    add_wigner_flags(threshold_cmd);
    threshold_cmd.option_choice("axis", "tau", {"tau", "g"}, "parameter to search along");
    threshold_cmd.option("search", "", "search interval lo:hi (default 0.3pi:0.8pi for tau, 0.05:2 for g)");
    threshold_cmd.option_choice("order", "exact", {"exact", "2", "4"}, "exact dynamics or Dyson order");
    threshold_cmd.option("epsilon", 1e-10, "negativity threshold");
    threshold_cmd.option("resolution", nullptr, "final bracket width (default 1e-3 pi for tau, 1e-3 for g)");
    threshold_cmd.option("scan-step", nullptr, "forward scan step (default 0.01 pi for tau, 0.01 for g)");
    threshold_cmd.option_choice("condition", "none", {"none", "g", "e"}, "qubit outcome to condition on");
    threshold_cmd.option("out", "", "optional JSON output file");

    Command dyson_cmd(app, "dyson", "order-k Dyson state compared with the exact evolution");
    add_model_flags(dyson_cmd);
    add_wigner_flags(dyson_cmd);
    dyson_cmd.option("order", 2, "Dyson order 0..4");
    dyson_cmd.option("out", "dyson.json", "output JSON");

    Command figure_cmd(app, "figure", "write the data set behind one figure");
    add_model_flags(figure_cmd);
    add_wigner_flags(figure_cmd);
    figure_cmd.option_choice("which", "fig1", {"fig1", "fig2", "fig3", "fig4"}, "figure");
    figure_cmd.option("out-dir", "figures", "output directory");
    figure_cmd.option("jobs", 1, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        for (Command* c : {&evolve_cmd, &wigner_cmd, &sweep_cmd, &threshold_cmd, &dyson_cmd, &figure_cmd}) {
            if (!c->app()->parsed()) continue;
            c->resolve();
            const RunConfig& cfg = c->config();
            if (c == &evolve_cmd) return cmd_evolve(cfg, out);
            if (c == &wigner_cmd) return cmd_wigner(cfg, out, err);
            if (c == &sweep_cmd) return cmd_sweep(cfg, out);
            if (c == &threshold_cmd) return cmd_threshold(cfg, out);
            if (c == &dyson_cmd) return cmd_dyson(cfg, out);
            if (c == &figure_cmd) return cmd_figure(cfg, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << " (tail mass " << format_double(e.tail_mass()) << ")\n";
        return exit_numerical;
    } catch (const ConditionalStateError& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_usage;
}

}  // namespace rabi::cli
