#pragma once

// Command-line front end: `run` (histograms), `sweep` (phase curves), and
// `cr` (complementarity reports), all driven by preset names or config
// files. Every invocation writes a manifest next to its outputs; re-running
// with --config <manifest> reproduces the outputs byte for byte.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graysim/analysis.hpp"
#include "graysim/experiments.hpp"
#include "graysim/io.hpp"
#include "graysim/version.hpp"

namespace graysim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// ---------------------------------------------------------------------------
// Config <-> JSON
// ---------------------------------------------------------------------------

inline std::string kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::unruh: return "unruh";
        case ExperimentKind::pessoa: return "pessoa";
        case ExperimentKind::two_photon_unruh: return "two_photon_unruh";
    }
    throw std::invalid_argument("unknown experiment kind");
}

inline ExperimentKind kind_from_name(const std::string& name) {
    if (name == "unruh") return ExperimentKind::unruh;
    if (name == "pessoa") return ExperimentKind::pessoa;
    if (name == "two_photon_unruh" || name == "hom") return ExperimentKind::two_photon_unruh;
    throw std::invalid_argument("unknown experiment: " + name);
}

inline std::string synthesis_name(const SynthesisSpec& s) {
    switch (s.kind) {
        case SynthesisSpec::Kind::exact: return "exact";
        case SynthesisSpec::Kind::decomposed: return "decomposed";
        case SynthesisSpec::Kind::trotter: return "trotter:" + std::to_string(s.trotter_steps);
    }
    throw std::invalid_argument("unknown synthesis kind");
}

inline SynthesisSpec synthesis_from_name(const std::string& name) {
    if (name == "exact") return SynthesisSpec::exact();
    if (name == "decomposed") return SynthesisSpec::decomposed();
    if (name.rfind("trotter:", 0) == 0) {
        const int steps = std::atoi(name.c_str() + 8);
        if (steps < 1) throw std::invalid_argument("synthesis: trotter steps must be >= 1");
        return SynthesisSpec::trotter(steps);
    }
    throw std::invalid_argument("unknown synthesis mode: " + name +
                                " (expected exact, decomposed, or trotter:<steps>)");
}

inline std::string b0_name(BlockerB0 b) {
    switch (b) {
        case BlockerB0::off: return "off";
        case BlockerB0::on_C: return "C";
        case BlockerB0::on_D: return "D";
    }
    throw std::invalid_argument("unknown blocker flag");
}

inline BlockerB0 b0_from_name(const std::string& name) {
    if (name == "off" || name == "none") return BlockerB0::off;
    if (name == "C") return BlockerB0::on_C;
    if (name == "D") return BlockerB0::on_D;
    throw std::invalid_argument("blockers.b0 must be one of off, C, D");
}

inline nlohmann::json config_to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["experiment"] = kind_name(c.kind);
    j["phases"] = {{"phi_E", io::round_12(c.phi_E)}, {"phi_H", io::round_12(c.phi_H)}};
    if (c.kind == ExperimentKind::pessoa) {
        j["phases"]["phi_N"] = io::round_12(c.phi_N);
        j["bbs_power_transmission"] = io::round_12(c.bbs_power_transmission);
    }
    j["blockers"] = {{"b0", b0_name(c.b0)}, {"b1", c.b1}};
    j["shots"] = c.shots;
    j["seed"] = c.seed;
    j["synthesis"] = synthesis_name(c.synthesis);
    return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
    if (!j.contains("experiment"))
        throw std::invalid_argument("config: missing \"experiment\" field");
    ExperimentConfig c = ExperimentConfig::defaults(kind_from_name(j.at("experiment")));
    if (j.contains("phases")) {
        const auto& p = j.at("phases");
        if (p.contains("phi_E")) c.phi_E = p.at("phi_E").get<double>();
        if (p.contains("phi_H")) c.phi_H = p.at("phi_H").get<double>();
        if (p.contains("phi_N")) c.phi_N = p.at("phi_N").get<double>();
    }
    if (j.contains("blockers")) {
        const auto& b = j.at("blockers");
        if (b.contains("b0")) c.b0 = b0_from_name(b.at("b0").get<std::string>());
        if (b.contains("b1")) c.b1 = b.at("b1").get<bool>();
    }
    if (j.contains("bbs_power_transmission"))
        c.bbs_power_transmission = j.at("bbs_power_transmission").get<double>();
    if (j.contains("shots")) c.shots = j.at("shots").get<std::uint64_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("synthesis")) c.synthesis = synthesis_from_name(j.at("synthesis").get<std::string>());
    c.validate();
    return c;
}

// ---------------------------------------------------------------------------
// Preset resolution
// ---------------------------------------------------------------------------

inline std::vector<std::filesystem::path> preset_search_paths() {
    std::vector<std::filesystem::path> paths;
    if (const char* env = std::getenv("GRAYSIM_PRESETS")) paths.push_back(env);
    paths.push_back("presets");
#ifdef GRAYSIM_PRESET_DIR
    paths.push_back(GRAYSIM_PRESET_DIR);
#endif
    return paths;
}

inline std::filesystem::path find_preset_file(const std::string& name) {
    for (const auto& base : preset_search_paths()) {
        const std::filesystem::path candidate = base / (name + ".json");
        if (std::filesystem::exists(candidate)) return candidate;
    }
    throw std::invalid_argument("unknown preset: " + name);
}

inline nlohmann::json load_json_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read file: " + path.string());
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("invalid JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

// Accepts a plain config document or a manifest (which embeds one).
inline ExperimentConfig load_config(const std::filesystem::path& path) {
    nlohmann::json j = load_json_file(path);
    if (j.contains("config") && j.at("config").is_object()) j = j.at("config");
    return config_from_json(j);
}

// ---------------------------------------------------------------------------
// Shared command options
// ---------------------------------------------------------------------------

struct SweepRange {
    std::string phase;  // "phi_E" or "phi_H"
    double start = 0.0;
    double stop = 2.0 * kPi;
    int points = 65;

    std::vector<double> values() const {
        std::vector<double> v(points);
        for (int k = 0; k < points; ++k)
            v[k] = points == 1 ? start : start + (stop - start) * k / (points - 1);
        return v;
    }
};

inline SweepRange parse_sweep(const std::string& text) {
    SweepRange s;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4) throw std::invalid_argument("--sweep expects <phase>:<start>:<stop>:<points>");
    if (parts[0] == "phi_E" || parts[0] == "phiE") s.phase = "phi_E";
    else if (parts[0] == "phi_H" || parts[0] == "phiH") s.phase = "phi_H";
    else throw std::invalid_argument("--sweep phase must be phi_E or phi_H");
    s.start = std::strtod(parts[1].c_str(), nullptr);
    s.stop = std::strtod(parts[2].c_str(), nullptr);
    s.points = std::atoi(parts[3].c_str());
    if (s.points < 2) throw std::invalid_argument("--sweep needs at least 2 points");
    return s;
}

struct CommandOptions {
    std::string preset;        // preset name, e.g. unruh/no-blockers
    std::string config_file;   // path to a config or manifest JSON
    std::string out_dir = "graysim-out";
    std::vector<std::string> sweeps;
    std::string stage = "final";  // cr only: bs2 | final
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> synthesis;
    int jobs = 0;  // 0: hardware concurrency
    bool svg = false;
};

inline ExperimentConfig resolve_config(const CommandOptions& opt) {
    if (opt.preset.empty() == opt.config_file.empty())
        throw std::invalid_argument("exactly one of a preset name or --config <file> is required");
    ExperimentConfig c = opt.preset.empty() ? load_config(opt.config_file)
                                            : load_config(find_preset_file(opt.preset));
    if (opt.shots) c.shots = *opt.shots;
    if (opt.seed) c.seed = *opt.seed;
    if (opt.synthesis) c.synthesis = synthesis_from_name(*opt.synthesis);
    c.validate();
    return c;
}

inline void apply_phase(ExperimentConfig& c, const std::string& phase, double value) {
    if (phase == "phi_E") c.phi_E = value;
    else c.phi_H = value;
}

template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < n; i = next++) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline nlohmann::json base_manifest(const std::string& command, const ExperimentConfig& c,
                                    const CommandOptions& opt) {
    nlohmann::json m;
    m["tool"] = "graysim";
    m["version"] = GRAYSIM_VERSION;
    m["command"] = command;
    m["config"] = config_to_json(c);
    m["seed"] = c.seed;
    m["shots"] = c.shots;
    m["synthesis"] = synthesis_name(c.synthesis);
    if (!opt.preset.empty()) m["preset"] = opt.preset;
    m["out_dir"] = opt.out_dir;
    return m;
}

// ---------------------------------------------------------------------------
// run: exact (and optionally sampled) histograms
// ---------------------------------------------------------------------------

inline int cmd_run(const CommandOptions& opt) {
    const ExperimentConfig config = resolve_config(opt);
    const Circuit qc = build_experiment(config);
    const OutcomeDistribution exact = run_exact(qc);

    nlohmann::json hist;
    hist["experiment"] = kind_name(config.kind);
    std::string bit_order;
    for (const auto& b : exact.bit_order) bit_order += b;
    hist["bit_order"] = bit_order;
    nlohmann::json exact_json = nlohmann::json::object();
    for (const auto& [k, p] : exact.probability) exact_json[k] = io::round_12(p);
    hist["exact"] = exact_json;

    nlohmann::json events = nlohmann::json::object();
    for (const auto& [name, p] : event_probabilities(config)) events[name] = io::round_12(p);
    hist["events"] = events;

    nlohmann::json layout = nlohmann::json::array();
    for (const auto& el : optical_table(config.kind))
        layout.push_back({{"element", el.kind}, {"in", el.in_modes}, {"out", el.out_modes}});
    hist["layout"] = layout;

    if (config.shots > 0) {
        const OutcomeDistribution sampled = run_sampled(qc, config.shots, config.seed);
        nlohmann::json counts = nlohmann::json::object();
        for (const auto& [k, n] : sampled.counts) counts[k] = n;
        hist["sampled"] = {{"shots", config.shots}, {"seed", config.seed}, {"counts", counts}};
    }

    const std::filesystem::path out(opt.out_dir);
    io::write_json(out / "histogram.json", hist);

    nlohmann::json manifest = base_manifest("run", config, opt);
    manifest["outputs"] = {"histogram.json"};
    io::write_json(out / "manifest.json", manifest);

    std::cout << "wrote " << (out / "histogram.json").string() << "\n";
    for (const auto& [k, p] : exact.probability)
        std::cout << "  " << bit_order << " = " << k << "  p = " << io::format_double(p) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep: phase curves of detector / bunching probabilities
// ---------------------------------------------------------------------------

inline std::vector<std::string> event_columns(const ExperimentConfig& c) {
    std::vector<std::string> cols;
    if (c.kind == ExperimentKind::two_photon_unruh) {
        cols = {"both_D0", "both_D1", "coincidence"};
        if (c.b0 != BlockerB0::off) cols.push_back("blocked");
    } else {
        cols = {"D0", "D1"};
        if (c.b0 != BlockerB0::off) cols.push_back("B0");
        if (c.b1) cols.push_back("B1");
    }
    return cols;
}

inline int cmd_sweep(const CommandOptions& opt) {
    const ExperimentConfig config = resolve_config(opt);
    if (opt.sweeps.size() != 1)
        throw std::invalid_argument("sweep: exactly one --sweep <phase>:<start>:<stop>:<points> is required");
    const SweepRange range = parse_sweep(opt.sweeps[0]);
    const std::vector<double> phases = range.values();
    const std::vector<std::string> cols = event_columns(config);

    std::vector<std::vector<double>> rows(phases.size());
    parallel_for(phases.size(), opt.jobs, [&](std::size_t i) {
        ExperimentConfig point = config;
        apply_phase(point, range.phase, phases[i]);
        const auto ev = event_probabilities(point);
        std::vector<double> row{phases[i]};
        for (const auto& c : cols) row.push_back(ev.at(c));
        rows[i] = std::move(row);
    });

    io::CsvTable table;
    table.columns.push_back(range.phase);
    for (const auto& c : cols) table.columns.push_back("pr_" + c);
    table.rows = std::move(rows);

    const std::filesystem::path out(opt.out_dir);
    io::write_file(out / "sweep.csv", table.str());
    std::vector<std::string> outputs{"sweep.csv"};
    if (opt.svg) {
        io::write_file(out / "sweep.svg",
                       io::svg_line_plot(table, kind_name(config.kind) + " sweep over " + range.phase));
        outputs.push_back("sweep.svg");
    }

    nlohmann::json manifest = base_manifest("sweep", config, opt);
    manifest["sweep"] = opt.sweeps[0];
    manifest["jobs"] = opt.jobs;
    manifest["outputs"] = outputs;
    io::write_json(out / "manifest.json", manifest);

    std::cout << "wrote " << (out / "sweep.csv").string() << " (" << phases.size() << " points)\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// cr: complementarity reports over a phase grid
// ---------------------------------------------------------------------------

struct CrPoint {
    double phi_E, phi_H;
    ComplementarityReport report;
    std::optional<std::pair<double, double>> closed_form;
};

inline DensityMatrixView cr_density(const ExperimentConfig& config, const std::string& stage) {
    const bool bs2 = stage == "bs2";
    if (config.b0 != BlockerB0::off || config.b1)
        throw std::invalid_argument(
            "cr: blocker configurations produce mixed branch states; run without blockers");

    if (config.kind == ExperimentKind::two_photon_unruh) {
        const Stage s = bs2 ? Stage::after_bs2 : Stage::pre_detection;
        const auto branches = enumerate_branches(build_two_photon_unruh(config, s));
        const std::vector<cplx>& amp = branches.front().state.amp;
        const bool first_on_block0 = true;  // G and K both sit on the mode-A block
        const ModeLayout layout(2, 2);
        auto idx = [&](int a, int b) {
            return first_on_block0 ? encode_fock(FockState({a, b}, 2), layout)
                                   : encode_fock(FockState({b, a}, 2), layout);
        };
        const std::vector<cplx> eff{amp[idx(2, 0)], amp[idx(0, 2)], amp[idx(1, 1)]};
        double residual = 0.0;
        for (std::size_t k = 0; k < amp.size(); ++k)
            if (k != idx(2, 0) && k != idx(0, 2) && k != idx(1, 1)) residual += std::norm(amp[k]);
        if (residual > 1e-10)
            throw std::runtime_error("cr: state leaked outside the effective (20, 02, 11) basis");
        return DensityMatrixView::from_amplitudes(eff, {"20", "02", "11"});
    }

    if (bs2) throw std::invalid_argument("cr: --stage bs2 applies to the two-photon experiment only");

    if (config.kind == ExperimentKind::unruh) {
        const auto branches = enumerate_branches(build_unruh(config, Stage::pre_detection));
        const auto& amp = branches.front().state.amp;
        return DensityMatrixView::from_amplitudes({amp[0b10], amp[0b01]}, {"10_KL", "01_KL"});
    }
    const auto branches = enumerate_branches(build_pessoa(config, Stage::pre_detection));
    const auto& amp = branches.front().state.amp;
    // Final modes: M = q2, Q = q3, R = q0, P = q1.
    return DensityMatrixView::from_amplitudes({amp[0b0010], amp[0b0001], amp[0b1000], amp[0b0100]},
                                              {"M", "Q", "R", "P"});
}

inline int cmd_cr(const CommandOptions& opt) {
    const ExperimentConfig config = resolve_config(opt);
    if (opt.stage != "final" && opt.stage != "bs2")
        throw std::invalid_argument("cr: --stage must be bs2 or final");
    if (opt.sweeps.empty() || opt.sweeps.size() > 2)
        throw std::invalid_argument("cr: provide one --sweep (curve) or two (grid)");

    std::vector<SweepRange> ranges;
    for (const auto& s : opt.sweeps) ranges.push_back(parse_sweep(s));
    if (ranges.size() == 2 && ranges[0].phase == ranges[1].phase)
        throw std::invalid_argument("cr: grid sweeps must cover two distinct phases");

    std::vector<std::pair<double, double>> grid;  // (phi_E, phi_H)
    auto point_of = [&](const SweepRange& r, double v) {
        ExperimentConfig p = config;
        apply_phase(p, r.phase, v);
        return std::make_pair(p.phi_E, p.phi_H);
    };
    if (ranges.size() == 1) {
        for (double v : ranges[0].values()) grid.push_back(point_of(ranges[0], v));
    } else {
        for (double a : ranges[0].values())
            for (double b : ranges[1].values()) {
                ExperimentConfig p = config;
                apply_phase(p, ranges[0].phase, a);
                apply_phase(p, ranges[1].phase, b);
                grid.push_back({p.phi_E, p.phi_H});
            }
    }

    const bool closed_forms = config.kind == ExperimentKind::two_photon_unruh;
    std::vector<CrPoint> points(grid.size());
    parallel_for(grid.size(), opt.jobs, [&](std::size_t i) {
        ExperimentConfig p = config;
        p.phi_E = grid[i].first;
        p.phi_H = grid[i].second;
        CrPoint out{p.phi_E, p.phi_H, ComplementarityReport::from_density(cr_density(p, opt.stage)), {}};
        if (closed_forms)
            out.closed_form = opt.stage == "bs2" ? two_photon_cr_after_bs2(p.phi_E)
                                                 : two_photon_cr_after_bs3(p.phi_E, p.phi_H);
        points[i] = std::move(out);
    });

    io::CsvTable table;
    table.columns = {"phi_E", "phi_H", "C_l1", "P_l1", "slack", "pure"};
    if (closed_forms) {
        table.columns.push_back("C_closed");
        table.columns.push_back("P_closed");
    }
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& p : points) {
        std::vector<double> row{p.phi_E, p.phi_H, p.report.c_l1, p.report.p_l1,
                                p.report.slack, p.report.pure ? 1.0 : 0.0};
        nlohmann::json jr = {{"phi_E", io::round_12(p.phi_E)},
                             {"phi_H", io::round_12(p.phi_H)},
                             {"C_l1", io::round_12(p.report.c_l1)},
                             {"P_l1", io::round_12(p.report.p_l1)},
                             {"d", p.report.d},
                             {"slack", io::round_12(p.report.slack)},
                             {"pure", p.report.pure}};
        if (p.closed_form) {
            row.push_back(p.closed_form->first);
            row.push_back(p.closed_form->second);
            jr["C_closed"] = io::round_12(p.closed_form->first);
            jr["P_closed"] = io::round_12(p.closed_form->second);
        }
        table.rows.push_back(std::move(row));
        reports.push_back(std::move(jr));
    }

    const std::filesystem::path out(opt.out_dir);
    io::write_file(out / "cr.csv", table.str());
    nlohmann::json cr_json;
    cr_json["experiment"] = kind_name(config.kind);
    cr_json["stage"] = opt.stage;
    cr_json["reports"] = reports;
    io::write_json(out / "cr.json", cr_json);
    std::vector<std::string> outputs{"cr.csv", "cr.json"};

    if (opt.svg && ranges.size() == 1) {
        io::CsvTable plot;
        const std::string x = ranges[0].phase;
        plot.columns = {x, "C_l1", "P_l1"};
        for (const auto& p : points)
            plot.rows.push_back({x == "phi_E" ? p.phi_E : p.phi_H, p.report.c_l1, p.report.p_l1});
        io::write_file(out / "cr.svg", io::svg_line_plot(plot, "complementarity over " + x));
        outputs.push_back("cr.svg");
    }

    nlohmann::json manifest = base_manifest("cr", config, opt);
    manifest["sweeps"] = opt.sweeps;
    manifest["stage"] = opt.stage;
    manifest["jobs"] = opt.jobs;
    manifest["outputs"] = outputs;
    io::write_json(out / "manifest.json", manifest);

    std::cout << "wrote " << (out / "cr.csv").string() << " (" << points.size() << " points)\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

inline void add_common_options(CLI::App* sub, CommandOptions& opt, bool with_sweep) {
    sub->add_option("name", opt.preset, "preset name, e.g. unruh/no-blockers");
    sub->add_option("--preset", opt.preset, "preset name (same as the positional argument)");
    sub->add_option("--config", opt.config_file, "config or manifest JSON file");
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--shots", opt.shots, "sampled shots (0 disables sampling)");
    sub->add_option("--seed", opt.seed, "sampling seed");
    sub->add_option("--synthesis", opt.synthesis, "exact | decomposed | trotter:<steps>");
    sub->add_option("--jobs", opt.jobs, "worker threads for sweep points");
    if (with_sweep)
        sub->add_option("--sweep", opt.sweeps, "<phase>:<start>:<stop>:<points>, phase in {phi_E, phi_H}");
}

inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"digital simulation of bosonic interferometry experiments"};
    app.require_subcommand(1);

    CommandOptions run_opt, sweep_opt, cr_opt;
    CLI::App* run = app.add_subcommand("run", "exact + sampled outcome histograms");
    add_common_options(run, run_opt, false);
    CLI::App* sweep = app.add_subcommand("sweep", "detector probabilities over a phase sweep");
    add_common_options(sweep, sweep_opt, true);
    sweep->add_flag("--svg", sweep_opt.svg, "also write a line plot");
    CLI::App* cr = app.add_subcommand("cr", "complementarity reports over a phase grid");
    add_common_options(cr, cr_opt, true);
    cr->add_option("--stage", cr_opt.stage, "bs2 | final (two-photon closed forms)");
    cr->add_flag("--svg", cr_opt.svg, "also write a line plot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(run_opt);
        if (sweep->parsed()) return cmd_sweep(sweep_opt);
        if (cr->parsed()) return cmd_cr(cr_opt);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace graysim::cli
