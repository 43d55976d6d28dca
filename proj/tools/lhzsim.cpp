// lhzsim: command-line harness around the lhz library. Every command writes
// its data files plus a manifest.json (config echo + checksums) into the
// output directory.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lhz/dynamics.hpp"
#include "lhz/instance.hpp"
#include "lhz/landau.hpp"
#include "lhz/layout.hpp"
#include "lhz/magnetization.hpp"
#include "lhz/report.hpp"
#include "lhz/rng.hpp"
#include "lhz/schedule.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lhz;

namespace {

constexpr const char* kVersion = "1.0.0";

// ---------------------------------------------------------------- options

struct Options {
    // model
    int n_logical = 4;
    std::string representation = "auxiliary";
    double constraint_strength = 2.0;
    double aux_field = 10.0;
    double j_low = -1.0, j_high = 1.0;
    // schedule
    std::string schedule = "inhom";
    double r = 0.5;
    std::string order = "ascending";
    // dynamics
    std::vector<double> t_f = {1.0, 1.93, 3.73, 7.2, 13.9, 26.8, 51.8, 100.0};
    int steps_per_unit_time = 64;
    int grid_points = 64;
    int n_levels = 4;
    bool no_gap = false;
    // sampling
    int ms = 10000;
    std::vector<double> m_list;
    int m_grid = 0;
    std::string normalization = "maxenergy";
    // landau
    std::string variant = "thermo";
    int n_physical = 0;
    double beta = 10.0;
    std::vector<double> j_uniform = {-1.0, 1.0};
    std::optional<double> j_point;
    int quad_nodes_j = 64;
    int quad_nodes_label = 32;
    double s = 0.5, tau = 0.5;
    std::vector<double> s_grid;
    double tau_low = 0.0, tau_high = 1.0;
    double min_jump = 0.01;
    // harness
    std::string seeds_spec = "1";
    int threads = 0;
    std::string output_dir;
    std::string input;  // summarize
};

std::vector<uint64_t> parse_seeds(const std::string& spec) {
    std::vector<uint64_t> seeds;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        const std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        const size_t dots = tok.find("..");
        if (dots == std::string::npos) {
            seeds.push_back(std::stoull(tok));
        } else {
            const uint64_t a = std::stoull(tok.substr(0, dots));
            const uint64_t b = std::stoull(tok.substr(dots + 2));
            if (b < a) throw CLI::ValidationError("--seeds", "range end before start");
            for (uint64_t v = a; v <= b; ++v) seeds.push_back(v);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (seeds.empty()) throw CLI::ValidationError("--seeds", "no seeds given");
    return seeds;
}

Representation parse_representation(const std::string& s) {
    if (s == "direct") return Representation::Direct;
    if (s == "auxiliary") return Representation::Auxiliary;
    throw CLI::ValidationError("--representation", "must be direct or auxiliary");
}

ScheduleKind parse_schedule_kind(const std::string& s) {
    if (s == "hom" || s == "homogeneous") return ScheduleKind::Homogeneous;
    if (s == "inhom" || s == "inhomogeneous") return ScheduleKind::Inhomogeneous;
    throw CLI::ValidationError("--schedule", "must be hom or inhom");
}

SwitchOrder parse_order(const std::string& s) {
    if (s == "ascending") return SwitchOrder::Ascending;
    if (s == "descending") return SwitchOrder::Descending;
    throw CLI::ValidationError("--order", "must be ascending or descending");
}

FreeEnergyVariant parse_variant(const std::string& s) {
    if (s == "thermo") return FreeEnergyVariant::Thermo;
    if (s == "finite") return FreeEnergyVariant::FiniteSize;
    if (s == "scaled") return FreeEnergyVariant::ScaledC;
    if (s == "finite-temperature") return FreeEnergyVariant::FiniteTemperature;
    throw CLI::ValidationError("--variant", "must be thermo, finite, scaled or finite-temperature");
}

Schedule make_schedule(const Options& o, int n_spins) {
    Schedule sch;
    sch.kind = parse_schedule_kind(o.schedule);
    sch.r = o.r;
    sch.order = parse_order(o.order);
    sch.n_driven = n_spins;
    return sch;
}

FreeEnergyFamily make_family(const Options& o) {
    FreeEnergyFamily fam;
    fam.variant = parse_variant(o.variant);
    fam.constraint_strength = o.constraint_strength;
    fam.n_physical = o.n_physical;
    fam.beta = o.beta;
    if (o.j_point) {
        fam.j_dist = JDistribution::point_mass(*o.j_point);
        fam.j_samples.assign(std::max(o.n_physical, 0), *o.j_point);
    } else {
        if (o.j_uniform.size() != 2)
            throw CLI::ValidationError("--j-uniform", "expects two values");
        fam.j_dist = JDistribution::uniform(o.j_uniform[0], o.j_uniform[1]);
        if (fam.variant == FreeEnergyVariant::FiniteTemperature) {
            SplitMix64 rng(derive_stream(0, 0x6a5d));
            fam.j_samples.resize(std::max(o.n_physical, 0));
            for (auto& v : fam.j_samples) v = rng.uniform(o.j_uniform[0], o.j_uniform[1]);
        }
    }
    fam.quad_nodes_j = o.quad_nodes_j;
    fam.quad_nodes_label = o.quad_nodes_label;
    return fam;
}

// n points evenly spread over [-1, 1], snapped to admissible magnetizations
std::vector<double> admissible_grid(int n_physical, int n_points) {
    std::vector<double> out;
    for (int i = 0; i < n_points; ++i) {
        const double target = n_points == 1 ? 0.0 : -1.0 + 2.0 * i / (n_points - 1);
        const int u = static_cast<int>(std::lround((target + 1.0) / 2.0 * n_physical));
        const double m = (2.0 * u - n_physical) / n_physical;
        if (out.empty() || m != out.back()) out.push_back(m);
    }
    return out;
}

std::vector<double> resolve_m_values(const Options& o, int n_physical) {
    if (!o.m_list.empty()) return o.m_list;
    return admissible_grid(n_physical, o.m_grid > 0 ? o.m_grid : 21);
}

// ---------------------------------------------------------------- manifest

struct RunWriter {
    fs::path dir;
    json manifest;

    RunWriter(const Options& o, const std::string& command, const json& config) {
        std::string base = o.output_dir;
        if (base.empty()) {
            if (const char* env = std::getenv("LHZ_OUTPUT_DIR")) base = env;
            if (base.empty()) base = ".";
        }
        dir = fs::path(base);
        fs::create_directories(dir);
        manifest["command"] = command;
        manifest["version"] = kVersion;
        manifest["timestamp"] = static_cast<int64_t>(
            std::chrono::duration_cast<std::chrono::seconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count());
        manifest["config"] = config;
        manifest["outputs"] = json::array();
    }

    void emit(const std::string& name, const std::string& text) {
        const fs::path path = dir / name;
        std::ofstream out(path, std::ios::binary);
        out << text;
        out.close();
        manifest["outputs"].push_back({{"file", name}, {"checksum", file_checksum(path)}});
    }

    void finish() {
        std::ofstream out(dir / "manifest.json", std::ios::binary);
        out << manifest.dump(2) << "\n";
    }
};

json config_echo(const Options& o) {
    json j;
    j["n_logical"] = o.n_logical;
    j["representation"] = o.representation;
    j["constraint_strength"] = o.constraint_strength;
    j["aux_field"] = o.aux_field;
    j["j_range"] = {o.j_low, o.j_high};
    j["schedule"] = o.schedule;
    j["r"] = o.r;
    j["order"] = o.order;
    j["t_f"] = o.t_f;
    j["steps_per_unit_time"] = o.steps_per_unit_time;
    j["grid_points"] = o.grid_points;
    j["n_levels"] = o.n_levels;
    j["ms"] = o.ms;
    j["normalization"] = o.normalization;
    j["variant"] = o.variant;
    j["n_physical"] = o.n_physical;
    j["beta"] = o.beta;
    if (o.j_point)
        j["j_point"] = *o.j_point;
    else
        j["j_uniform"] = o.j_uniform;
    j["quad_nodes_j"] = o.quad_nodes_j;
    j["quad_nodes_label"] = o.quad_nodes_label;
    j["s"] = o.s;
    j["tau"] = o.tau;
    j["seeds"] = o.seeds_spec;
    j["threads"] = o.threads;
    return j;
}

std::string schedule_name(ScheduleKind k) {
    return k == ScheduleKind::Homogeneous ? "hom" : "inhom";
}

// ---------------------------------------------------------------- commands

const std::vector<std::string> kSweepHeader = {
    "seed",    "schedule_kind", "r",       "order",        "t_f",
    "fidelity_sq", "residual_energy", "min_gap", "gap_location", "norm_drift"};

void append_row(CsvWriter& csv, const EnsembleRow& r) {
    csv.row({std::to_string(r.seed), schedule_name(r.kind), format_double(r.r),
             r.order == SwitchOrder::Ascending ? "ascending" : "descending",
             format_double(r.t_f), format_double(r.fidelity_sq),
             format_double(r.residual_energy), format_double(r.min_gap),
             format_double(r.gap_location), format_double(r.norm_drift)});
}

int cmd_sweep(const Options& o) {
    RunWriter run(o, "sweep", config_echo(o));
    const auto layout = build_layout(o.n_logical, parse_representation(o.representation));
    const auto seeds = parse_seeds(o.seeds_spec);
    const auto inst = sample_instance(layout, seeds.front(), o.j_low, o.j_high,
                                      o.constraint_strength, o.aux_field);
    const Schedule sch = make_schedule(o, layout.n_spins());
    const GapResult gap = o.no_gap ? GapResult{0.0, 0.0}
                                   : min_gap(inst, sch, o.grid_points);
    CsvWriter csv(kSweepHeader);
    for (double tf : o.t_f) {
        const SweepResult res = evolve(inst, sch, tf, o.steps_per_unit_time);
        EnsembleRow row;
        row.seed = seeds.front();
        row.kind = sch.kind;
        row.r = o.r;
        row.order = sch.order;
        row.t_f = tf;
        row.fidelity_sq = res.fidelity_sq;
        row.residual_energy = res.residual_energy;
        row.min_gap = gap.gap;
        row.gap_location = gap.location;
        row.norm_drift = res.norm_drift;
        append_row(csv, row);
    }
    run.emit("sweep.csv", csv.text());
    run.finish();
    return 0;
}

int cmd_ensemble(const Options& o) {
    RunWriter run(o, "ensemble", config_echo(o));
    EnsembleConfig cfg;
    cfg.n_logical = o.n_logical;
    cfg.representation = parse_representation(o.representation);
    cfg.constraint_strength = o.constraint_strength;
    cfg.aux_field = o.aux_field;
    cfg.j_low = o.j_low;
    cfg.j_high = o.j_high;
    cfg.r = o.r;
    cfg.order = parse_order(o.order);
    cfg.t_f_values = o.t_f;
    cfg.steps_per_unit_time = o.steps_per_unit_time;
    cfg.gap_grid_points = o.grid_points;
    cfg.with_gap = !o.no_gap;
    cfg.n_threads = o.threads;
    const auto rows = ensemble_run(cfg, parse_seeds(o.seeds_spec));

    CsvWriter csv(kSweepHeader);
    json failures = json::array();
    for (const auto& r : rows) {
        if (r.failed) {
            failures.push_back({{"seed", r.seed}, {"error", r.error}});
            continue;
        }
        append_row(csv, r);
    }
    run.emit("ensemble.csv", csv.text());
    if (!failures.empty()) run.emit("failures.json", failures.dump(2) + "\n");
    run.finish();
    return failures.empty() ? 0 : 1;
}

int cmd_spectrum(const Options& o) {
    RunWriter run(o, "spectrum", config_echo(o));
    const auto layout = build_layout(o.n_logical, parse_representation(o.representation));
    const auto seeds = parse_seeds(o.seeds_spec);
    const auto inst = sample_instance(layout, seeds.front(), o.j_low, o.j_high,
                                      o.constraint_strength, o.aux_field);
    const Schedule sch = make_schedule(o, layout.n_spins());
    std::vector<std::string> header = {"s"};
    for (int i = 0; i < o.n_levels; ++i) header.push_back("E" + std::to_string(i));
    CsvWriter csv(header);
    for (int i = 0; i < o.grid_points; ++i) {
        const double s = o.grid_points == 1
                             ? o.s
                             : static_cast<double>(i) / (o.grid_points - 1);
        const auto spec = spectrum_at(inst, sch, s, o.n_levels);
        std::vector<std::string> cells = {format_double(s)};
        for (double e : spec) cells.push_back(format_double(e));
        csv.row(cells);
    }
    run.emit("spectrum.csv", csv.text());
    run.finish();
    return 0;
}

int cmd_gap_stats(const Options& o) {
    RunWriter run(o, "gap-stats", config_echo(o));
    const auto layout = build_layout(o.n_logical, parse_representation(o.representation));
    CsvWriter csv({"seed", "schedule_kind", "r", "order", "min_gap", "gap_location"});
    for (uint64_t seed : parse_seeds(o.seeds_spec)) {
        const auto inst = sample_instance(layout, seed, o.j_low, o.j_high,
                                          o.constraint_strength, o.aux_field);
        for (ScheduleKind kind : {ScheduleKind::Homogeneous, ScheduleKind::Inhomogeneous}) {
            Schedule sch = make_schedule(o, layout.n_spins());
            sch.kind = kind;
            const GapResult g = min_gap(inst, sch, o.grid_points);
            csv.row({std::to_string(seed), schedule_name(kind), format_double(o.r),
                     o.order, format_double(g.gap), format_double(g.location)});
        }
    }
    run.emit("gap_stats.csv", csv.text());
    run.finish();
    return 0;
}

int cmd_energy_scan(const Options& o) {
    RunWriter run(o, "energy-scan", config_echo(o));
    const auto layout = build_layout(o.n_logical, Representation::Direct);
    const auto seeds = parse_seeds(o.seeds_spec);
    const auto m_values = resolve_m_values(o, layout.n_physical);
    const auto scan =
        scan_energies(layout, m_values, o.ms, o.constraint_strength, seeds.front());
    const auto norm = o.normalization == "absmean" ? ErrorNormalization::AbsMean
                                                   : ErrorNormalization::MaxEnergy;
    const auto rel = relative_error_scan(layout, m_values, o.ms, o.constraint_strength,
                                         seeds.front(), norm);
    CsvWriter csv({"n_physical", "m", "ms", "mean_E", "std_E", "sem_E", "rel_err",
                   "normalization"});
    for (size_t i = 0; i < scan.rows.size(); ++i) {
        const auto& row = scan.rows[i];
        csv.row({std::to_string(layout.n_physical), format_double(row.m),
                 std::to_string(o.ms), format_double(row.mean), format_double(row.std_dev),
                 format_double(row.sem),
                 rel[i].defined ? format_double(rel[i].rel_err) : "nan",
                 o.normalization});
    }
    run.emit("energy_scan.csv", csv.text());
    run.finish();
    return 0;
}

int cmd_fit(const Options& o) {
    RunWriter run(o, "fit", config_echo(o));
    const auto layout = build_layout(o.n_logical, Representation::Direct);
    const auto seeds = parse_seeds(o.seeds_spec);
    const auto m_values = resolve_m_values(o, layout.n_physical);
    const auto scan =
        scan_energies(layout, m_values, o.ms, o.constraint_strength, seeds.front());
    const auto fit = fit_quartic_cubic(scan.rows);
    const auto [a_ref, b_ref] =
        analytic_coefficients_physical(layout.n_physical, o.constraint_strength);
    json j;
    j["a"] = fit.a;
    j["b"] = fit.b;
    j["a_analytic"] = a_ref;
    j["b_analytic"] = b_ref;
    j["residual"] = fit.residual;
    run.emit("fit.json", j.dump(2) + "\n");
    run.finish();
    return 0;
}

int cmd_free_energy(const Options& o) {
    RunWriter run(o, "free-energy", config_echo(o));
    const auto fam = make_family(o);
    std::vector<double> m_values = o.m_list;
    if (m_values.empty()) {
        const int n = o.m_grid > 1 ? o.m_grid : 201;
        for (int i = 0; i < n; ++i) m_values.push_back(-1.0 + 2.0 * i / (n - 1));
    }
    CsvWriter csv({"m", "s", "tau", "f"});
    for (double m : m_values)
        csv.row({format_double(m), format_double(o.s), format_double(o.tau),
                 format_double(fam.value(m, o.s, o.tau))});
    run.emit("free_energy.csv", csv.text());
    run.finish();
    return 0;
}

int cmd_critical(const Options& o) {
    RunWriter run(o, "critical", config_echo(o));
    const auto cp = critical_point(make_family(o));
    json j;
    j["m_c"] = cp.m_c;
    j["s_c"] = cp.s_c;
    j["tau_c"] = cp.tau_c;
    j["residuals"] = cp.residuals;
    j["fourth_derivative"] = cp.fourth_derivative;
    run.emit("critical.json", j.dump(2) + "\n");
    run.finish();
    return 0;
}

int cmd_transition_line(const Options& o) {
    RunWriter run(o, "transition-line", config_echo(o));
    const auto fam = make_family(o);
    std::vector<double> s_grid = o.s_grid;
    if (s_grid.empty())
        for (int i = 1; i <= 20; ++i) s_grid.push_back(i * 0.05 * 0.999);
    const auto line = transition_line(fam, s_grid, o.tau_low, o.tau_high, o.min_jump);
    CsvWriter csv({"s", "tau", "m_below", "m_above", "jump"});
    for (const auto& p : line.points)
        csv.row({format_double(p.s), format_double(p.tau), format_double(p.m_below),
                 format_double(p.m_above), format_double(p.jump)});
    run.emit("transition_line.csv", csv.text());
    run.finish();
    return 0;
}

// summarize: statistics over a sweep/ensemble CSV
int cmd_summarize(const Options& o) {
    std::ifstream in(o.input);
    if (!in) throw CLI::ValidationError("--input", "cannot open " + o.input);
    std::string header;
    std::getline(in, header);
    std::vector<std::string> cols;
    {
        size_t pos = 0;
        while (pos <= header.size()) {
            const size_t c = header.find(',', pos);
            cols.push_back(header.substr(pos, c == std::string::npos ? c : c - pos));
            if (c == std::string::npos) break;
            pos = c + 1;
        }
    }
    auto col = [&](const std::string& name) {
        const auto it = std::find(cols.begin(), cols.end(), name);
        if (it == cols.end())
            throw CLI::ValidationError("--input", "schema mismatch: missing column " + name);
        return static_cast<size_t>(it - cols.begin());
    };
    const size_t c_seed = col("seed"), c_kind = col("schedule_kind"), c_tf = col("t_f"),
                 c_fid = col("fidelity_sq");

    struct Key {
        std::string kind;
        double t_f;
        bool operator<(const Key& other) const {
            return std::tie(kind, t_f) < std::tie(other.kind, other.t_f);
        }
    };
    std::map<Key, std::vector<double>> fid;
    std::map<std::pair<uint64_t, double>, std::map<std::string, double>> paired;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        size_t pos = 0;
        while (pos <= line.size()) {
            const size_t c = line.find(',', pos);
            cells.push_back(line.substr(pos, c == std::string::npos ? c : c - pos));
            if (c == std::string::npos) break;
            pos = c + 1;
        }
        if (cells.size() != cols.size())
            throw CLI::ValidationError("--input", "schema mismatch: ragged row");
        const double f = std::stod(cells[c_fid]);
        const double tf = std::stod(cells[c_tf]);
        fid[{cells[c_kind], tf}].push_back(f);
        paired[{std::stoull(cells[c_seed]), tf}][cells[c_kind]] = f;
    }

    auto quantile = [](std::vector<double> v, double q) {
        std::sort(v.begin(), v.end());
        const double idx = q * (v.size() - 1);
        const size_t lo = static_cast<size_t>(idx);
        const size_t hi = std::min(lo + 1, v.size() - 1);
        return v[lo] + (idx - lo) * (v[hi] - v[lo]);
    };

    json groups = json::array();
    for (const auto& [key, values] : fid) {
        groups.push_back({{"schedule_kind", key.kind},
                          {"t_f", key.t_f},
                          {"count", values.size()},
                          {"min", quantile(values, 0.0)},
                          {"q1", quantile(values, 0.25)},
                          {"median", quantile(values, 0.5)},
                          {"q3", quantile(values, 0.75)},
                          {"max", quantile(values, 1.0)}});
    }
    std::map<double, std::vector<double>> ratios;
    for (const auto& [key, kinds] : paired) {
        const auto hom = kinds.find("hom");
        const auto inhom = kinds.find("inhom");
        if (hom != kinds.end() && inhom != kinds.end() && hom->second > 0.0)
            ratios[key.second].push_back(inhom->second / hom->second);
    }
    json ratio_json = json::array();
    for (const auto& [tf, values] : ratios)
        ratio_json.push_back({{"t_f", tf},
                              {"count", values.size()},
                              {"median_ratio_inhom_over_hom", quantile(values, 0.5)}});

    json out;
    out["groups"] = groups;
    out["paired_fidelity_ratios"] = ratio_json;

    RunWriter run(o, "summarize", {{"input", o.input}});
    run.emit("summary.json", out.dump(2) + "\n");
    run.finish();
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"LHZ parity-architecture annealing and Landau free-energy toolkit"};
    app.require_subcommand(1);
    app.set_config("--config")->description("key = value config file (# comments)");
    app.fallthrough();

    app.add_option("--n-logical", o.n_logical, "number of logical spins")->check(CLI::Range(3, 64));
    app.add_option("--representation", o.representation, "direct or auxiliary");
    app.add_option("--C,--constraint-strength", o.constraint_strength, "constraint strength");
    app.add_option("--aux-field", o.aux_field, "auxiliary pinning field");
    app.add_option("--j-low", o.j_low, "lower bound of J_k");
    app.add_option("--j-high", o.j_high, "upper bound of J_k");
    app.add_option("--schedule", o.schedule, "hom or inhom");
    app.add_option("--r", o.r, "inhomogeneous switch exponent")->check(CLI::PositiveNumber);
    app.add_option("--order", o.order, "ascending or descending switch-off order");
    app.add_option("--t-f", o.t_f, "sweep times")->delimiter(',');
    app.add_option("--steps-per-unit-time", o.steps_per_unit_time, "integrator step density")
        ->check(CLI::PositiveNumber);
    app.add_option("--grid-points", o.grid_points, "grid points for gap/spectrum scans")
        ->check(CLI::PositiveNumber);
    app.add_option("--n-levels", o.n_levels, "eigenvalues per spectrum row")
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-gap", o.no_gap, "skip the min-gap search");
    app.add_option("--ms", o.ms, "samples per magnetization")->check(CLI::PositiveNumber);
    app.add_option("--m-list", o.m_list, "explicit magnetization values")->delimiter(',');
    app.add_option("--m-grid", o.m_grid,
                   "magnetization grid size (snapped to admissible values; default 21)");
    app.add_option("--normalization", o.normalization, "absmean or maxenergy");
    app.add_option("--variant", o.variant,
                   "free-energy variant: thermo, finite, scaled, finite-temperature");
    app.add_option("--n-physical", o.n_physical, "physical qubits for finite-size variants");
    app.add_option("--beta", o.beta, "inverse temperature");
    app.add_option("--j-uniform", o.j_uniform, "uniform J distribution bounds")
        ->expected(2)
        ->delimiter(',');
    app.add_option("--j-point", o.j_point, "point-mass J distribution");
    app.add_option("--quad-nodes-j", o.quad_nodes_j, "quadrature nodes for the J average");
    app.add_option("--quad-nodes-label", o.quad_nodes_label,
                   "quadrature nodes for the label integral");
    app.add_option("--s", o.s, "annealing parameter s");
    app.add_option("--tau", o.tau, "inhomogeneity coordinate tau");
    app.add_option("--s-grid", o.s_grid, "s values for the transition line")->delimiter(',');
    app.add_option("--tau-low", o.tau_low, "transition-line lower tau bound");
    app.add_option("--tau-high", o.tau_high, "transition-line upper tau bound");
    app.add_option("--min-jump", o.min_jump, "smallest jump kept on the transition line");
    app.add_option("--seeds", o.seeds_spec, "seed list: a,b,c and/or a..b ranges");
    app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
    app.add_option("--output-dir", o.output_dir, "output directory (default $LHZ_OUTPUT_DIR)");
    app.add_option("--input", o.input, "input CSV for summarize");

    std::map<std::string, int (*)(const Options&)> commands = {
        {"sweep", cmd_sweep},
        {"ensemble", cmd_ensemble},
        {"spectrum", cmd_spectrum},
        {"gap-stats", cmd_gap_stats},
        {"energy-scan", cmd_energy_scan},
        {"fit", cmd_fit},
        {"free-energy", cmd_free_energy},
        {"critical", cmd_critical},
        {"transition-line", cmd_transition_line},
        {"summarize", cmd_summarize},
    };
    for (const auto& [name, fn] : commands) {
        auto* sub = app.add_subcommand(name);
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        return commands.at(name)(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
