// Command-line front end: single runs, protocol comparisons, parameter
// sweeps and manifest replay. All artifacts (CSV series, JSON summaries,
// SVG charts, manifest) land in the output directory.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rbebp/engine.hpp"
#include "rbebp/io.hpp"

namespace fs = std::filesystem;
using namespace rbebp;

namespace {

std::string default_out_dir()
{
    const char* env = std::getenv("RBEBP_OUT_DIR");
    return env && *env ? env : "out";
}

// "a..b" (inclusive) or comma-separated list.
std::vector<std::uint64_t> parse_seeds(const std::string& text)
{
    std::vector<std::uint64_t> seeds;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::uint64_t a = std::stoull(text.substr(0, dots));
        const std::uint64_t b = std::stoull(text.substr(dots + 2));
        if (b < a)
            throw CLI::ValidationError("--seeds", "range end before start");
        for (std::uint64_t s = a; s <= b; ++s)
            seeds.push_back(s);
        return seeds;
    }
    std::istringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ','))
        seeds.push_back(std::stoull(cell));
    if (seeds.empty())
        throw CLI::ValidationError("--seeds", "empty seed list");
    return seeds;
}

std::vector<std::string> split_csv(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    return out;
}

struct CommonFlags {
    int nodes = 100;
    std::uint64_t seed = 1;
    int rounds = 50000;
    std::string out_dir = default_out_dir();
    std::string preset;
    double initial_energy = 2.0;
    int ch_count = 0;
    double leach_p = 0.05;
    double inner_radius = -1.0;
    double death_threshold = -1.0;
    double round_seconds = 1.0;
    bool no_control = false;
    std::string relay_rule = "eq4";
    double e_elec = 50e-9;
    double e_da = 5e-9;
    double eps_fs = 10e-12;
    double eps_mp = 0.0013e-12;
    int packet_bits = 2000;
    int control_bits = 100;
};

void add_common(CLI::App* cmd, CommonFlags& f)
{
    cmd->add_option("--nodes", f.nodes, "Node count")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "RNG seed");
    cmd->add_option("--rounds", f.rounds, "Round cap")->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", f.out_dir, "Output directory");
    cmd->add_option("--preset", f.preset, "Named parameter preset (table1)")
        ->check(CLI::IsMember({"table1"}));
    cmd->add_option("--initial-energy", f.initial_energy, "Initial node energy (J)");
    cmd->add_option("--ch-count", f.ch_count, "Cluster heads per round (0 = auto)");
    cmd->add_option("--leach-p", f.leach_p, "LEACH desired CH proportion");
    cmd->add_option("--inner-radius", f.inner_radius, "Inner region radius (m)");
    cmd->add_option("--death-threshold", f.death_threshold,
                    "Energy floor below which a node is dead (J, <0 = auto)");
    cmd->add_option("--round-seconds", f.round_seconds, "Seconds per round");
    cmd->add_flag("--no-control-charge", f.no_control,
                  "Skip advertisement/join energy charges");
    cmd->add_option("--relay-rule", f.relay_rule, "Relay selection rule")
        ->check(CLI::IsMember({"eq4", "nearest"}));
    cmd->add_option("--e-elec", f.e_elec, "Electronics energy (J/bit)");
    cmd->add_option("--e-da", f.e_da, "Aggregation energy (J/bit/signal)");
    cmd->add_option("--eps-fs", f.eps_fs, "Free-space amplifier (J/bit/m^2)");
    cmd->add_option("--eps-mp", f.eps_mp, "Multipath amplifier (J/bit/m^4)");
    cmd->add_option("--packet-bits", f.packet_bits, "Data packet size (bits)");
    cmd->add_option("--control-bits", f.control_bits, "Control packet size (bits)");
    cmd->set_config("--config", "", "Key=value config file; flags take precedence");
}

SimConfig to_config(const CommonFlags& f, Protocol protocol)
{
    SimConfig cfg = SimConfig::table1(f.nodes, protocol, f.seed);
    cfg.radio = RadioParams(f.e_elec, f.eps_fs, f.eps_mp, f.e_da, f.packet_bits,
                            f.control_bits);
    cfg.initial_energy = f.initial_energy;
    cfg.ch_count = f.ch_count;
    cfg.leach_p = f.leach_p;
    cfg.max_rounds = f.rounds;
    cfg.round_seconds = f.round_seconds;
    cfg.death_threshold = f.death_threshold;
    cfg.charge_control = !f.no_control;
    cfg.relay_rule = f.relay_rule == "nearest" ? RelayRule::nearest_upper
                                               : RelayRule::eq4_cost;
    if (f.inner_radius > 0)
        cfg.field.inner_radius = f.inner_radius;
    validate(cfg);
    return cfg;
}

std::string fmt_opt_seconds(const std::optional<double>& s)
{
    if (!s)
        return "not reached";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g s", *s);
    return buf;
}

void print_summary(const SimConfig& cfg, const LifetimeSummary& sum)
{
    std::cout << protocol_name(cfg.protocol) << " n=" << cfg.node_count
              << " seed=" << cfg.seed << "  FND " << fmt_opt_seconds(sum.fnd_seconds())
              << "  HND " << fmt_opt_seconds(sum.hnd_seconds()) << "  AND "
              << fmt_opt_seconds(sum.and_seconds()) << "  throughput "
              << sum.total_throughput << "  energy " << sum.total_energy_consumed
              << " J\n";
}

int cmd_run(const CommonFlags& f, const std::string& protocol, bool trace,
            bool placement)
{
    SimConfig cfg = to_config(f, protocol_from_name(protocol));
    RunArtifacts art = emit_run(cfg, f.out_dir, trace);
    if (placement) {
        const auto nodes = deploy(cfg.node_count, cfg.field, cfg.initial_energy,
                                  cfg.seed);
        write_placement_csv(nodes, (fs::path(f.out_dir) /
                                    (run_stem(cfg) + ".placement.csv"))
                                       .string());
    }

    std::vector<std::string> outputs = {fs::path(art.csv).filename().string(),
                                        fs::path(art.summary_json).filename().string()};
    if (!art.trace_jsonl.empty())
        outputs.push_back(fs::path(art.trace_jsonl).filename().string());
    write_manifest(cfg, {cfg.seed}, f.out_dir, outputs);

    RunResult result = run_simulation(cfg);
    print_summary(cfg, result.summary);
    return 0;
}

struct SummaryRow {
    std::string protocol;
    int n;
    std::uint64_t seed;
    LifetimeSummary summary;
};

void write_summaries_csv(const std::vector<SummaryRow>& rows, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << "protocol,n,seed,fnd_s,hnd_s,and_s,throughput,energy_j\n";
    auto cell = [](const std::optional<double>& v) {
        if (!v)
            return std::string("not_reached");
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", *v);
        return std::string(buf);
    };
    for (const SummaryRow& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", r.summary.total_energy_consumed);
        out << r.protocol << ',' << r.n << ',' << r.seed << ','
            << cell(r.summary.fnd_seconds()) << ',' << cell(r.summary.hnd_seconds())
            << ',' << cell(r.summary.and_seconds()) << ','
            << r.summary.total_throughput << ',' << buf << '\n';
    }
}

int cmd_compare(const CommonFlags& f, const std::string& protocols_text,
                const std::string& nodes_text, const std::string& seeds_text)
{
    const std::vector<std::string> protocols = split_csv(protocols_text);
    if (protocols.size() < 2)
        throw CLI::ValidationError("--protocols", "need at least two protocols");
    std::vector<int> node_counts;
    for (const std::string& s : split_csv(nodes_text))
        node_counts.push_back(std::stoi(s));
    const std::vector<std::uint64_t> seeds = parse_seeds(seeds_text);

    fs::create_directories(f.out_dir);
    std::vector<SummaryRow> rows;
    // first-seed series per (protocol, n), for the charts
    std::map<int, std::vector<LabeledSeries>> chart_series;

    for (const std::string& proto : protocols) {
        for (int n : node_counts) {
            for (std::uint64_t seed : seeds) {
                CommonFlags rf = f;
                rf.nodes = n;
                rf.seed = seed;
                SimConfig cfg = to_config(rf, protocol_from_name(proto));
                RunResult result = run_simulation(cfg);
                emit_run(cfg, f.out_dir);
                rows.push_back({proto, n, seed, result.summary});
                if (seed == seeds.front())
                    chart_series[n].push_back({proto, result.series});
            }
        }
    }

    write_summaries_csv(rows, (fs::path(f.out_dir) / "compare_runs.csv").string());

    // Table-II-shaped means
    const std::string table_path = (fs::path(f.out_dir) / "compare_table.csv").string();
    std::ofstream table(table_path, std::ios::binary);
    if (!table)
        throw std::runtime_error("cannot open for writing: " + table_path);
    table << "protocol,n,mean_fnd_s,mean_hnd_s,mean_and_s\n";
    std::printf("%-8s %6s %12s %12s %12s\n", "protocol", "nodes", "FND(s)", "HND(s)",
                "AND(s)");
    for (const std::string& proto : protocols) {
        for (int n : node_counts) {
            double fnd = 0, hnd = 0, andv = 0;
            int cnt = 0;
            for (const SummaryRow& r : rows) {
                if (r.protocol != proto || r.n != n)
                    continue;
                // unreached milestones count at the horizon
                const double horizon = f.rounds * f.round_seconds;
                fnd += r.summary.fnd_seconds().value_or(horizon);
                hnd += r.summary.hnd_seconds().value_or(horizon);
                andv += r.summary.and_seconds().value_or(horizon);
                ++cnt;
            }
            fnd /= cnt;
            hnd /= cnt;
            andv /= cnt;
            table << proto << ',' << n << ',' << fnd << ',' << hnd << ',' << andv << '\n';
            std::printf("%-8s %6d %12.1f %12.1f %12.1f\n", proto.c_str(), n, fnd, hnd,
                        andv);
        }
    }
    table.close();

    for (const auto& [n, series] : chart_series) {
        for (auto [metric, name] : {std::pair{ChartMetric::alive, "alive"},
                                    {ChartMetric::energy, "energy"},
                                    {ChartMetric::throughput, "throughput"}}) {
            std::ostringstream path;
            path << (fs::path(f.out_dir) / "compare_").string() << name << "_n" << n
                 << ".svg";
            emit_chart(series, metric, f.round_seconds, path.str());
        }
    }
    return 0;
}

int cmd_sweep(const CommonFlags& f, const std::string& protocol,
              const std::string& param, const std::string& values_text,
              const std::string& seeds_text)
{
    const std::vector<std::string> values = split_csv(values_text);
    if (values.empty())
        throw CLI::ValidationError("--values", "empty value list");
    const std::vector<std::uint64_t> seeds = parse_seeds(seeds_text);

    fs::create_directories(f.out_dir);
    const std::string path = (fs::path(f.out_dir) / "sweep_summaries.csv").string();
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << "param,value,protocol,n,seed,fnd_s,hnd_s,and_s,throughput,energy_j\n";

    for (const std::string& value : values) {
        for (std::uint64_t seed : seeds) {
            CommonFlags rf = f;
            rf.seed = seed;
            if (param == "inner_radius")
                rf.inner_radius = std::stod(value);
            else if (param == "ch_count")
                rf.ch_count = std::stoi(value);
            else if (param == "leach_p")
                rf.leach_p = std::stod(value);
            else if (param == "relay_rule")
                rf.relay_rule = value;
            else
                throw CLI::ValidationError("--param", "unknown parameter: " + param);

            SimConfig cfg = to_config(rf, protocol_from_name(protocol));
            RunResult result = run_simulation(cfg);
            auto cell = [](const std::optional<double>& v) {
                return v ? std::to_string(*v) : std::string("not_reached");
            };
            out << param << ',' << value << ',' << protocol << ',' << rf.nodes << ','
                << seed << ',' << cell(result.summary.fnd_seconds()) << ','
                << cell(result.summary.hnd_seconds()) << ','
                << cell(result.summary.and_seconds()) << ','
                << result.summary.total_throughput << ','
                << result.summary.total_energy_consumed << '\n';
        }
    }
    std::cout << "wrote " << path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Round-based sensor-network lifetime simulator (RBEBP vs LEACH)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommonFlags run_flags;
    std::string run_protocol = "rbebp";
    bool run_trace = false;
    CLI::App* run = app.add_subcommand("run", "Run one simulation");
    add_common(run, run_flags);
    run->add_option("--protocol", run_protocol, "Protocol")
        ->check(CLI::IsMember({"rbebp", "leach"}));
    run->add_flag("--trace", run_trace, "Also write a JSONL round trace");
    bool run_placement = false;
    run->add_flag("--placement", run_placement, "Also write the node placement CSV");

    CommonFlags cmp_flags;
    std::string cmp_protocols = "leach,rbebp";
    std::string cmp_nodes = "35,50,100";
    std::string cmp_seeds = "1..10";
    CLI::App* cmp = app.add_subcommand("compare", "Paired protocol comparison");
    add_common(cmp, cmp_flags);
    cmp->add_option("--protocols", cmp_protocols, "Comma-separated protocol list");
    cmp->add_option("--nodes-list", cmp_nodes, "Comma-separated node counts");
    cmp->add_option("--seeds", cmp_seeds, "Seed list (a,b,c) or range (a..b)");

    CommonFlags swp_flags;
    std::string swp_protocol = "rbebp";
    std::string swp_param;
    std::string swp_values;
    std::string swp_seeds = "1..3";
    CLI::App* swp = app.add_subcommand("sweep", "Sweep one parameter");
    add_common(swp, swp_flags);
    swp->add_option("--protocol", swp_protocol, "Protocol")
        ->check(CLI::IsMember({"rbebp", "leach"}));
    swp->add_option("--param", swp_param, "Swept parameter")->required();
    swp->add_option("--values", swp_values, "Comma-separated values")->required();
    swp->add_option("--seeds", swp_seeds, "Seed list or range");

    std::string replay_path;
    std::string replay_out;
    CLI::App* rpl = app.add_subcommand("replay", "Re-emit every file of a manifest");
    rpl->add_option("manifest", replay_path, "Path to manifest.json")->required();
    rpl->add_option("--out", replay_out, "Override output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (run->parsed())
            return cmd_run(run_flags, run_protocol, run_trace, run_placement);
        if (cmp->parsed())
            return cmd_compare(cmp_flags, cmp_protocols, cmp_nodes, cmp_seeds);
        if (swp->parsed())
            return cmd_sweep(swp_flags, swp_protocol, swp_param, swp_values, swp_seeds);
        if (rpl->parsed()) {
            for (const std::string& file : replay_manifest(replay_path, replay_out))
                std::cout << file << '\n';
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
