#include "rbebp/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace rbebp {

const char* const kToolVersion = "0.1.0";

namespace {

json config_json(const SimConfig& cfg)
{
    json j;
    j["node_count"] = cfg.node_count;
    j["field"] = {{"width", cfg.field.width},
                  {"height", cfg.field.height},
                  {"sink", {cfg.field.sink.x, cfg.field.sink.y}},
                  {"region_center", {cfg.field.region_center.x, cfg.field.region_center.y}},
                  {"inner_radius", cfg.field.inner_radius}};
    j["radio"] = {{"e_elec", cfg.radio.e_elec},
                  {"eps_fs", cfg.radio.eps_fs},
                  {"eps_mp", cfg.radio.eps_mp},
                  {"e_da", cfg.radio.e_da},
                  {"packet_bits", cfg.radio.packet_bits},
                  {"control_bits", cfg.radio.control_bits}};
    j["initial_energy"] = cfg.initial_energy;
    j["protocol"] = protocol_name(cfg.protocol);
    j["ch_count"] = cfg.ch_count;
    j["leach_p"] = cfg.leach_p;
    j["max_rounds"] = cfg.max_rounds;
    j["seed"] = cfg.seed;
    j["round_seconds"] = cfg.round_seconds;
    j["death_threshold"] = cfg.death_threshold;
    j["charge_control"] = cfg.charge_control;
    j["relay_rule"] = cfg.relay_rule == RelayRule::eq4_cost ? "eq4" : "nearest";
    return j;
}

SimConfig config_from(const json& j)
{
    SimConfig cfg;
    cfg.node_count = j.at("node_count").get<int>();
    const json& f = j.at("field");
    cfg.field.width = f.at("width").get<double>();
    cfg.field.height = f.at("height").get<double>();
    cfg.field.sink = {f.at("sink")[0].get<double>(), f.at("sink")[1].get<double>()};
    cfg.field.region_center = {f.at("region_center")[0].get<double>(),
                               f.at("region_center")[1].get<double>()};
    cfg.field.inner_radius = f.at("inner_radius").get<double>();
    const json& r = j.at("radio");
    cfg.radio = RadioParams(r.at("e_elec").get<double>(), r.at("eps_fs").get<double>(),
                            r.at("eps_mp").get<double>(), r.at("e_da").get<double>(),
                            r.at("packet_bits").get<int>(),
                            r.at("control_bits").get<int>());
    cfg.initial_energy = j.at("initial_energy").get<double>();
    cfg.protocol = protocol_from_name(j.at("protocol").get<std::string>());
    cfg.ch_count = j.at("ch_count").get<int>();
    cfg.leach_p = j.at("leach_p").get<double>();
    cfg.max_rounds = j.at("max_rounds").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.round_seconds = j.at("round_seconds").get<double>();
    cfg.death_threshold = j.at("death_threshold").get<double>();
    cfg.charge_control = j.at("charge_control").get<bool>();
    const std::string rule = j.at("relay_rule").get<std::string>();
    if (rule == "eq4")
        cfg.relay_rule = RelayRule::eq4_cost;
    else if (rule == "nearest")
        cfg.relay_rule = RelayRule::nearest_upper;
    else
        throw std::invalid_argument("unknown relay_rule: " + rule);
    return cfg;
}

} // namespace

std::string config_to_json(const SimConfig& cfg)
{
    return config_json(cfg).dump(2) + "\n";
}

SimConfig config_from_json(const std::string& text)
{
    return config_from(json::parse(text));
}

std::string run_stem(const SimConfig& cfg)
{
    std::ostringstream os;
    os << protocol_name(cfg.protocol) << "_n" << cfg.node_count << "_s" << cfg.seed;
    return os.str();
}

RunArtifacts emit_run(const SimConfig& cfg, const std::string& out_dir, bool with_trace)
{
    fs::create_directories(out_dir);
    const std::string stem = (fs::path(out_dir) / run_stem(cfg)).string();

    RunArtifacts art;
    art.csv = stem + ".csv";
    art.summary_json = stem + ".summary.json";

    std::ofstream trace;
    RoundObserver observer;
    if (with_trace) {
        art.trace_jsonl = stem + ".trace.jsonl";
        trace.open(art.trace_jsonl, std::ios::binary);
        if (!trace)
            throw std::runtime_error("cannot open for writing: " + art.trace_jsonl);
        observer = [&trace](const RoundRecord& rec, const RoundPlan& plan) {
            json line = json::parse(round_plan_to_json(plan));
            line["round"] = rec.round;
            line["alive"] = rec.alive;
            line["delivered"] = rec.delivered;
            trace << line.dump() << '\n';
        };
    }

    RunResult result = run_simulation(cfg, observer);
    emit_csv(result.series, result.summary, art.csv);

    std::ofstream sj(art.summary_json, std::ios::binary);
    if (!sj)
        throw std::runtime_error("cannot open for writing: " + art.summary_json);
    sj << summary_to_json(result.summary, protocol_name(cfg.protocol),
                          cfg.node_count, cfg.seed);
    return art;
}

std::string write_manifest(const SimConfig& cfg,
                           const std::vector<std::uint64_t>& seeds,
                           const std::string& out_dir,
                           const std::vector<std::string>& outputs)
{
    json j;
    j["tool_version"] = kToolVersion;
    j["config"] = config_json(cfg);
    j["seeds"] = seeds;
    j["out_dir"] = out_dir;
    j["outputs"] = outputs;

    fs::create_directories(out_dir);
    const std::string path = (fs::path(out_dir) / "manifest.json").string();
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    return path;
}

std::vector<std::string> replay_manifest(const std::string& manifest_path,
                                         const std::string& out_dir_override)
{
    json j = json::parse(read_file(manifest_path));
    SimConfig base = config_from(j.at("config"));
    const std::string out_dir =
        out_dir_override.empty() ? j.at("out_dir").get<std::string>() : out_dir_override;

    std::vector<std::string> files;
    for (std::uint64_t seed : j.at("seeds").get<std::vector<std::uint64_t>>()) {
        SimConfig cfg = base;
        cfg.seed = seed;
        RunArtifacts art = emit_run(cfg, out_dir);
        files.push_back(art.csv);
        files.push_back(art.summary_json);
    }
    return files;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace rbebp
