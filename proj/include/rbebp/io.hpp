#ifndef RBEBP_IO_HPP
#define RBEBP_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rbebp/engine.hpp"

namespace rbebp {

extern const char* const kToolVersion;

std::string config_to_json(const SimConfig& cfg);
SimConfig config_from_json(const std::string& text);

// Files produced by one run: <stem>.csv, <stem>.summary.json and optionally
// <stem>.trace.jsonl (one RoundPlan+record per line).
struct RunArtifacts {
    std::string csv;
    std::string summary_json;
    std::string trace_jsonl; // empty if not requested
};

std::string run_stem(const SimConfig& cfg);

RunArtifacts emit_run(const SimConfig& cfg, const std::string& out_dir,
                      bool with_trace = false);

// Manifest: enough to re-emit every file byte-identically.
std::string write_manifest(const SimConfig& cfg,
                           const std::vector<std::uint64_t>& seeds,
                           const std::string& out_dir,
                           const std::vector<std::string>& outputs);

// Re-runs every (config, seed) named by the manifest; returns the emitted files.
std::vector<std::string> replay_manifest(const std::string& manifest_path,
                                         const std::string& out_dir_override = "");

std::string read_file(const std::string& path);

} // namespace rbebp

#endif
