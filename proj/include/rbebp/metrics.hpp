#ifndef RBEBP_METRICS_HPP
#define RBEBP_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rbebp/field.hpp"

namespace rbebp {

// Per-round observation emitted by the simulation engine. Rounds are
// 0-indexed; record i describes the network after round i completed.
struct RoundRecord {
    int round = 0;
    int alive = 0;
    double remaining_j = 0.0;
    double consumed_j = 0.0;
    int delivered = 0;
    int ch_count = 0;
    std::optional<Region> active_region; // empty for protocols without regions
};

// Lifetime milestones in rounds; empty optional means "not reached" within
// the simulated horizon. HND triggers once ceil(n/2) nodes have died.
struct LifetimeSummary {
    std::optional<int> fnd;
    std::optional<int> hnd;
    std::optional<int> and_;
    double round_seconds = 1.0;
    long long total_throughput = 0;
    double total_energy_consumed = 0.0;

    std::optional<double> fnd_seconds() const;
    std::optional<double> hnd_seconds() const;
    std::optional<double> and_seconds() const;
};

LifetimeSummary summarize(const std::vector<RoundRecord>& series, int n,
                          double round_seconds);

// CSV: header row, one row per round, summary as a commented footer.
// UTF-8, LF, stable column order.
void emit_csv(const std::vector<RoundRecord>& series, const LifetimeSummary& summary,
              const std::string& path);

// Parses a file written by emit_csv (footer comments ignored).
std::vector<RoundRecord> parse_csv(const std::string& path);

enum class ChartMetric { alive, energy, throughput };

struct LabeledSeries {
    std::string label;
    std::vector<RoundRecord> rounds;
};

// Static SVG line chart, one polyline per series. energy and throughput are
// plotted as cumulative totals over time.
void emit_chart(const std::vector<LabeledSeries>& series_set, ChartMetric metric,
                double round_seconds, const std::string& path);

std::string summary_to_json(const LifetimeSummary& summary, const std::string& protocol,
                            int n, std::uint64_t seed);

} // namespace rbebp

#endif
