#include "rbebp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rbebp {

namespace {

std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_round_or_not_reached(const std::optional<int>& r, double round_seconds)
{
    if (!r)
        return "not reached";
    std::ostringstream os;
    os << *r << " (" << fmt_double(*r * round_seconds) << " s)";
    return os.str();
}

} // namespace

std::optional<double> LifetimeSummary::fnd_seconds() const
{
    if (!fnd)
        return std::nullopt;
    return *fnd * round_seconds;
}

std::optional<double> LifetimeSummary::hnd_seconds() const
{
    if (!hnd)
        return std::nullopt;
    return *hnd * round_seconds;
}

std::optional<double> LifetimeSummary::and_seconds() const
{
    if (!and_)
        return std::nullopt;
    return *and_ * round_seconds;
}

LifetimeSummary summarize(const std::vector<RoundRecord>& series, int n,
                          double round_seconds)
{
    LifetimeSummary sum;
    sum.round_seconds = round_seconds;
    const int half_dead = (n + 1) / 2; // ceil(n/2) deaths trigger HND
    for (const RoundRecord& r : series) {
        if (!sum.fnd && r.alive < n)
            sum.fnd = r.round;
        if (!sum.hnd && r.alive <= n - half_dead)
            sum.hnd = r.round;
        if (!sum.and_ && r.alive == 0)
            sum.and_ = r.round;
        sum.total_throughput += r.delivered;
        sum.total_energy_consumed += r.consumed_j;
    }
    return sum;
}

void emit_csv(const std::vector<RoundRecord>& series, const LifetimeSummary& summary,
              const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);

    out << "round,seconds,alive,remaining_j,consumed_j,delivered,ch_count,region\n";
    for (const RoundRecord& r : series) {
        out << r.round << ',' << fmt_double(r.round * summary.round_seconds) << ','
            << r.alive << ',' << fmt_double(r.remaining_j) << ','
            << fmt_double(r.consumed_j) << ',' << r.delivered << ',' << r.ch_count
            << ',' << (r.active_region ? region_name(*r.active_region) : "none")
            << '\n';
    }
    out << "# fnd: " << fmt_round_or_not_reached(summary.fnd, summary.round_seconds) << '\n';
    out << "# hnd: " << fmt_round_or_not_reached(summary.hnd, summary.round_seconds) << '\n';
    out << "# and: " << fmt_round_or_not_reached(summary.and_, summary.round_seconds) << '\n';
    out << "# total_throughput: " << summary.total_throughput << '\n';
    out << "# total_energy_consumed_j: " << fmt_double(summary.total_energy_consumed) << '\n';
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::vector<RoundRecord> parse_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path);

    std::vector<RoundRecord> series;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            header_seen = true; // column header
            continue;
        }
        std::istringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (cells.size() != 8)
            throw std::runtime_error("malformed CSV row in " + path + ": " + line);
        RoundRecord r;
        r.round = std::stoi(cells[0]);
        r.alive = std::stoi(cells[2]);
        r.remaining_j = std::stod(cells[3]);
        r.consumed_j = std::stod(cells[4]);
        r.delivered = std::stoi(cells[5]);
        r.ch_count = std::stoi(cells[6]);
        if (cells[7] == "inner")
            r.active_region = Region::inner;
        else if (cells[7] == "outer")
            r.active_region = Region::outer;
        series.push_back(r);
    }
    return series;
}

namespace {

struct Polyline {
    std::string label;
    std::vector<std::pair<double, double>> pts;
};

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                         "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

} // namespace

void emit_chart(const std::vector<LabeledSeries>& series_set, ChartMetric metric,
                double round_seconds, const std::string& path)
{
    if (series_set.empty())
        throw std::invalid_argument("emit_chart: no series");

    std::vector<Polyline> lines;
    for (const LabeledSeries& ls : series_set) {
        Polyline pl;
        pl.label = ls.label;
        double cum = 0.0;
        for (const RoundRecord& r : ls.rounds) {
            double y = 0.0;
            switch (metric) {
            case ChartMetric::alive:
                y = r.alive;
                break;
            case ChartMetric::energy:
                cum += r.consumed_j;
                y = cum;
                break;
            case ChartMetric::throughput:
                cum += r.delivered;
                y = cum;
                break;
            }
            pl.pts.emplace_back(r.round * round_seconds, y);
        }
        lines.push_back(std::move(pl));
    }

    double xmax = 0.0;
    double ymax = 0.0;
    for (const Polyline& pl : lines)
        for (const auto& [x, y] : pl.pts) {
            xmax = std::max(xmax, x);
            ymax = std::max(ymax, y);
        }
    if (xmax <= 0)
        xmax = 1.0;
    if (ymax <= 0)
        ymax = 1.0;

    const double w = 800, h = 500;
    const double ml = 70, mr = 160, mt = 30, mb = 50;
    const double pw = w - ml - mr, ph = h - mt - mb;
    auto px = [&](double x) { return ml + x / xmax * pw; };
    auto py = [&](double y) { return mt + ph - y / ymax * ph; };

    const char* ylabel = metric == ChartMetric::alive        ? "nodes alive"
                         : metric == ChartMetric::energy     ? "energy consumed (J)"
                                                             : "packets delivered";

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << mt + ph << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << h - 12
        << "\" text-anchor=\"middle\" font-size=\"14\">time (s)</text>\n";
    out << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
        << mt + ph / 2 << ")\">" << ylabel << "</text>\n";
    // tick labels at extremes
    out << "<text x=\"" << ml << "\" y=\"" << mt + ph + 18
        << "\" font-size=\"12\">0</text>\n";
    out << "<text x=\"" << ml + pw << "\" y=\"" << mt + ph + 18
        << "\" text-anchor=\"end\" font-size=\"12\">" << fmt_double(xmax)
        << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
        << "\" text-anchor=\"end\" font-size=\"12\">" << fmt_double(ymax)
        << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + ph + 4
        << "\" text-anchor=\"end\" font-size=\"12\">0</text>\n";

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const char* color = kColors[i % (sizeof(kColors) / sizeof(kColors[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : lines[i].pts)
            out << fmt_double(px(x)) << ',' << fmt_double(py(y)) << ' ';
        out << "\"/>\n";
        const double ly = mt + 16 + 18 * static_cast<double>(i);
        out << "<line x1=\"" << ml + pw + 10 << "\" y1=\"" << ly - 4 << "\" x2=\""
            << ml + pw + 34 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << ml + pw + 40 << "\" y=\"" << ly
            << "\" font-size=\"12\">" << lines[i].label << "</text>\n";
    }
    out << "</svg>\n";
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::string summary_to_json(const LifetimeSummary& summary, const std::string& protocol,
                            int n, std::uint64_t seed)
{
    nlohmann::json j;
    j["protocol"] = protocol;
    j["n"] = n;
    j["seed"] = seed;
    auto sec = [&](const std::optional<double>& s) {
        return s ? nlohmann::json(*s) : nlohmann::json(nullptr);
    };
    j["fnd"] = sec(summary.fnd_seconds());
    j["hnd"] = sec(summary.hnd_seconds());
    j["and"] = sec(summary.and_seconds());
    j["throughput"] = summary.total_throughput;
    j["energy"] = summary.total_energy_consumed;
    j["round_seconds"] = summary.round_seconds;
    return j.dump(2) + "\n";
}

} // namespace rbebp
