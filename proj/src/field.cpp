#include "rbebp/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

namespace rbebp {

bool operator==(const Point& a, const Point& b)
{
    return a.x == b.x && a.y == b.y;
}

double distance(const Point& a, const Point& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

const char* region_name(Region r)
{
    return r == Region::inner ? "inner" : "outer";
}

double default_inner_radius(const FieldConfig& f)
{
    const Point corners[4] = {{0.0, 0.0},
                              {f.width, 0.0},
                              {0.0, f.height},
                              {f.width, f.height}};
    double far = 0.0;
    for (const Point& c : corners)
        far = std::max(far, distance(f.region_center, c));
    return 0.62 * far;
}

FieldConfig FieldConfig::table1()
{
    FieldConfig f;
    f.inner_radius = default_inner_radius(f);
    return f;
}

Region classify_region(const Point& pos, const FieldConfig& field)
{
    return distance(pos, field.region_center) <= field.inner_radius ? Region::inner
                                                                    : Region::outer;
}

double annulus_area(double R, double r)
{
    if (r < 0 || R < r)
        throw std::invalid_argument("annulus_area: requires R >= r >= 0");
    return M_PI * (R * R - r * r);
}

std::vector<NodeState> deploy(int n, const FieldConfig& field,
                              double initial_energy, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("deploy: node count must be >= 1");
    if (initial_energy <= 0)
        throw std::invalid_argument("deploy: initial energy must be positive");
    if (field.inner_radius <= 0)
        throw std::invalid_argument("deploy: inner_radius must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.0, field.width);
    std::uniform_real_distribution<double> uy(0.0, field.height);

    std::vector<NodeState> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    for (int id = 0; id < n; ++id) {
        NodeState s;
        s.id = id;
        s.pos = Point{ux(rng), uy(rng)};
        s.energy = initial_energy;
        s.alive = true;
        s.region = classify_region(s.pos, field);
        nodes.push_back(s);
    }
    return nodes;
}

void write_placement_csv(const std::vector<NodeState>& nodes, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << "id,x,y,region\n";
    char buf[128];
    for (const NodeState& s : nodes) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%s\n", s.id, s.pos.x,
                      s.pos.y, region_name(s.region));
        out << buf;
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace rbebp
