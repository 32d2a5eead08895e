#ifndef RBEBP_FIELD_HPP
#define RBEBP_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rbebp {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

bool operator==(const Point& a, const Point& b);

// Euclidean distance.
double distance(const Point& a, const Point& b);

enum class Region { inner, outer };

const char* region_name(Region r);

// Field rectangle plus the concentric region geometry. The circles are
// centered on the sink by default so that "closer to the sink" and "inner
// region" coincide; both center and radius are overridable.
struct FieldConfig {
    double width = 1000.0;
    double height = 1000.0;
    Point sink{75.0, 175.0};
    Point region_center{75.0, 175.0};
    double inner_radius = 0.0;

    // Default radius: 0.62 x distance from the region center to the farthest
    // field corner, which keeps the in-field inner area (and so the expected
    // node share) above the outer share.
    static FieldConfig table1();
};

double default_inner_radius(const FieldConfig& f);

struct NodeState {
    int id = 0;
    Point pos;
    double energy = 0.0;
    bool alive = true;
    Region region = Region::inner;
};

// inner iff distance(pos, region_center) <= inner_radius (boundary is inner).
Region classify_region(const Point& pos, const FieldConfig& field);

// pi * (R^2 - r^2); throws std::invalid_argument if R < r or r < 0.
double annulus_area(double R, double r);

// Uniform placement over the field rectangle; deterministic for a fixed seed.
std::vector<NodeState> deploy(int n, const FieldConfig& field,
                              double initial_energy, std::uint64_t seed);

// id,x,y,region per node, for plotting/debugging.
void write_placement_csv(const std::vector<NodeState>& nodes, const std::string& path);

} // namespace rbebp

#endif
