#ifndef RBEBP_PROTOCOL_RBEBP_HPP
#define RBEBP_PROTOCOL_RBEBP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbebp/field.hpp"
#include "rbebp/radio.hpp"

namespace rbebp {

// Next-hop sentinel for the base station.
constexpr int kSinkId = -1;

// Relative tolerance below which two relay costs count as "the same" and the
// residual-energy tie rule applies.
constexpr double kCostTieRelTol = 1e-9;

enum class RelayRule {
    eq4_cost,      // minimum of direct cost vs tx+rx+tx relay cost
    nearest_upper  // nearest strictly-closer CH, direct if the sink is nearer
};

// One round's election, clustering and routing decisions.
struct RoundPlan {
    std::vector<int> cluster_heads;      // sorted ascending
    std::map<int, int> membership;       // member id -> CH id
    std::map<int, int> relay_next_hop;   // CH id -> CH id or kSinkId
    std::optional<Region> active_region; // region CHs were drawn from (RBEBP only)
};

std::string round_plan_to_json(const RoundPlan& plan);

// outer iff the summed residual energy of alive inner nodes is strictly less
// than that of alive outer nodes; ties go inner. Throws std::runtime_error if
// no node is alive.
Region select_active_region(const std::vector<NodeState>& nodes);

// The ch_count alive nodes of `region` with greatest residual energy, ties by
// lower id. Falls back to the other region when `region` has no alive node.
std::vector<int> elect_cluster_heads(const std::vector<NodeState>& nodes,
                                     Region region, int ch_count);

// Nearest-CH assignment for every alive non-CH node; equidistant ties join the
// lower CH id.
std::map<int, int> form_clusters(const std::vector<NodeState>& nodes,
                                 const std::vector<int>& cluster_heads);

// tx(k, d(i,j)) + rx(k) + tx(k, d(j,sink)) with k = packet_bits.
double relay_cost(const Point& ch_i, const Point& ch_j, const Point& sink,
                  const RadioParams& radio);

// For each CH pick the cheapest of {direct to sink} and {relay via any CH
// strictly closer to the sink}; cost ties prefer the sink, then the candidate
// with greater residual energy, then the lower id. Next hops always move
// strictly sink-ward, so routes are acyclic.
std::map<int, int> build_relay_routes(const std::vector<NodeState>& nodes,
                                      const std::vector<int>& cluster_heads,
                                      const Point& sink, const RadioParams& radio,
                                      RelayRule rule = RelayRule::eq4_cost);

} // namespace rbebp

#endif
