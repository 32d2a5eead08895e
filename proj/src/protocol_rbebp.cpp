#include "rbebp/protocol_rbebp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace rbebp {

std::string round_plan_to_json(const RoundPlan& plan)
{
    nlohmann::json j;
    j["cluster_heads"] = plan.cluster_heads;
    nlohmann::json members = nlohmann::json::object();
    for (const auto& [m, ch] : plan.membership)
        members[std::to_string(m)] = ch;
    j["membership"] = members;
    nlohmann::json hops = nlohmann::json::object();
    for (const auto& [ch, nxt] : plan.relay_next_hop) {
        if (nxt == kSinkId)
            hops[std::to_string(ch)] = "SINK";
        else
            hops[std::to_string(ch)] = nxt;
    }
    j["relay_next_hop"] = hops;
    if (plan.active_region)
        j["active_region"] = region_name(*plan.active_region);
    else
        j["active_region"] = nullptr;
    return j.dump();
}

Region select_active_region(const std::vector<NodeState>& nodes)
{
    double inner = 0.0;
    double outer = 0.0;
    bool any_alive = false;
    for (const NodeState& s : nodes) {
        if (!s.alive)
            continue;
        any_alive = true;
        (s.region == Region::inner ? inner : outer) += s.energy;
    }
    if (!any_alive)
        throw std::runtime_error("select_active_region: no alive nodes, simulation ended");
    return inner < outer ? Region::outer : Region::inner;
}

std::vector<int> elect_cluster_heads(const std::vector<NodeState>& nodes,
                                     Region region, int ch_count)
{
    if (ch_count < 1)
        throw std::invalid_argument("elect_cluster_heads: ch_count must be >= 1");

    auto collect = [&](Region r) {
        std::vector<const NodeState*> out;
        for (const NodeState& s : nodes)
            if (s.alive && s.region == r)
                out.push_back(&s);
        return out;
    };

    std::vector<const NodeState*> pool = collect(region);
    if (pool.empty()) {
        // Keeps the network operating when the active region has died out.
        pool = collect(region == Region::inner ? Region::outer : Region::inner);
    }
    if (pool.empty())
        throw std::runtime_error("elect_cluster_heads: no alive nodes");

    std::sort(pool.begin(), pool.end(), [](const NodeState* a, const NodeState* b) {
        if (a->energy != b->energy)
            return a->energy > b->energy;
        return a->id < b->id;
    });
    const std::size_t take = std::min<std::size_t>(pool.size(),
                                                   static_cast<std::size_t>(ch_count));
    std::vector<int> heads;
    heads.reserve(take);
    for (std::size_t i = 0; i < take; ++i)
        heads.push_back(pool[i]->id);
    std::sort(heads.begin(), heads.end());
    return heads;
}

std::map<int, int> form_clusters(const std::vector<NodeState>& nodes,
                                 const std::vector<int>& cluster_heads)
{
    if (cluster_heads.empty())
        throw std::invalid_argument("form_clusters: no cluster heads");

    std::vector<const NodeState*> heads;
    for (int id : cluster_heads) {
        auto it = std::find_if(nodes.begin(), nodes.end(),
                               [id](const NodeState& s) { return s.id == id; });
        if (it == nodes.end())
            throw std::invalid_argument("form_clusters: unknown cluster head id");
        heads.push_back(&*it);
    }
    std::sort(heads.begin(), heads.end(),
              [](const NodeState* a, const NodeState* b) { return a->id < b->id; });

    std::map<int, int> membership;
    for (const NodeState& s : nodes) {
        if (!s.alive)
            continue;
        if (std::binary_search(cluster_heads.begin(), cluster_heads.end(), s.id))
            continue;
        int best = heads.front()->id;
        double best_d = distance(s.pos, heads.front()->pos);
        for (std::size_t i = 1; i < heads.size(); ++i) {
            const double d = distance(s.pos, heads[i]->pos);
            if (d < best_d) {
                best_d = d;
                best = heads[i]->id;
            }
        }
        membership[s.id] = best;
    }
    return membership;
}

double relay_cost(const Point& ch_i, const Point& ch_j, const Point& sink,
                  const RadioParams& radio)
{
    if (ch_i == ch_j)
        throw std::invalid_argument("relay_cost: identical endpoints");
    const int k = radio.packet_bits;
    return tx_energy(radio, k, distance(ch_i, ch_j)) + rx_energy(radio, k) +
           tx_energy(radio, k, distance(ch_j, sink));
}

namespace {

struct Candidate {
    int id;          // kSinkId for the direct option
    double cost;
    double residual; // not meaningful for the sink
};

// Min cost wins; within kCostTieRelTol of the minimum the sink is preferred,
// then the greater residual, then the lower id.
int pick_next_hop(const std::vector<Candidate>& cands)
{
    double min_cost = std::numeric_limits<double>::infinity();
    for (const Candidate& c : cands)
        min_cost = std::min(min_cost, c.cost);
    const double cutoff = min_cost + kCostTieRelTol * std::abs(min_cost);

    const Candidate* best = nullptr;
    for (const Candidate& c : cands) {
        if (c.cost > cutoff)
            continue;
        if (c.id == kSinkId)
            return kSinkId;
        if (!best || c.residual > best->residual ||
            (c.residual == best->residual && c.id < best->id))
            best = &c;
    }
    return best->id;
}

} // namespace

std::map<int, int> build_relay_routes(const std::vector<NodeState>& nodes,
                                      const std::vector<int>& cluster_heads,
                                      const Point& sink, const RadioParams& radio,
                                      RelayRule rule)
{
    if (cluster_heads.empty())
        throw std::invalid_argument("build_relay_routes: no cluster heads");

    std::map<int, const NodeState*> by_id;
    for (const NodeState& s : nodes)
        by_id[s.id] = &s;

    std::map<int, int> routes;
    for (int id : cluster_heads) {
        const NodeState& ch = *by_id.at(id);
        const double d_sink = distance(ch.pos, sink);

        if (rule == RelayRule::nearest_upper) {
            int nearest = kSinkId;
            double nearest_d = std::numeric_limits<double>::infinity();
            for (int other : cluster_heads) {
                if (other == id)
                    continue;
                const NodeState& o = *by_id.at(other);
                if (distance(o.pos, sink) >= d_sink)
                    continue;
                const double d = distance(ch.pos, o.pos);
                if (d < nearest_d || (d == nearest_d && other < nearest)) {
                    nearest_d = d;
                    nearest = other;
                }
            }
            routes[id] = (nearest == kSinkId || d_sink <= nearest_d) ? kSinkId : nearest;
            continue;
        }

        std::vector<Candidate> cands;
        cands.push_back({kSinkId, tx_energy(radio, radio.packet_bits, d_sink), 0.0});
        for (int other : cluster_heads) {
            if (other == id)
                continue;
            const NodeState& o = *by_id.at(other);
            if (distance(o.pos, sink) >= d_sink)
                continue;
            cands.push_back({other, relay_cost(ch.pos, o.pos, sink, radio), o.energy});
        }
        routes[id] = pick_next_hop(cands);
    }
    return routes;
}

} // namespace rbebp
