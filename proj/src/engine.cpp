#include "rbebp/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rbebp {

const char* protocol_name(Protocol p)
{
    return p == Protocol::rbebp ? "rbebp" : "leach";
}

Protocol protocol_from_name(const std::string& name)
{
    if (name == "rbebp")
        return Protocol::rbebp;
    if (name == "leach")
        return Protocol::leach;
    throw std::invalid_argument("unknown protocol: " + name);
}

SimConfig SimConfig::table1(int n, Protocol protocol, std::uint64_t seed)
{
    SimConfig cfg;
    cfg.node_count = n;
    cfg.protocol = protocol;
    cfg.seed = seed;
    return cfg;
}

double SimConfig::effective_death_threshold() const
{
    if (death_threshold >= 0)
        return death_threshold;
    return radio.e_elec * radio.packet_bits;
}

void validate(const SimConfig& cfg)
{
    if (cfg.node_count < 1)
        throw std::invalid_argument("node_count must be >= 1");
    if (cfg.initial_energy <= 0)
        throw std::invalid_argument("initial_energy must be positive");
    if (cfg.max_rounds < 0)
        throw std::invalid_argument("max_rounds must be >= 0");
    if (cfg.round_seconds <= 0)
        throw std::invalid_argument("round_seconds must be positive");
    if (cfg.ch_count < 0)
        throw std::invalid_argument("ch_count must be >= 0");
    if (!(cfg.leach_p > 0.0 && cfg.leach_p < 1.0))
        throw std::invalid_argument("leach_p must be in (0, 1)");
    if (cfg.field.inner_radius <= 0)
        throw std::invalid_argument("inner_radius must be positive");
    if (cfg.field.region_center.x < 0 || cfg.field.region_center.x > cfg.field.width ||
        cfg.field.region_center.y < 0 || cfg.field.region_center.y > cfg.field.height)
        throw std::invalid_argument("region_center must lie inside the field");
    if (cfg.initial_energy <= cfg.effective_death_threshold())
        throw std::invalid_argument("initial_energy must exceed the death threshold");
}

Simulation::Simulation(const SimConfig& cfg)
    : cfg_(cfg),
      nodes_(deploy(cfg.node_count, cfg.field, cfg.initial_energy, cfg.seed)),
      rng_(cfg.seed ^ 0x9e3779b97f4a7c15ULL),
      death_threshold_(cfg.effective_death_threshold())
{
    validate(cfg_);
    leach_.p = cfg_.leach_p;
}

bool Simulation::finished() const
{
    return alive_count() == 0;
}

int Simulation::alive_count() const
{
    int n = 0;
    for (const NodeState& s : nodes_)
        n += s.alive ? 1 : 0;
    return n;
}

double Simulation::total_energy() const
{
    double e = 0.0;
    for (const NodeState& s : nodes_)
        e += s.energy;
    return e;
}

void Simulation::charge(NodeState& node, double joules)
{
    node.energy -= joules;
    if (node.energy < 0)
        node.energy = 0.0;
    node.alive = node.energy > death_threshold_;
}

RoundPlan Simulation::make_plan(int alive_now)
{
    RoundPlan plan;
    if (cfg_.protocol == Protocol::rbebp) {
        plan.active_region = select_active_region(nodes_);
        const int chc = cfg_.ch_count > 0 ? cfg_.ch_count
                                          : std::max(3, alive_now / 20);
        plan.cluster_heads = elect_cluster_heads(nodes_, *plan.active_region, chc);
    } else {
        plan.cluster_heads = elect_cluster_heads_leach(nodes_, leach_, rng_);
        std::sort(plan.cluster_heads.begin(), plan.cluster_heads.end());
    }
    if (static_cast<int>(plan.cluster_heads.size()) < alive_now)
        plan.membership = form_clusters(nodes_, plan.cluster_heads);
    if (cfg_.protocol == Protocol::rbebp) {
        plan.relay_next_hop = build_relay_routes(nodes_, plan.cluster_heads,
                                                 cfg_.field.sink, cfg_.radio,
                                                 cfg_.relay_rule);
    } else {
        for (int ch : plan.cluster_heads)
            plan.relay_next_hop[ch] = kSinkId; // LEACH CHs go straight to the sink
    }
    return plan;
}

RoundRecord Simulation::run_round(RoundPlan* plan_out)
{
    const int alive_at_entry = alive_count();
    if (alive_at_entry == 0)
        throw std::runtime_error("run_round: simulation complete, no alive nodes");

    const double energy_before = total_energy();
    const RadioParams& radio = cfg_.radio;
    const int k = radio.packet_bits;

    RoundPlan plan = make_plan(alive_at_entry);

    auto node = [&](int id) -> NodeState& { return nodes_[static_cast<std::size_t>(id)]; };

    // Members per CH, in member-id order.
    std::map<int, std::vector<int>> members;
    for (int ch : plan.cluster_heads)
        members[ch];
    for (const auto& [m, ch] : plan.membership)
        members[ch].push_back(m);

    // Control phase: CH advertisement broadcast, then member join replies.
    if (cfg_.charge_control) {
        for (int ch : plan.cluster_heads) {
            NodeState& h = node(ch);
            if (!h.alive)
                continue;
            double reach = 0.0;
            for (int m : members[ch])
                reach = std::max(reach, distance(h.pos, node(m).pos));
            if (members[ch].empty())
                reach = radio.d0;
            charge(h, tx_energy(radio, radio.control_bits, reach));
        }
        for (const auto& [m, ch] : plan.membership) {
            NodeState& s = node(m);
            if (!s.alive)
                continue;
            charge(s, tx_energy(radio, radio.control_bits,
                                distance(s.pos, node(ch).pos)));
        }
    }

    // Steady phase: member data to CH, per-packet reception, aggregation.
    std::map<int, bool> has_packet;
    for (int ch : plan.cluster_heads) {
        NodeState& h = node(ch);
        int received = 0;
        for (int m : members[ch]) {
            NodeState& s = node(m);
            if (!s.alive)
                continue; // dead nodes initiate nothing
            charge(s, tx_energy(radio, k, distance(s.pos, h.pos)));
            ++received;
        }
        // Reception is charged per packet; a CH that dies mid-reception
        // completes the packet in flight and loses the rest.
        int accepted = 0;
        for (int i = 0; i < received && h.alive; ++i) {
            charge(h, rx_energy(radio, k));
            ++accepted;
        }
        if (h.alive) {
            charge(h, aggregation_energy(radio, k, accepted + 1)); // + own signal
        }
        has_packet[ch] = h.alive;
    }

    // Inter-cluster routing: each surviving CH forwards one aggregated packet
    // along its next-hop chain. A packet is delivered only if every
    // transmitter on the path was alive when it transmitted.
    int delivered = 0;
    for (int ch : plan.cluster_heads) {
        if (!has_packet[ch])
            continue;
        int cur = ch;
        while (true) {
            const int nxt = plan.relay_next_hop.at(cur);
            NodeState& sender = node(cur);
            const double d = nxt == kSinkId ? distance(sender.pos, cfg_.field.sink)
                                            : distance(sender.pos, node(nxt).pos);
            charge(sender, tx_energy(radio, k, d));
            if (nxt == kSinkId) {
                ++delivered;
                break;
            }
            NodeState& relay = node(nxt);
            if (!relay.alive)
                break; // lost at a dead relay
            charge(relay, rx_energy(radio, k));
            if (!relay.alive)
                break; // received but cannot forward
            cur = nxt;
        }
    }

    RoundRecord rec;
    rec.round = round_;
    rec.alive = alive_count();
    rec.remaining_j = total_energy();
    rec.consumed_j = energy_before - rec.remaining_j;
    rec.delivered = delivered;
    rec.ch_count = static_cast<int>(plan.cluster_heads.size());
    rec.active_region = plan.active_region;
    ++round_;

    if (plan_out)
        *plan_out = std::move(plan);
    return rec;
}

RunResult run_simulation(const SimConfig& cfg, const RoundObserver& observer)
{
    validate(cfg);
    Simulation sim(cfg);
    RunResult result;
    result.series.reserve(256);
    RoundPlan plan;
    while (!sim.finished() && sim.round_index() < cfg.max_rounds) {
        RoundRecord rec = sim.run_round(&plan);
        if (observer)
            observer(rec, plan);
        result.series.push_back(rec);
    }
    result.summary = summarize(result.series, cfg.node_count, cfg.round_seconds);
    return result;
}

} // namespace rbebp
