#ifndef RBEBP_ENGINE_HPP
#define RBEBP_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rbebp/field.hpp"
#include "rbebp/metrics.hpp"
#include "rbebp/protocol_leach.hpp"
#include "rbebp/protocol_rbebp.hpp"
#include "rbebp/radio.hpp"

namespace rbebp {

enum class Protocol { rbebp, leach };

const char* protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

struct SimConfig {
    int node_count = 100;
    FieldConfig field = FieldConfig::table1();
    RadioParams radio;
    double initial_energy = 2.0;
    Protocol protocol = Protocol::rbebp;
    int ch_count = 0;          // 0 = auto: max(3, 5% of alive nodes)
    double leach_p = 0.05;
    int max_rounds = 50000;
    std::uint64_t seed = 1;
    double round_seconds = 1.0;
    double death_threshold = -1.0; // <0 = auto: one packet's receive cost
    bool charge_control = true;
    RelayRule relay_rule = RelayRule::eq4_cost;

    static SimConfig table1(int n, Protocol protocol, std::uint64_t seed);
    double effective_death_threshold() const;
};

void validate(const SimConfig& cfg);

// One simulation run: the Fig.-3 style round loop (election, clustering,
// routing, control charges, steady-state data flow, death handling).
class Simulation {
public:
    explicit Simulation(const SimConfig& cfg);

    bool finished() const;
    int round_index() const { return round_; }
    const std::vector<NodeState>& nodes() const { return nodes_; }
    const SimConfig& config() const { return cfg_; }

    // Executes one round; requires !finished().
    RoundRecord run_round(RoundPlan* plan_out = nullptr);

private:
    int alive_count() const;
    double total_energy() const;
    void charge(NodeState& node, double joules);
    RoundPlan make_plan(int alive_now);

    SimConfig cfg_;
    std::vector<NodeState> nodes_;
    std::mt19937_64 rng_;
    LeachState leach_;
    double death_threshold_;
    int round_ = 0;
};

struct RunResult {
    std::vector<RoundRecord> series;
    LifetimeSummary summary;
};

using RoundObserver = std::function<void(const RoundRecord&, const RoundPlan&)>;

RunResult run_simulation(const SimConfig& cfg, const RoundObserver& observer = nullptr);

} // namespace rbebp

#endif
