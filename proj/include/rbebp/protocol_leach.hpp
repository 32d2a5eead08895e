#ifndef RBEBP_PROTOCOL_LEACH_HPP
#define RBEBP_PROTOCOL_LEACH_HPP

#include <random>
#include <set>
#include <vector>

#include "rbebp/field.hpp"

namespace rbebp {

// Rotating-election baseline state. `eligible` is the set G of nodes that
// have not served as CH in the current epoch of ceil(1/p) rounds.
struct LeachState {
    double p = 0.05;
    std::set<int> eligible;
    int round_index = 0;
};

int leach_epoch_length(double p);

// T(n) = p / (1 - p * (r mod ceil(1/p))) for eligible nodes, 0 otherwise,
// clamped to 1.
double leach_threshold(double p, int round_index, bool is_eligible);

// Per-node uniform draws in id order; CH iff draw < threshold. If nobody
// self-elects, the alive node with the greatest threshold-minus-draw margin
// (eligible nodes first) is promoted so every round has a CH. Updates
// `state` (eligibility, epoch reset, round counter).
std::vector<int> elect_cluster_heads_leach(const std::vector<NodeState>& nodes,
                                           LeachState& state, std::mt19937_64& rng);

} // namespace rbebp

#endif
