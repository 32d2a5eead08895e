#include "rbebp/protocol_leach.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rbebp {

int leach_epoch_length(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("leach: p must be in (0, 1)");
    return static_cast<int>(std::ceil(1.0 / p));
}

double leach_threshold(double p, int round_index, bool is_eligible)
{
    const int epoch = leach_epoch_length(p);
    if (!is_eligible)
        return 0.0;
    const double denom = 1.0 - p * static_cast<double>(round_index % epoch);
    if (denom <= 0.0)
        return 1.0;
    return std::min(1.0, p / denom);
}

std::vector<int> elect_cluster_heads_leach(const std::vector<NodeState>& nodes,
                                           LeachState& state, std::mt19937_64& rng)
{
    const int epoch = leach_epoch_length(state.p);

    std::vector<const NodeState*> alive;
    for (const NodeState& s : nodes)
        if (s.alive)
            alive.push_back(&s);
    if (alive.empty())
        throw std::runtime_error("leach election: no alive nodes");
    std::sort(alive.begin(), alive.end(),
              [](const NodeState* a, const NodeState* b) { return a->id < b->id; });

    if (state.round_index % epoch == 0) {
        state.eligible.clear();
        for (const NodeState* s : alive)
            state.eligible.insert(s->id);
    }

    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<int> heads;
    double best_eligible_margin = -std::numeric_limits<double>::infinity();
    int best_eligible = -1;
    double best_any_margin = -std::numeric_limits<double>::infinity();
    int best_any = -1;

    for (const NodeState* s : alive) {
        const bool eligible = state.eligible.count(s->id) > 0;
        const double t = leach_threshold(state.p, state.round_index, eligible);
        const double u = uni(rng);
        if (u < t)
            heads.push_back(s->id);
        const double margin = t - u;
        if (eligible && margin > best_eligible_margin) {
            best_eligible_margin = margin;
            best_eligible = s->id;
        }
        if (margin > best_any_margin) {
            best_any_margin = margin;
            best_any = s->id;
        }
    }

    if (heads.empty())
        heads.push_back(best_eligible >= 0 ? best_eligible : best_any);

    for (int id : heads)
        state.eligible.erase(id);
    state.round_index += 1;
    return heads;
}

} // namespace rbebp
