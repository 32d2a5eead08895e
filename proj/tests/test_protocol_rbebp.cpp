#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "relay_oracle.hpp"
#include "rbebp/protocol_rbebp.hpp"

using namespace rbebp;

namespace {

NodeState make_node(int id, double x, double y, double energy,
                    Region region = Region::inner, bool alive = true)
{
    NodeState s;
    s.id = id;
    s.pos = {x, y};
    s.energy = energy;
    s.alive = alive;
    s.region = region;
    return s;
}

} // namespace

TEST_CASE("active region follows the larger summed residual energy")
{
    std::vector<NodeState> nodes = {
        make_node(0, 10, 10, 2.5, Region::inner),
        make_node(1, 20, 20, 2.5, Region::inner),
        make_node(2, 900, 900, 4.0, Region::outer),
    };
    CHECK(select_active_region(nodes) == Region::inner); // 5 vs 4

    nodes[0].energy = 1.0; // 3.5 vs 4
    CHECK(select_active_region(nodes) == Region::outer);

    nodes[0].energy = 1.5; // exact tie goes inner
    CHECK(select_active_region(nodes) == Region::inner);

    for (auto& s : nodes)
        s.alive = false;
    CHECK_THROWS_AS(select_active_region(nodes), std::runtime_error);
}

TEST_CASE("dead nodes do not count toward region energy")
{
    std::vector<NodeState> nodes = {
        make_node(0, 10, 10, 10.0, Region::inner, false),
        make_node(1, 20, 20, 1.0, Region::inner),
        make_node(2, 900, 900, 2.0, Region::outer),
    };
    CHECK(select_active_region(nodes) == Region::outer);
}

TEST_CASE("cluster head election by residual energy")
{
    std::vector<NodeState> nodes = {
        make_node(0, 1, 1, 1.9),
        make_node(1, 2, 2, 2.0),
        make_node(2, 3, 3, 1.8),
    };
    CHECK(elect_cluster_heads(nodes, Region::inner, 1) == std::vector<int>{1});

    // saturation: ch_count >= population
    CHECK(elect_cluster_heads(nodes, Region::inner, 10) == std::vector<int>({0, 1, 2}));

    // id tie-break
    std::vector<NodeState> tied = {make_node(0, 1, 1, 1.5), make_node(1, 2, 2, 1.5)};
    CHECK(elect_cluster_heads(tied, Region::inner, 1) == std::vector<int>{0});
}

TEST_CASE("election falls back to the other region when empty")
{
    std::vector<NodeState> nodes = {
        make_node(0, 900, 900, 1.0, Region::outer),
        make_node(1, 950, 950, 2.0, Region::outer),
    };
    CHECK(elect_cluster_heads(nodes, Region::inner, 1) == std::vector<int>{1});
}

TEST_CASE("election ignores dead nodes")
{
    std::vector<NodeState> nodes = {
        make_node(0, 1, 1, 5.0, Region::inner, false),
        make_node(1, 2, 2, 1.0, Region::inner),
    };
    CHECK(elect_cluster_heads(nodes, Region::inner, 1) == std::vector<int>{1});
}

TEST_CASE("election output is invariant under energy scaling")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ue(0.1, 2.0);
    std::vector<NodeState> nodes;
    for (int i = 0; i < 30; ++i)
        nodes.push_back(make_node(i, i, i, ue(rng),
                                  i % 3 ? Region::inner : Region::outer));
    auto heads = elect_cluster_heads(nodes, Region::inner, 5);
    auto region = select_active_region(nodes);
    for (auto& s : nodes)
        s.energy *= 17.25;
    CHECK(elect_cluster_heads(nodes, Region::inner, 5) == heads);
    CHECK(select_active_region(nodes) == region);
}

TEST_CASE("cluster formation partitions the alive non-CH nodes")
{
    SUBCASE("single CH takes everyone")
    {
        std::vector<NodeState> nodes = {make_node(0, 1, 1, 2.0),
                                        make_node(1, 50, 50, 2.0),
                                        make_node(2, 500, 500, 2.0)};
        auto m = form_clusters(nodes, {1});
        CHECK(m.size() == 2);
        CHECK(m.at(0) == 1);
        CHECK(m.at(2) == 1);
    }

    SUBCASE("equidistant member joins the lower CH id")
    {
        std::vector<NodeState> nodes = {make_node(3, 0, 0, 2.0),
                                        make_node(7, 10, 0, 2.0),
                                        make_node(5, 5, 0, 2.0)};
        auto m = form_clusters(nodes, {3, 7});
        CHECK(m.at(5) == 3);
    }

    SUBCASE("exact partition on a random deployment")
    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(0, 1000);
        std::vector<NodeState> nodes;
        for (int i = 0; i < 104; ++i)
            nodes.push_back(make_node(i, u(rng), u(rng), 2.0));
        std::vector<int> heads = {4, 18, 52, 77, 99};
        auto m = form_clusters(nodes, heads);
        CHECK(m.size() == 99);
        std::set<int> seen;
        for (const auto& [member, ch] : m) {
            CHECK(std::count(heads.begin(), heads.end(), ch) == 1);
            CHECK(std::count(heads.begin(), heads.end(), member) == 0);
            seen.insert(member);
        }
        CHECK(seen.size() == 99);
    }
}

TEST_CASE("relay cost composes tx + rx + tx")
{
    RadioParams radio;
    const Point sink{0, 0};
    const Point ch_j{0, 80};
    const Point ch_i{0, 130}; // 50 m from ch_j, both hops below d0
    // 150 uJ + 100 uJ + (100 uJ + 2000*10pJ*6400 = 228 uJ) = 478 uJ
    CHECK(relay_cost(ch_i, ch_j, sink, radio) ==
          doctest::Approx(478e-6).epsilon(1e-12));

    // sink-collocated relay: last hop degenerates to the electronics cost
    const Point at_sink{0, 0};
    const Point far{0, 60};
    CHECK(relay_cost(far, at_sink, sink, radio) ==
          doctest::Approx(tx_energy(radio, 2000, 60) + rx_energy(radio, 2000) +
                          2000 * radio.e_elec)
              .epsilon(1e-12));

    // linear in k
    RadioParams doubled(radio.e_elec, radio.eps_fs, radio.eps_mp, radio.e_da,
                        4000, radio.control_bits);
    CHECK(relay_cost(ch_i, ch_j, sink, doubled) ==
          doctest::Approx(2 * relay_cost(ch_i, ch_j, sink, radio)).epsilon(1e-12));

    CHECK_THROWS_AS(relay_cost(ch_i, ch_i, sink, radio), std::invalid_argument);
}

TEST_CASE("single CH routes straight to the sink")
{
    RadioParams radio;
    std::vector<NodeState> nodes = {make_node(0, 400, 400, 2.0)};
    auto routes = build_relay_routes(nodes, {0}, {75, 175}, radio);
    CHECK(routes.at(0) == kSinkId);
}

TEST_CASE("collinear CHs chain inward as in the inter-cluster picture")
{
    RadioParams radio;
    const Point sink{0, 0};
    // unequal spacing so each relay total strictly beats both the direct
    // multipath cost and the skip-a-hop alternative
    std::vector<NodeState> nodes = {make_node(1, 0, 70, 2.0),
                                    make_node(2, 0, 150, 2.0),
                                    make_node(3, 0, 240, 2.0)};
    auto routes = build_relay_routes(nodes, {1, 2, 3}, sink, radio);
    CHECK(routes.at(3) == 2);
    CHECK(routes.at(2) == 1);
    CHECK(routes.at(1) == kSinkId);
}

TEST_CASE("equal-cost relay candidates resolve by residual energy")
{
    RadioParams radio;
    const Point sink{0, 0};
    // two mirror-image candidates, exactly the same geometry, different charge
    std::vector<NodeState> nodes = {make_node(1, -60, 60, 1.2),
                                    make_node(2, 60, 60, 1.5),
                                    make_node(3, 0, 200, 2.0)};
    auto routes = build_relay_routes(nodes, {1, 2, 3}, sink, radio);
    CHECK(routes.at(3) == 2);
}

TEST_CASE("direct transmission wins when it is cheapest")
{
    RadioParams radio;
    const Point sink{0, 0};
    // CH 2 sits close to the sink (below d0); relaying via CH 1 costs an
    // extra rx plus two hops and cannot beat the direct free-space cost.
    std::vector<NodeState> nodes = {make_node(1, 0, 20, 2.0),
                                    make_node(2, 0, 50, 2.0)};
    auto routes = build_relay_routes(nodes, {1, 2}, sink, radio);
    CHECK(routes.at(2) == kSinkId);
    CHECK(routes.at(1) == kSinkId);
}

TEST_CASE("relay routing matches the brute-force oracle")
{
    RadioParams radio;
    const Point sink{75, 175};
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> upos(0, 1000);
    std::uniform_real_distribution<double> ue(0.01, 2.0);
    std::uniform_int_distribution<int> ucount(1, 20);

    for (int trial = 0; trial < 300; ++trial) {
        const int n = ucount(rng);
        std::vector<NodeState> nodes;
        std::vector<int> heads;
        for (int i = 0; i < n; ++i) {
            nodes.push_back(make_node(i, upos(rng), upos(rng), ue(rng)));
            heads.push_back(i);
        }
        auto got = build_relay_routes(nodes, heads, sink, radio);
        auto want = rbebp_test::brute_force_routes(nodes, heads, sink, radio);
        CHECK(got == want);
    }
}

TEST_CASE("routes form a forest rooted at the sink")
{
    RadioParams radio;
    const Point sink{75, 175};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> upos(0, 1000);

    for (int trial = 0; trial < 50; ++trial) {
        std::vector<NodeState> nodes;
        std::vector<int> heads;
        for (int i = 0; i < 15; ++i) {
            nodes.push_back(make_node(i, upos(rng), upos(rng), 2.0));
            heads.push_back(i);
        }
        auto routes = build_relay_routes(nodes, heads, sink, radio);
        for (int start : heads) {
            int cur = start;
            int hops = 0;
            while (cur != kSinkId) {
                const int nxt = routes.at(cur);
                if (nxt != kSinkId) {
                    // each hop strictly decreases distance to the sink
                    CHECK(distance(nodes[nxt].pos, sink) <
                          distance(nodes[cur].pos, sink));
                }
                cur = nxt;
                ++hops;
                REQUIRE(hops <= static_cast<int>(heads.size()));
            }
        }
    }
}

TEST_CASE("nearest-upper relay rule variant")
{
    RadioParams radio;
    const Point sink{0, 0};
    std::vector<NodeState> nodes = {make_node(1, 0, 100, 2.0),
                                    make_node(2, 0, 300, 2.0),
                                    make_node(3, 0, 320, 2.0)};
    auto routes = build_relay_routes(nodes, {1, 2, 3}, sink, radio,
                                     RelayRule::nearest_upper);
    CHECK(routes.at(3) == 2);       // 20 m to CH2 beats 320 m to sink
    CHECK(routes.at(2) == 1);       // 200 m to CH1 beats 300 m to sink
    CHECK(routes.at(1) == kSinkId); // sink (100 m) is nearest
}

TEST_CASE("round plan serializes to json")
{
    RoundPlan plan;
    plan.cluster_heads = {2, 5};
    plan.membership = {{1, 2}, {3, 5}};
    plan.relay_next_hop = {{2, kSinkId}, {5, 2}};
    plan.active_region = Region::inner;

    auto j = nlohmann::json::parse(round_plan_to_json(plan));
    CHECK(j["cluster_heads"] == nlohmann::json({2, 5}));
    CHECK(j["membership"]["1"] == 2);
    CHECK(j["relay_next_hop"]["2"] == "SINK");
    CHECK(j["relay_next_hop"]["5"] == 2);
    CHECK(j["active_region"] == "inner");
}
