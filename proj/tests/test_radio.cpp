#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "rbebp/radio.hpp"

using namespace rbebp;

TEST_CASE("crossover distance")
{
    // sqrt(10 / 0.0013) = 87.70580193070293 (hand calculator)
    CHECK(crossover_distance(10e-12, 0.0013e-12) ==
          doctest::Approx(87.70580193070293).epsilon(1e-12));
    CHECK(crossover_distance(1.0, 1.0) == 1.0);
    CHECK(crossover_distance(4.0, 1.0) == 2.0);
    CHECK_THROWS_AS(crossover_distance(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(crossover_distance(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("radio params derive d0 and validate")
{
    RadioParams p;
    CHECK(p.d0 == doctest::Approx(87.7058).epsilon(1e-5));
    CHECK(p.d0 == std::sqrt(p.eps_fs / p.eps_mp));
    CHECK_THROWS_AS(RadioParams(0, 10e-12, 0.0013e-12, 5e-9, 2000, 100),
                    std::invalid_argument);
    CHECK_THROWS_AS(RadioParams(50e-9, 10e-12, 0.0013e-12, 5e-9, 0, 100),
                    std::invalid_argument);
}

TEST_CASE("tx energy, both branches")
{
    RadioParams p;
    // free space: 2000*50nJ + 2000*10pJ*50^2 = 100uJ + 50uJ
    CHECK(tx_energy(p, 2000, 50.0) == doctest::Approx(150e-6).epsilon(1e-12));
    // multipath: 100uJ + 2000*0.0013pJ*100^4 = 100uJ + 260uJ
    CHECK(tx_energy(p, 2000, 100.0) == doctest::Approx(360e-6).epsilon(1e-12));
    // amplifier term vanishes at d = 0
    CHECK(tx_energy(p, 2000, 0.0) == 2000 * p.e_elec);
    CHECK_THROWS_AS(tx_energy(p, 0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(tx_energy(p, 2000, -1.0), std::invalid_argument);
}

TEST_CASE("rx energy")
{
    RadioParams p;
    CHECK(rx_energy(p, 2000) == doctest::Approx(100e-6).epsilon(1e-12));
    CHECK(rx_energy(p, 1) == p.e_elec);
    CHECK(rx_energy(p, 4000) == doctest::Approx(200e-6).epsilon(1e-12));
    CHECK_THROWS_AS(rx_energy(p, 0), std::invalid_argument);
}

TEST_CASE("aggregation energy")
{
    RadioParams p;
    CHECK(aggregation_energy(p, 2000, 0) == 0.0);
    CHECK(aggregation_energy(p, 2000, 1) == doctest::Approx(10e-6).epsilon(1e-12));
    CHECK(aggregation_energy(p, 2000, 10) == doctest::Approx(100e-6).epsilon(1e-12));
    CHECK_THROWS_AS(aggregation_energy(p, 2000, -1), std::invalid_argument);
}

TEST_CASE("branch selection is strict at d0")
{
    RadioParams p;
    const double just_below = std::nextafter(p.d0, 0.0);
    const double at = p.d0;
    const double fs = 2000 * p.e_elec + 2000 * p.eps_fs * just_below * just_below;
    const double mp = 2000 * p.e_elec + 2000 * p.eps_mp * at * at * at * at;
    CHECK(tx_energy(p, 2000, just_below) == fs);
    CHECK(tx_energy(p, 2000, at) == mp);
}

TEST_CASE("monotonicity and linearity properties")
{
    RadioParams p;
    // strictly increasing in d within each branch, in k everywhere;
    // doubling k doubles everything; tx >= rx at equal k
    for (int i = 0; i < 200; ++i) {
        const double d = 0.5 + i * 2.0;
        const double d2 = d + 0.25;
        if ((d < p.d0) == (d2 < p.d0))
            CHECK(tx_energy(p, 1000, d2) > tx_energy(p, 1000, d));
        CHECK(tx_energy(p, 1001, d) > tx_energy(p, 1000, d));
        CHECK(tx_energy(p, 2000, d) == doctest::Approx(2 * tx_energy(p, 1000, d)).epsilon(1e-15));
        CHECK(tx_energy(p, 1000, d) >= rx_energy(p, 1000));
    }
    CHECK(rx_energy(p, 2000) == 2 * rx_energy(p, 1000));
    CHECK(aggregation_energy(p, 2000, 7) == 2 * aggregation_energy(p, 1000, 7));
}
