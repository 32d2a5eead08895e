#ifndef RBEBP_RADIO_HPP
#define RBEBP_RADIO_HPP

namespace rbebp {

// First-order radio model: electronics cost per bit plus a distance-dependent
// amplifier term (free-space d^2 below the crossover distance, multipath d^4
// at or above it).
struct RadioParams {
    double e_elec = 50e-9;       // J/bit, tx/rx electronics
    double eps_fs = 10e-12;      // J/bit/m^2, free-space amplifier
    double eps_mp = 0.0013e-12;  // J/bit/m^4, multipath amplifier
    double e_da = 5e-9;          // J/bit per aggregated signal
    int packet_bits = 2000;      // data packet size k
    int control_bits = 100;      // advertisement/join packet size
    double d0 = 0.0;             // crossover distance, derived

    RadioParams();
    RadioParams(double e_elec, double eps_fs, double eps_mp, double e_da,
                int packet_bits, int control_bits);
};

// sqrt(eps_fs / eps_mp); throws std::invalid_argument on non-positive input.
double crossover_distance(double eps_fs, double eps_mp);

// Energy to transmit k bits over distance d meters.
double tx_energy(const RadioParams& p, int k, double d);

// Energy to receive k bits.
double rx_energy(const RadioParams& p, int k);

// Energy for a cluster head to fuse n_signals received/own signals of k bits.
double aggregation_energy(const RadioParams& p, int k, int n_signals);

} // namespace rbebp

#endif
