#include "rbebp/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace rbebp {

namespace {

void check_params(const RadioParams& p)
{
    if (p.e_elec <= 0 || p.eps_fs <= 0 || p.eps_mp <= 0 || p.e_da <= 0)
        throw std::invalid_argument("radio coefficients must be strictly positive");
    if (p.packet_bits < 1)
        throw std::invalid_argument("packet_bits must be >= 1");
    if (p.control_bits < 1)
        throw std::invalid_argument("control_bits must be >= 1");
}

} // namespace

RadioParams::RadioParams()
{
    d0 = crossover_distance(eps_fs, eps_mp);
}

RadioParams::RadioParams(double e_elec_, double eps_fs_, double eps_mp_,
                         double e_da_, int packet_bits_, int control_bits_)
    : e_elec(e_elec_),
      eps_fs(eps_fs_),
      eps_mp(eps_mp_),
      e_da(e_da_),
      packet_bits(packet_bits_),
      control_bits(control_bits_)
{
    check_params(*this);
    d0 = crossover_distance(eps_fs, eps_mp);
}

double crossover_distance(double eps_fs, double eps_mp)
{
    if (eps_fs <= 0 || eps_mp <= 0)
        throw std::invalid_argument("amplifier coefficients must be strictly positive");
    return std::sqrt(eps_fs / eps_mp);
}

double tx_energy(const RadioParams& p, int k, double d)
{
    if (k < 1)
        throw std::invalid_argument("tx_energy: k must be >= 1");
    if (d < 0)
        throw std::invalid_argument("tx_energy: distance must be non-negative");
    const double kd = static_cast<double>(k);
    if (d < p.d0)
        return kd * p.e_elec + kd * p.eps_fs * d * d;
    return kd * p.e_elec + kd * p.eps_mp * d * d * d * d;
}

double rx_energy(const RadioParams& p, int k)
{
    if (k < 1)
        throw std::invalid_argument("rx_energy: k must be >= 1");
    return p.e_elec * static_cast<double>(k);
}

double aggregation_energy(const RadioParams& p, int k, int n_signals)
{
    if (k < 1)
        throw std::invalid_argument("aggregation_energy: k must be >= 1");
    if (n_signals < 0)
        throw std::invalid_argument("aggregation_energy: n_signals must be >= 0");
    return p.e_da * static_cast<double>(k) * static_cast<double>(n_signals);
}

} // namespace rbebp
