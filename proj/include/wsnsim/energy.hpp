#pragma once

#include "wsnsim/config.hpp"

namespace wsnsim {

enum class ChargeCause { TxData = 0, TxCtrl = 1, Rx = 2, Aggregate = 3 };
constexpr int kNumChargeCauses = 4;

const char* to_string(ChargeCause c);

// One energy deduction actually applied to a node. amount is the energy
// removed, which may be less than the nominal cost when the node hit zero.
struct EnergyCharge {
  int node_id;
  double amount;  // J, > 0
  ChargeCause cause;
};

// Free-space/multipath crossover distance d0 = sqrt(e_fs / e_mp).
double crossover_distance(const NetworkConfig& config);

// Transmit cost: e_elec*bits plus the amplifier term, d^2 below the
// crossover and d^4 at or above it.
double tx_cost(long bits, double distance, const NetworkConfig& config);

double rx_cost(long bits, const NetworkConfig& config);
double aggregation_cost(long bits, const NetworkConfig& config);

// Flat per-role constants used by the cluster-weight formula (and by the
// eq7_8 charge model).
double lost_energy_head(const NetworkConfig& config);
double lost_energy_member(const NetworkConfig& config);
double lost_energy_ratio(const NetworkConfig& config);

}  // namespace wsnsim
