#include "wsnsim/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wsnsim {

const char* to_string(ChargeCause c) {
  switch (c) {
    case ChargeCause::TxData: return "tx_data";
    case ChargeCause::TxCtrl: return "tx_ctrl";
    case ChargeCause::Rx: return "rx";
    case ChargeCause::Aggregate: return "aggregate";
  }
  return "?";
}

namespace {

void require_bits(long bits, const char* fn) {
  if (bits <= 0)
    throw std::invalid_argument(std::string(fn) + ": bits must be > 0 (got " +
                                std::to_string(bits) + ")");
}

}  // namespace

double crossover_distance(const NetworkConfig& config) {
  return std::sqrt(config.e_fs / config.e_mp);
}

double tx_cost(long bits, double distance, const NetworkConfig& config) {
  require_bits(bits, "tx_cost");
  if (!(distance >= 0.0)) throw std::invalid_argument("tx_cost: distance must be >= 0");
  const double b = static_cast<double>(bits);
  const double electronics = config.e_elec * b;
  if (distance < crossover_distance(config))
    return electronics + config.e_fs * b * distance * distance;
  const double d2 = distance * distance;
  return electronics + config.e_mp * b * d2 * d2;
}

double rx_cost(long bits, const NetworkConfig& config) {
  require_bits(bits, "rx_cost");
  return config.e_elec * static_cast<double>(bits);
}

double aggregation_cost(long bits, const NetworkConfig& config) {
  require_bits(bits, "aggregation_cost");
  return config.e_da * static_cast<double>(bits);
}

double lost_energy_head(const NetworkConfig& config) {
  return (config.e_elec + config.e_da) * static_cast<double>(config.data_packet_bits) +
         config.e_elec * static_cast<double>(config.ctrl_packet_bits);
}

double lost_energy_member(const NetworkConfig& config) {
  return config.e_elec * static_cast<double>(config.ctrl_packet_bits);
}

double lost_energy_ratio(const NetworkConfig& config) {
  const double denom = lost_energy_member(config);
  if (denom <= 0.0)
    throw ConfigError("lost_energy_ratio: ctrl_packet_bits and e_elec must be > 0");
  return lost_energy_head(config) / denom;
}

}  // namespace wsnsim
