#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wsnsim {

// Invalid or malformed configuration. The message names the offending key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Head selection score. Literal picks argmin dist_to_bs * energy; Intent
// picks argmin dist_to_bs / energy, which favors high residual energy.
enum class HeadScore { Literal, Intent };

// Knapsack item value: each candidate's residual energy, or a unit value
// (pure member-count maximization).
enum class KnapsackValue { Energy, Unit };

// Per-round accounting. Radio charges the two-branch radio model per packet;
// Eq78 charges the flat per-role constants instead (sensitivity mode).
enum class ChargeModel { Radio, Eq78 };

// LEACH rounds that elect no head: Direct has every alive node transmit its
// data packet straight to the BS; Idle charges nothing.
enum class HeadlessPolicy { Direct, Idle };

struct NetworkConfig {
  int num_nodes = 100;
  double length = 100.0;  // field x extent, m
  double width = 100.0;   // field y extent, m
  double bs_x = 50.0;     // base station position, m
  double bs_y = 50.0;
  double initial_energy = 0.5;  // J per node
  double e_elec = 50e-9;        // J/bit, tx/rx electronics
  double e_fs = 100e-12;        // J/bit/m^2, free-space amplifier
  double e_mp = 0.013e-12;      // J/bit/m^4, multipath amplifier
  double e_da = 5e-9;           // J/bit, data aggregation
  long data_packet_bits = 6400;  // head -> BS
  long ctrl_packet_bits = 200;   // member -> head
  double leach_p = 0.05;         // LEACH election probability
  long max_rounds = 10000;       // safety cap; runs also stop when all nodes die
  int knapsack_scale = 100;      // weight quantization factor
  std::uint64_t seed = 1;
  HeadScore head_score = HeadScore::Literal;
  KnapsackValue knapsack_value = KnapsackValue::Energy;
  ChargeModel charge_model = ChargeModel::Radio;
  HeadlessPolicy headless = HeadlessPolicy::Direct;

  // Throws ConfigError naming the first invalid field.
  void validate() const;

  static NetworkConfig load(const std::string& path);
  static NetworkConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

const char* to_string(HeadScore v);
const char* to_string(KnapsackValue v);
const char* to_string(ChargeModel v);
const char* to_string(HeadlessPolicy v);

}  // namespace wsnsim
