#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "wsnsim/config.hpp"
#include "wsnsim/energy.hpp"
#include "wsnsim/model.hpp"

namespace wsnsim {

enum class Protocol { Web, Leach };
const char* to_string(Protocol p);

struct RoundMetrics {
  int round = 0;  // 1-based
  int alive_count = 0;
  double sum_residual_energy = 0.0;
  long packets_to_bs_cumulative = 0;   // data packets (heads, plus headless direct senders)
  long ctrl_packets_cumulative = 0;    // member-to-head control packets
  int cluster_count = 0;
  std::vector<int> deaths_this_round;  // ascending node ids
  bool partition_ok = true;

  bool operator==(const RoundMetrics&) const = default;
};

struct PacketCounters {
  long data_to_bs = 0;
  long ctrl_to_heads = 0;
};

struct ChargeTotals {
  double total = 0.0;
  std::array<double, kNumChargeCauses> by_cause{};
  std::array<long, kNumChargeCauses> count_by_cause{};
  long count = 0;
};

// Accumulates charge totals for the conservation audit. An optional sink
// observes every individual EnergyCharge.
class ChargeLedger {
 public:
  using Sink = std::function<void(const EnergyCharge&)>;

  ChargeLedger() = default;
  explicit ChargeLedger(Sink sink) : sink_(std::move(sink)) {}

  void record(const EnergyCharge& c) {
    totals_.total += c.amount;
    totals_.by_cause[static_cast<std::size_t>(c.cause)] += c.amount;
    totals_.count_by_cause[static_cast<std::size_t>(c.cause)] += 1;
    totals_.count += 1;
    if (sink_) sink_(c);
  }

  const ChargeTotals& totals() const { return totals_; }

 private:
  ChargeTotals totals_;
  Sink sink_;
};

// Deducts up to `amount` from the node, clamping at zero. A node reaching
// zero is marked dead and appended to `deaths`; a node already at zero
// accrues nothing. Returns the energy actually removed.
double apply_charge(SimState& state, int node_id, double amount, ChargeCause cause,
                    ChargeLedger& ledger, std::vector<int>& deaths);

// Steady-state accounting shared by both protocols. Members pay control
// transmission to their head; heads pay per-member reception, aggregation,
// and data transmission to the BS (or the flat eq7_8 role constants).
// One data packet is counted per cluster. Fills everything except
// RoundMetrics::round and partition_ok.
RoundMetrics charge_clusters(SimState& state, const std::vector<Cluster>& clusters,
                             const NetworkConfig& config, ChargeLedger& ledger,
                             PacketCounters& packets);

// True when the clusters exactly partition the alive nodes (every alive node
// appears exactly once as head or member, and no dead node appears).
bool clusters_partition_alive(const SimState& state, const std::vector<Cluster>& clusters);

struct Milestones {
  int first_death_round = -1;
  int first_death_node = -1;  // lowest id among that round's deaths
  int last_death_round = -1;
  int rounds_total = 0;
};

struct SimTrace {
  NetworkConfig config;
  Protocol protocol = Protocol::Web;
  std::uint64_t seed = 0;
  std::vector<RoundMetrics> rounds;
  Milestones milestones;
  ChargeTotals charges;
  double initial_total_energy = 0.0;
  long partition_violations = 0;
};

// Runs one protocol from init_network until every node is dead or
// config.max_rounds is reached. An optional sink sees every EnergyCharge.
SimTrace run_simulation(const NetworkConfig& config, Protocol protocol, std::uint64_t seed,
                        ChargeLedger::Sink charge_sink = nullptr);

}  // namespace wsnsim
