#pragma once

#include <random>
#include <vector>

#include "wsnsim/model.hpp"
#include "wsnsim/sim.hpp"

namespace wsnsim {

// Rotating-eligibility election state. A node elected head leaves the
// candidate set until the epoch (ceil(1/p) rounds) resets.
struct LeachState {
  double p = 0.05;
  int epoch_len = 20;
  std::vector<char> eligible;

  static LeachState init(const NetworkConfig& config);
};

// ceil(1/p), guarded against FP noise in the division (1/0.1 must give 10).
int leach_epoch_length(double p);

// p / (1 - p * (round mod epoch)) for eligible nodes, clamped to [0, 1];
// zero for ineligible nodes.
double election_threshold(const LeachState& leach, int node_id, int round);

// Every alive eligible node draws uniform [0,1) in id order and becomes a
// head when the draw falls below its threshold. Elected nodes are marked
// ineligible and get the Head role. The result may be empty.
std::vector<int> elect_heads(SimState& state, LeachState& leach, int round,
                             std::mt19937_64& rng);

// Each alive non-head joins the nearest head, ties to the lowest head id.
// Clusters come back ordered by head id.
std::vector<Cluster> join_nearest_head(const SimState& state, const std::vector<int>& heads,
                                       const NetworkConfig& config);

// One full LEACH round: epoch reset, election, joining, charging. Headless
// rounds follow config.headless (direct-to-BS transmission per alive node,
// or idle). Fills everything except RoundMetrics::round.
RoundMetrics leach_round(SimState& state, LeachState& leach, const NetworkConfig& config,
                         std::mt19937_64& rng, ChargeLedger& ledger, PacketCounters& packets);

}  // namespace wsnsim
