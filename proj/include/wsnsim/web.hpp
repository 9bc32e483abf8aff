#pragma once

#include <vector>

#include "wsnsim/model.hpp"
#include "wsnsim/sim.hpp"

namespace wsnsim {

struct WebRoundPlan {
  std::vector<Cluster> clusters;  // formation order
  // Logical TDMA slots, parallel to clusters: members ascending by id.
  std::vector<std::vector<int>> slot_assignments;
};

// Head choice over the candidate ids (which must be alive). Literal mode
// minimizes dist_to_bs * residual_energy, intent mode minimizes
// dist_to_bs / residual_energy. Ties go to the lowest id.
int select_head(const SimState& state, const std::vector<int>& candidate_ids,
                const NetworkConfig& config);

// (head_dist_to_bs * length) / Dmax^2
double distance_weight(double head_dist_to_bs, const NetworkConfig& config);

// (initial_energy / sum_of_energy) * alive_count
double balance_weight(const SimState& state, const NetworkConfig& config);

ClusterWeightBreakdown cluster_weight(double head_dist_to_bs, const SimState& state,
                                      const NetworkConfig& config);

// Knapsack member selection: values are candidate residual energies (or unit
// values), weights are distances to the head, capacity is the cluster weight.
// head_id must not appear in candidate_ids.
Cluster form_cluster(int head_id, const std::vector<int>& candidate_ids, const SimState& state,
                     const NetworkConfig& config);

// Repeats head selection and cluster formation until every alive node is
// assigned. Each iteration removes at least the head, so at most alive_count
// clusters form. Updates node roles and rounds_as_head.
WebRoundPlan web_setup_phase(SimState& state, const NetworkConfig& config);

RoundMetrics web_steady_state(SimState& state, const WebRoundPlan& plan,
                              const NetworkConfig& config, ChargeLedger& ledger,
                              PacketCounters& packets);

}  // namespace wsnsim
