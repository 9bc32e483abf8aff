#pragma once

#include <cstdint>
#include <vector>

#include "wsnsim/config.hpp"

namespace wsnsim {

enum class NodeRole { Unassigned, Member, Head };

struct NodeState {
  int id = 0;
  double x = 0.0;  // m
  double y = 0.0;  // m
  double residual_energy = 0.0;  // J, >= 0; alive <=> residual_energy > 0
  bool alive = true;
  NodeRole role = NodeRole::Unassigned;
  int rounds_as_head = 0;
};

// Weight of one cluster, kept as the breakdown that produced it.
// total is computed as the plain sum of the three components.
struct ClusterWeightBreakdown {
  double dist_weight = 0.0;
  double lost_energy_ratio = 0.0;
  double balance_weight = 0.0;
  double total = 0.0;
};

struct Cluster {
  int head_id = -1;
  std::vector<int> member_ids;  // ascending; doubles as the TDMA slot order
  double head_dist_to_bs = 0.0;
  ClusterWeightBreakdown weight;  // zeroed for LEACH clusters
};

struct SimState {
  int round = 0;  // completed rounds
  std::vector<NodeState> nodes;  // nodes[i].id == i
  double sum_of_energy = 0.0;  // cached sum of residual_energy over alive nodes
  int alive_count = 0;

  double recompute_sum() const;
  int recompute_alive() const;
};

double dist_to_bs(const NodeState& node, const NetworkConfig& config);
double dist_between(const NodeState& a, const NodeState& b);

// Field diagonal sqrt(length^2 + width^2).
double max_field_distance(const NetworkConfig& config);

// Places num_nodes i.i.d. uniform over the field with the given seed and
// every node at full energy. Validates the config first.
SimState init_network(const NetworkConfig& config, std::uint64_t seed);

}  // namespace wsnsim
