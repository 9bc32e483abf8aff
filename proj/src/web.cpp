#include "wsnsim/web.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsnsim/energy.hpp"
#include "wsnsim/knapsack.hpp"

namespace wsnsim {

int select_head(const SimState& state, const std::vector<int>& candidate_ids,
                const NetworkConfig& config) {
  if (candidate_ids.empty())
    throw std::invalid_argument("select_head: no candidates");

  int best_id = -1;
  double best_score = 0.0;
  for (int id : candidate_ids) {
    const NodeState& n = state.nodes.at(static_cast<std::size_t>(id));
    const double d = dist_to_bs(n, config);
    const double score = config.head_score == HeadScore::Literal
                             ? d * n.residual_energy
                             : d / n.residual_energy;
    if (best_id < 0 || score < best_score || (score == best_score && id < best_id)) {
      best_id = id;
      best_score = score;
    }
  }
  return best_id;
}

double distance_weight(double head_dist_to_bs, const NetworkConfig& config) {
  if (!(head_dist_to_bs >= 0.0))
    throw std::invalid_argument("distance_weight: distance must be >= 0");
  const double dmax = max_field_distance(config);
  return head_dist_to_bs * config.length / (dmax * dmax);
}

double balance_weight(const SimState& state, const NetworkConfig& config) {
  if (!(state.sum_of_energy > 0.0))
    throw std::runtime_error("balance_weight: network dead (sum_of_energy <= 0)");
  return config.initial_energy / state.sum_of_energy *
         static_cast<double>(state.alive_count);
}

ClusterWeightBreakdown cluster_weight(double head_dist_to_bs, const SimState& state,
                                      const NetworkConfig& config) {
  ClusterWeightBreakdown w;
  w.dist_weight = distance_weight(head_dist_to_bs, config);
  w.lost_energy_ratio = lost_energy_ratio(config);
  w.balance_weight = balance_weight(state, config);
  w.total = w.dist_weight + w.lost_energy_ratio + w.balance_weight;
  return w;
}

Cluster form_cluster(int head_id, const std::vector<int>& candidate_ids, const SimState& state,
                     const NetworkConfig& config) {
  const NodeState& head = state.nodes.at(static_cast<std::size_t>(head_id));

  Cluster cluster;
  cluster.head_id = head_id;
  cluster.head_dist_to_bs = dist_to_bs(head, config);
  cluster.weight = cluster_weight(cluster.head_dist_to_bs, state, config);

  if (candidate_ids.empty()) return cluster;  // singleton

  KnapsackInstance inst;
  inst.values.reserve(candidate_ids.size());
  inst.weights.reserve(candidate_ids.size());
  for (int id : candidate_ids) {
    const NodeState& n = state.nodes.at(static_cast<std::size_t>(id));
    inst.values.push_back(config.knapsack_value == KnapsackValue::Energy ? n.residual_energy
                                                                         : 1.0);
    inst.weights.push_back(dist_between(n, head));
  }
  inst.capacity = cluster.weight.total;
  inst.scale = config.knapsack_scale;

  const KnapsackSolution sol = solve_dp(inst);
  cluster.member_ids.reserve(sol.selected.size());
  for (int idx : sol.selected)
    cluster.member_ids.push_back(candidate_ids[static_cast<std::size_t>(idx)]);
  return cluster;
}

WebRoundPlan web_setup_phase(SimState& state, const NetworkConfig& config) {
  if (state.alive_count <= 0)
    throw std::runtime_error("web_setup_phase: no alive nodes");

  std::vector<int> unassigned;
  unassigned.reserve(state.nodes.size());
  for (NodeState& n : state.nodes) {
    if (n.alive) {
      n.role = NodeRole::Unassigned;
      unassigned.push_back(n.id);
    }
  }

  WebRoundPlan plan;
  while (!unassigned.empty()) {
    const int head_id = select_head(state, unassigned, config);
    unassigned.erase(std::find(unassigned.begin(), unassigned.end(), head_id));

    Cluster cluster = form_cluster(head_id, unassigned, state, config);

    // member_ids follow candidate order, which is ascending by id
    std::vector<int>& remaining = unassigned;
    std::vector<int> next;
    next.reserve(remaining.size());
    std::size_t mi = 0;
    for (int id : remaining) {
      if (mi < cluster.member_ids.size() && cluster.member_ids[mi] == id)
        ++mi;
      else
        next.push_back(id);
    }
    remaining.swap(next);

    NodeState& head = state.nodes[static_cast<std::size_t>(head_id)];
    head.role = NodeRole::Head;
    head.rounds_as_head += 1;
    for (int mid : cluster.member_ids)
      state.nodes[static_cast<std::size_t>(mid)].role = NodeRole::Member;

    plan.slot_assignments.push_back(cluster.member_ids);
    plan.clusters.push_back(std::move(cluster));
  }
  return plan;
}

RoundMetrics web_steady_state(SimState& state, const WebRoundPlan& plan,
                              const NetworkConfig& config, ChargeLedger& ledger,
                              PacketCounters& packets) {
  return charge_clusters(state, plan.clusters, config, ledger, packets);
}

}  // namespace wsnsim
