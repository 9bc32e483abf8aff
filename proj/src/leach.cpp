#include "wsnsim/leach.hpp"

#include <algorithm>
#include <cmath>

#include "wsnsim/energy.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

int leach_epoch_length(double p) {
  // 1e-9 absorbs FP noise so near-integer 1/p (0.1, 0.05, ...) does not
  // round an epoch up.
  return static_cast<int>(std::ceil(1.0 / p - 1e-9));
}

LeachState LeachState::init(const NetworkConfig& config) {
  LeachState ls;
  ls.p = config.leach_p;
  ls.epoch_len = leach_epoch_length(config.leach_p);
  ls.eligible.assign(static_cast<std::size_t>(config.num_nodes), 1);
  return ls;
}

double election_threshold(const LeachState& leach, int node_id, int round) {
  if (!leach.eligible.at(static_cast<std::size_t>(node_id))) return 0.0;
  const int r = round % leach.epoch_len;
  const double denom = 1.0 - leach.p * static_cast<double>(r);
  if (denom <= 0.0) return 1.0;
  return std::min(leach.p / denom, 1.0);
}

std::vector<int> elect_heads(SimState& state, LeachState& leach, int round,
                             std::mt19937_64& rng) {
  std::vector<int> heads;
  for (NodeState& n : state.nodes) {
    if (!n.alive || !leach.eligible[static_cast<std::size_t>(n.id)]) continue;
    const double draw = uniform01(rng);
    if (draw < election_threshold(leach, n.id, round)) {
      heads.push_back(n.id);
      leach.eligible[static_cast<std::size_t>(n.id)] = 0;
      n.role = NodeRole::Head;
      n.rounds_as_head += 1;
    }
  }
  return heads;
}

std::vector<Cluster> join_nearest_head(const SimState& state, const std::vector<int>& heads,
                                       const NetworkConfig& config) {
  std::vector<Cluster> clusters;
  clusters.reserve(heads.size());
  for (int h : heads) {
    Cluster c;
    c.head_id = h;
    c.head_dist_to_bs = dist_to_bs(state.nodes.at(static_cast<std::size_t>(h)), config);
    clusters.push_back(std::move(c));
  }

  for (const NodeState& n : state.nodes) {
    if (!n.alive) continue;
    if (std::find(heads.begin(), heads.end(), n.id) != heads.end()) continue;
    std::size_t best = 0;
    double best_d = dist_between(n, state.nodes[static_cast<std::size_t>(heads[0])]);
    for (std::size_t k = 1; k < heads.size(); ++k) {
      const double d = dist_between(n, state.nodes[static_cast<std::size_t>(heads[k])]);
      if (d < best_d) {  // ties keep the earlier (lower) head id
        best_d = d;
        best = k;
      }
    }
    clusters[best].member_ids.push_back(n.id);
  }
  return clusters;
}

RoundMetrics leach_round(SimState& state, LeachState& leach, const NetworkConfig& config,
                         std::mt19937_64& rng, ChargeLedger& ledger, PacketCounters& packets) {
  const int round = state.round;
  if (round % leach.epoch_len == 0) {
    for (const NodeState& n : state.nodes)
      if (n.alive) leach.eligible[static_cast<std::size_t>(n.id)] = 1;
  }
  for (NodeState& n : state.nodes)
    if (n.alive) n.role = NodeRole::Unassigned;

  const std::vector<int> heads = elect_heads(state, leach, round, rng);

  if (heads.empty()) {
    RoundMetrics m;
    std::vector<int> deaths;
    if (config.headless == HeadlessPolicy::Direct) {
      // Every alive node sends its data packet straight to the BS. Under the
      // eq7_8 model the sender is charged as a head.
      std::vector<int> senders;
      for (const NodeState& n : state.nodes)
        if (n.alive) senders.push_back(n.id);
      for (int id : senders) {
        packets.data_to_bs += 1;
        const double cost =
            config.charge_model == ChargeModel::Radio
                ? tx_cost(config.data_packet_bits,
                          dist_to_bs(state.nodes[static_cast<std::size_t>(id)], config), config)
                : lost_energy_head(config);
        apply_charge(state, id, cost, ChargeCause::TxData, ledger, deaths);
      }
    }
    std::sort(deaths.begin(), deaths.end());
    m.alive_count = state.alive_count;
    m.sum_residual_energy = state.sum_of_energy;
    m.packets_to_bs_cumulative = packets.data_to_bs;
    m.ctrl_packets_cumulative = packets.ctrl_to_heads;
    m.cluster_count = 0;
    m.deaths_this_round = std::move(deaths);
    m.partition_ok = true;  // vacuous on headless rounds
    return m;
  }

  const std::vector<Cluster> clusters = join_nearest_head(state, heads, config);
  for (const Cluster& c : clusters)
    for (int mid : c.member_ids)
      state.nodes[static_cast<std::size_t>(mid)].role = NodeRole::Member;

  const bool ok = clusters_partition_alive(state, clusters);
  RoundMetrics m = charge_clusters(state, clusters, config, ledger, packets);
  m.partition_ok = ok;
  return m;
}

}  // namespace wsnsim
