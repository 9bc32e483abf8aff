#include "wsnsim/sim.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsnsim/leach.hpp"
#include "wsnsim/rng.hpp"
#include "wsnsim/web.hpp"

namespace wsnsim {

const char* to_string(Protocol p) { return p == Protocol::Web ? "web" : "leach"; }

double apply_charge(SimState& state, int node_id, double amount, ChargeCause cause,
                    ChargeLedger& ledger, std::vector<int>& deaths) {
  NodeState& node = state.nodes.at(static_cast<std::size_t>(node_id));
  if (!node.alive || amount <= 0.0) return 0.0;

  double actual;
  if (amount >= node.residual_energy) {
    actual = node.residual_energy;
    node.residual_energy = 0.0;
    node.alive = false;
    node.role = NodeRole::Unassigned;
    state.alive_count -= 1;
    deaths.push_back(node_id);
  } else {
    actual = amount;
    node.residual_energy -= amount;
  }
  state.sum_of_energy -= actual;
  if (actual > 0.0) ledger.record(EnergyCharge{node_id, actual, cause});
  return actual;
}

RoundMetrics charge_clusters(SimState& state, const std::vector<Cluster>& clusters,
                             const NetworkConfig& config, ChargeLedger& ledger,
                             PacketCounters& packets) {
  std::vector<int> deaths;
  for (const Cluster& cluster : clusters) {
    const NodeState& head = state.nodes.at(static_cast<std::size_t>(cluster.head_id));
    if (config.charge_model == ChargeModel::Radio) {
      for (int mid : cluster.member_ids) {
        const double d = dist_between(state.nodes[static_cast<std::size_t>(mid)], head);
        apply_charge(state, mid, tx_cost(config.ctrl_packet_bits, d, config),
                     ChargeCause::TxCtrl, ledger, deaths);
        packets.ctrl_to_heads += 1;
      }
      for (std::size_t k = 0; k < cluster.member_ids.size(); ++k)
        apply_charge(state, cluster.head_id, rx_cost(config.ctrl_packet_bits, config),
                     ChargeCause::Rx, ledger, deaths);
      apply_charge(state, cluster.head_id, aggregation_cost(config.data_packet_bits, config),
                   ChargeCause::Aggregate, ledger, deaths);
      packets.data_to_bs += 1;
      apply_charge(state, cluster.head_id,
                   tx_cost(config.data_packet_bits, cluster.head_dist_to_bs, config),
                   ChargeCause::TxData, ledger, deaths);
    } else {
      for (int mid : cluster.member_ids) {
        apply_charge(state, mid, lost_energy_member(config), ChargeCause::TxCtrl, ledger,
                     deaths);
        packets.ctrl_to_heads += 1;
      }
      packets.data_to_bs += 1;
      apply_charge(state, cluster.head_id, lost_energy_head(config), ChargeCause::TxData,
                   ledger, deaths);
    }
  }
  std::sort(deaths.begin(), deaths.end());

  RoundMetrics m;
  m.alive_count = state.alive_count;
  m.sum_residual_energy = state.sum_of_energy;
  m.packets_to_bs_cumulative = packets.data_to_bs;
  m.ctrl_packets_cumulative = packets.ctrl_to_heads;
  m.cluster_count = static_cast<int>(clusters.size());
  m.deaths_this_round = std::move(deaths);
  return m;
}

bool clusters_partition_alive(const SimState& state, const std::vector<Cluster>& clusters) {
  std::vector<int> seen(state.nodes.size(), 0);
  for (const Cluster& c : clusters) {
    if (c.head_id < 0 || c.head_id >= static_cast<int>(state.nodes.size())) return false;
    seen[static_cast<std::size_t>(c.head_id)] += 1;
    for (int mid : c.member_ids) {
      if (mid < 0 || mid >= static_cast<int>(state.nodes.size()) || mid == c.head_id)
        return false;
      seen[static_cast<std::size_t>(mid)] += 1;
    }
  }
  for (const NodeState& n : state.nodes) {
    const int expected = n.alive ? 1 : 0;
    if (seen[static_cast<std::size_t>(n.id)] != expected) return false;
  }
  return true;
}

SimTrace run_simulation(const NetworkConfig& config, Protocol protocol, std::uint64_t seed,
                        ChargeLedger::Sink charge_sink) {
  config.validate();

  SimTrace trace;
  trace.config = config;
  trace.protocol = protocol;
  trace.seed = seed;

  SimState state = init_network(config, seed);
  trace.initial_total_energy = state.sum_of_energy;

  ChargeLedger ledger(std::move(charge_sink));
  PacketCounters packets;
  LeachState leach = LeachState::init(config);
  std::mt19937_64 election_rng = seeded_stream(seed, kElectionStream);

  while (state.alive_count > 0 && state.round < config.max_rounds) {
    RoundMetrics m;
    if (protocol == Protocol::Web) {
      const WebRoundPlan plan = web_setup_phase(state, config);
      const bool ok = clusters_partition_alive(state, plan.clusters);
      m = web_steady_state(state, plan, config, ledger, packets);
      m.partition_ok = ok;
    } else {
      m = leach_round(state, leach, config, election_rng, ledger, packets);
    }
    state.round += 1;
    m.round = state.round;

    if (!m.deaths_this_round.empty()) {
      if (trace.milestones.first_death_round < 0) {
        trace.milestones.first_death_round = m.round;
        trace.milestones.first_death_node = m.deaths_this_round.front();
      }
      trace.milestones.last_death_round = m.round;
    }
    if (!m.partition_ok) trace.partition_violations += 1;
    trace.rounds.push_back(std::move(m));
  }

  trace.milestones.rounds_total = state.round;
  trace.charges = ledger.totals();
  return trace;
}

}  // namespace wsnsim
