#include "wsnsim/model.hpp"

#include <cmath>

#include "wsnsim/rng.hpp"

namespace wsnsim {

double SimState::recompute_sum() const {
  double s = 0.0;
  for (const NodeState& n : nodes)
    if (n.alive) s += n.residual_energy;
  return s;
}

int SimState::recompute_alive() const {
  int c = 0;
  for (const NodeState& n : nodes)
    if (n.alive) ++c;
  return c;
}

double dist_to_bs(const NodeState& node, const NetworkConfig& config) {
  return std::hypot(config.bs_x - node.x, config.bs_y - node.y);
}

double dist_between(const NodeState& a, const NodeState& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double max_field_distance(const NetworkConfig& config) {
  return std::hypot(config.length, config.width);
}

SimState init_network(const NetworkConfig& config, std::uint64_t seed) {
  config.validate();
  std::mt19937_64 rng = seeded_stream(seed, kPlacementStream);

  SimState state;
  state.nodes.reserve(static_cast<std::size_t>(config.num_nodes));
  for (int i = 0; i < config.num_nodes; ++i) {
    NodeState n;
    n.id = i;
    n.x = uniform01(rng) * config.length;
    n.y = uniform01(rng) * config.width;
    n.residual_energy = config.initial_energy;
    n.alive = true;
    state.nodes.push_back(n);
  }
  state.alive_count = config.num_nodes;
  state.sum_of_energy = state.recompute_sum();
  state.round = 0;
  return state;
}

}  // namespace wsnsim
