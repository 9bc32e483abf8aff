#pragma once

#include <cstdint>
#include <vector>

namespace wsnsim {

// 0/1 knapsack over real-valued weights. Weights and capacity are quantized
// to integers by `scale` before solving; values stay real.
struct KnapsackInstance {
  std::vector<double> values;   // >= 0, finite
  std::vector<double> weights;  // >= 0, finite, same length as values
  double capacity = 0.0;        // >= 0
  int scale = 1;                // >= 1

  std::size_t n() const { return values.size(); }
  void validate() const;  // throws std::invalid_argument
};

struct QuantizedInstance {
  std::vector<std::int64_t> weights;  // round(weight * scale)
  std::int64_t capacity = 0;          // floor(capacity * scale)
};

struct KnapsackSolution {
  std::vector<int> selected;  // ascending item indices
  double total_value = 0.0;   // sum of values over selected, ascending order
  double total_weight = 0.0;  // sum of real weights over selected
};

// Weight quantization. Capacity floors so the quantized budget never exceeds
// the real one beyond scale resolution. Throws on integer overflow.
QuantizedInstance quantize(const KnapsackInstance& instance);

// Exact DP, value-maximizing over quantized weight columns. Among equal-value
// optima the backtrack prefers exclusion at higher indices: item i is
// included iff dp[i][c] != dp[i-1][c].
KnapsackSolution solve_dp(const KnapsackInstance& instance);

// Exhaustive oracle for n <= 20. Ties broken by the lexicographically
// smallest index set.
KnapsackSolution solve_brute_force(const KnapsackInstance& instance);

}  // namespace wsnsim
