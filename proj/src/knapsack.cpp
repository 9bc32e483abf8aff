#include "wsnsim/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wsnsim {

namespace {

constexpr double kMaxQuantized = 9.0e18;  // stays inside int64_t
constexpr std::int64_t kMaxDpCells = 200'000'000;

// Sums in ascending index order so the DP and the brute-force oracle produce
// bit-identical totals for the same selection.
double value_of(const std::vector<double>& values, const std::vector<int>& selected) {
  double s = 0.0;
  for (int i : selected) s += values[static_cast<std::size_t>(i)];
  return s;
}

double weight_of(const std::vector<double>& weights, const std::vector<int>& selected) {
  double s = 0.0;
  for (int i : selected) s += weights[static_cast<std::size_t>(i)];
  return s;
}

KnapsackSolution make_solution(const KnapsackInstance& inst, std::vector<int> selected) {
  KnapsackSolution sol;
  sol.total_value = value_of(inst.values, selected);
  sol.total_weight = weight_of(inst.weights, selected);
  sol.selected = std::move(selected);
  return sol;
}

}  // namespace

void KnapsackInstance::validate() const {
  if (values.size() != weights.size())
    throw std::invalid_argument("knapsack: values and weights must have equal length");
  if (!(capacity >= 0.0) || !std::isfinite(capacity))
    throw std::invalid_argument("knapsack: capacity must be finite and >= 0");
  if (scale < 1) throw std::invalid_argument("knapsack: scale must be >= 1");
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("knapsack: values must be finite and >= 0");
  for (double w : weights)
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("knapsack: weights must be finite and >= 0");
}

QuantizedInstance quantize(const KnapsackInstance& instance) {
  instance.validate();
  const double s = static_cast<double>(instance.scale);

  QuantizedInstance q;
  q.weights.reserve(instance.n());
  for (double w : instance.weights) {
    const double scaled = w * s;
    if (scaled > kMaxQuantized)
      throw std::overflow_error("knapsack: quantized weight overflows (weight " +
                                std::to_string(w) + " at scale " +
                                std::to_string(instance.scale) + ")");
    q.weights.push_back(std::llround(scaled));
  }
  const double scaled_cap = instance.capacity * s;
  if (scaled_cap > kMaxQuantized)
    throw std::overflow_error("knapsack: quantized capacity overflows");
  q.capacity = static_cast<std::int64_t>(std::floor(scaled_cap));
  return q;
}

KnapsackSolution solve_dp(const KnapsackInstance& instance) {
  const QuantizedInstance q = quantize(instance);
  const int n = static_cast<int>(instance.n());
  const std::int64_t cap = q.capacity;

  // Everything fits: with all values positive the backtrack would include
  // every item, so skip the table.
  {
    std::int64_t total_w = 0;
    bool all_fit = true;
    bool all_positive = true;
    for (int i = 0; i < n; ++i) {
      const std::int64_t w = q.weights[static_cast<std::size_t>(i)];
      if (w > cap - total_w) { all_fit = false; break; }
      total_w += w;
      if (!(instance.values[static_cast<std::size_t>(i)] > 0.0)) all_positive = false;
    }
    if (all_fit && all_positive) {
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
      return make_solution(instance, std::move(all));
    }
  }

  const std::int64_t cols = cap + 1;
  if (static_cast<std::int64_t>(n) * cols > kMaxDpCells)
    throw std::overflow_error("knapsack: instance too large for the DP table (n=" +
                              std::to_string(n) + ", quantized capacity=" +
                              std::to_string(cap) + ")");

  // Rolling best-value row; taken[i][c] records dp[i+1][c] != dp[i][c].
  std::vector<double> best(static_cast<std::size_t>(cols), 0.0);
  const std::size_t words_per_item = static_cast<std::size_t>((cols + 63) / 64);
  std::vector<std::uint64_t> taken(words_per_item * static_cast<std::size_t>(n), 0);

  for (int i = 0; i < n; ++i) {
    const std::int64_t w = q.weights[static_cast<std::size_t>(i)];
    if (w > cap) continue;  // can never be selected; row is unchanged
    const double v = instance.values[static_cast<std::size_t>(i)];
    std::uint64_t* bits = taken.data() + static_cast<std::size_t>(i) * words_per_item;
    for (std::int64_t c = cap; c >= w; --c) {
      const double cand = best[static_cast<std::size_t>(c - w)] + v;
      if (cand > best[static_cast<std::size_t>(c)]) {
        best[static_cast<std::size_t>(c)] = cand;
        bits[static_cast<std::size_t>(c >> 6)] |= std::uint64_t{1} << (c & 63);
      }
    }
  }

  std::vector<int> selected;
  std::int64_t c = cap;
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t* bits = taken.data() + static_cast<std::size_t>(i) * words_per_item;
    if (bits[static_cast<std::size_t>(c >> 6)] >> (c & 63) & 1) {
      selected.push_back(i);
      c -= q.weights[static_cast<std::size_t>(i)];
    }
  }
  std::reverse(selected.begin(), selected.end());
  return make_solution(instance, std::move(selected));
}

KnapsackSolution solve_brute_force(const KnapsackInstance& instance) {
  const QuantizedInstance q = quantize(instance);
  const int n = static_cast<int>(instance.n());
  if (n > 20)
    throw std::invalid_argument("knapsack: brute-force oracle is limited to n <= 20 (got " +
                                std::to_string(n) + ")");

  double best_value = 0.0;  // empty set is always feasible (capacity >= 0)
  std::vector<int> best_set;
  std::vector<int> cand;

  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::int64_t wsum = 0;
    bool feasible = true;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        wsum += q.weights[static_cast<std::size_t>(i)];
        if (wsum > q.capacity) { feasible = false; break; }
      }
    }
    if (!feasible) continue;

    double vsum = 0.0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) vsum += instance.values[static_cast<std::size_t>(i)];

    if (vsum < best_value) continue;
    cand.clear();
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) cand.push_back(i);
    if (vsum > best_value ||
        std::lexicographical_compare(cand.begin(), cand.end(), best_set.begin(),
                                     best_set.end())) {
      best_value = vsum;
      best_set = cand;
    }
  }
  return make_solution(instance, std::move(best_set));
}

}  // namespace wsnsim
