#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wsnsim/sim.hpp"
#include "wsnsim/trace_io.hpp"

namespace wsnsim {

// Per-trace values entering the sweep aggregates. Checkpoint values clamp to
// the final round when the run ended earlier.
struct TraceStats {
  Protocol protocol = Protocol::Web;
  std::uint64_t seed = 0;
  int num_nodes = 0;
  int rounds_total = 0;
  int first_death_round = -1;
  int last_death_round = -1;
  int dead_at_checkpoint = 0;
  double residual_at_checkpoint = 0.0;
  long packets_at_checkpoint = 0;
  bool checkpoint_clamped = false;
};

TraceStats summarize(const SimTrace& trace, int checkpoint);
TraceStats summarize(const ParsedTrace& trace, int checkpoint);

struct ProtocolAggregates {
  Protocol protocol = Protocol::Web;
  int traces = 0;
  int traces_with_deaths = 0;
  double median_first_death = -1.0;  // over traces with deaths; -1 when none
  double mean_first_death = -1.0;
  double median_last_death = -1.0;
  double median_dead_at_checkpoint = 0.0;
  double median_residual_at_checkpoint = 0.0;
  double median_packets_at_checkpoint = 0.0;
  int clamped_traces = 0;
};

struct ComparisonReport {
  int checkpoint = 700;
  std::vector<ProtocolAggregates> per_protocol;
  // web over leach, present only when both protocols appear with nonzero
  // denominators; computed from the stored aggregates
  std::optional<double> first_death_ratio;
  std::optional<double> dead_ratio;
  std::optional<double> residual_ratio;
  std::optional<double> packets_ratio;
};

ComparisonReport build_report(const std::vector<TraceStats>& stats, int checkpoint);

void emit_comparison(const ComparisonReport& report, std::ostream& os);
std::string comparison_text(const ComparisonReport& report);

struct SweepResult {
  ComparisonReport report;
  std::vector<SimTrace> traces;  // protocol-major, then seed order
};

// One run per (protocol, seed). Runs are independent, so they execute on up
// to `threads` workers (0 picks a sensible default); results are identical
// for any thread count.
SweepResult run_sweep(const NetworkConfig& config, const std::vector<Protocol>& protocols,
                      const std::vector<std::uint64_t>& seeds, int checkpoint,
                      int threads = 0);

double median(std::vector<double> values);  // empty input yields -1

}  // namespace wsnsim
