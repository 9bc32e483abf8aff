#include "wsnsim/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace wsnsim {

double median(std::vector<double> values) {
  if (values.empty()) return -1.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

TraceStats summarize_rounds(Protocol protocol, std::uint64_t seed, int num_nodes,
                            const std::vector<RoundMetrics>& rounds,
                            const Milestones& milestones, int checkpoint) {
  TraceStats s;
  s.protocol = protocol;
  s.seed = seed;
  s.num_nodes = num_nodes;
  s.rounds_total = milestones.rounds_total;
  s.first_death_round = milestones.first_death_round;
  s.last_death_round = milestones.last_death_round;
  if (rounds.empty()) {
    s.checkpoint_clamped = true;
    return s;
  }
  std::size_t idx;
  if (checkpoint >= 1 && checkpoint <= static_cast<int>(rounds.size())) {
    idx = static_cast<std::size_t>(checkpoint - 1);
  } else {
    idx = rounds.size() - 1;
    s.checkpoint_clamped = true;
  }
  const RoundMetrics& m = rounds[idx];
  s.dead_at_checkpoint = num_nodes - m.alive_count;
  s.residual_at_checkpoint = m.sum_residual_energy;
  s.packets_at_checkpoint = m.packets_to_bs_cumulative;
  return s;
}

}  // namespace

TraceStats summarize(const SimTrace& trace, int checkpoint) {
  return summarize_rounds(trace.protocol, trace.seed, trace.config.num_nodes, trace.rounds,
                          trace.milestones, checkpoint);
}

TraceStats summarize(const ParsedTrace& trace, int checkpoint) {
  return summarize_rounds(trace.protocol, trace.seed, trace.num_nodes, trace.rounds,
                          trace.milestones, checkpoint);
}

ComparisonReport build_report(const std::vector<TraceStats>& stats, int checkpoint) {
  ComparisonReport report;
  report.checkpoint = checkpoint;

  for (Protocol proto : {Protocol::Web, Protocol::Leach}) {
    std::vector<double> first_death, last_death, dead_cp, residual_cp, packets_cp;
    ProtocolAggregates agg;
    agg.protocol = proto;
    for (const TraceStats& s : stats) {
      if (s.protocol != proto) continue;
      agg.traces += 1;
      if (s.checkpoint_clamped) agg.clamped_traces += 1;
      if (s.first_death_round >= 0) {
        agg.traces_with_deaths += 1;
        first_death.push_back(s.first_death_round);
        last_death.push_back(s.last_death_round);
      }
      dead_cp.push_back(s.dead_at_checkpoint);
      residual_cp.push_back(s.residual_at_checkpoint);
      packets_cp.push_back(static_cast<double>(s.packets_at_checkpoint));
    }
    if (agg.traces == 0) continue;
    agg.median_first_death = median(first_death);
    if (!first_death.empty()) {
      double sum = 0.0;
      for (double v : first_death) sum += v;
      agg.mean_first_death = sum / static_cast<double>(first_death.size());
    }
    agg.median_last_death = median(last_death);
    agg.median_dead_at_checkpoint = median(dead_cp);
    agg.median_residual_at_checkpoint = median(residual_cp);
    agg.median_packets_at_checkpoint = median(packets_cp);
    report.per_protocol.push_back(agg);
  }

  const ProtocolAggregates* web = nullptr;
  const ProtocolAggregates* leach = nullptr;
  for (const ProtocolAggregates& a : report.per_protocol) {
    if (a.protocol == Protocol::Web) web = &a;
    if (a.protocol == Protocol::Leach) leach = &a;
  }
  if (web && leach) {
    if (web->median_first_death >= 0 && leach->median_first_death > 0)
      report.first_death_ratio = web->median_first_death / leach->median_first_death;
    if (leach->median_dead_at_checkpoint > 0)
      report.dead_ratio = web->median_dead_at_checkpoint / leach->median_dead_at_checkpoint;
    if (leach->median_residual_at_checkpoint > 0)
      report.residual_ratio =
          web->median_residual_at_checkpoint / leach->median_residual_at_checkpoint;
    if (leach->median_packets_at_checkpoint > 0)
      report.packets_ratio =
          web->median_packets_at_checkpoint / leach->median_packets_at_checkpoint;
  }
  return report;
}

namespace {

std::string num(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string ratio_or_na(const std::optional<double>& r) {
  return r ? num(*r, 3) : std::string("n/a");
}

}  // namespace

void emit_comparison(const ComparisonReport& report, std::ostream& os) {
  os << "Protocol comparison at checkpoint round " << report.checkpoint << "\n";
  os << "(medians over the seed sweep; first_death also shows the mean)\n\n";
  os << "protocol  traces  first_death        last_death  dead@cp  residual@cp_J  packets@cp\n";
  for (const ProtocolAggregates& a : report.per_protocol) {
    char line[256];
    std::string fd = "-";
    if (a.traces_with_deaths > 0)
      fd = num(a.median_first_death, 1) + " (mean " + num(a.mean_first_death, 1) + ")";
    std::string ld = a.traces_with_deaths > 0 ? num(a.median_last_death, 1) : std::string("-");
    std::snprintf(line, sizeof line, "%-8s  %6d  %-17s  %10s  %7s  %13s  %10s\n",
                  to_string(a.protocol), a.traces, fd.c_str(), ld.c_str(),
                  num(a.median_dead_at_checkpoint, 1).c_str(),
                  num(a.median_residual_at_checkpoint, 6).c_str(),
                  num(a.median_packets_at_checkpoint, 1).c_str());
    os << line;
  }
  for (const ProtocolAggregates& a : report.per_protocol) {
    if (a.clamped_traces > 0)
      os << "note: " << to_string(a.protocol) << ": checkpoint beyond the final round in "
         << a.clamped_traces << " trace(s); final-round values used\n";
    if (a.traces_with_deaths < a.traces)
      os << "note: " << to_string(a.protocol) << ": " << (a.traces - a.traces_with_deaths)
         << " trace(s) recorded no deaths; excluded from first/last death medians\n";
  }
  if (report.per_protocol.size() >= 2) {
    os << "\nratios web/leach: first_death=" << ratio_or_na(report.first_death_ratio)
       << "  dead=" << ratio_or_na(report.dead_ratio)
       << "  residual=" << ratio_or_na(report.residual_ratio)
       << "  packets=" << ratio_or_na(report.packets_ratio) << "\n";
  }
}

std::string comparison_text(const ComparisonReport& report) {
  std::ostringstream os;
  emit_comparison(report, os);
  return os.str();
}

SweepResult run_sweep(const NetworkConfig& config, const std::vector<Protocol>& protocols,
                      const std::vector<std::uint64_t>& seeds, int checkpoint, int threads) {
  if (seeds.empty()) throw std::invalid_argument("run_sweep: at least one seed required");

  struct Task {
    Protocol protocol;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (Protocol p : protocols)
    for (std::uint64_t s : seeds) tasks.push_back({p, s});

  SweepResult result;
  result.traces.resize(tasks.size());

  int workers = threads;
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = static_cast<int>(hw == 0 ? 2 : hw);
  }
  workers = std::min<int>(workers, static_cast<int>(tasks.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        result.traces[i] = run_simulation(config, tasks[i].protocol, tasks[i].seed);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<TraceStats> stats;
  stats.reserve(result.traces.size());
  for (const SimTrace& t : result.traces) stats.push_back(summarize(t, checkpoint));
  result.report = build_report(stats, checkpoint);
  return result;
}

}  // namespace wsnsim
