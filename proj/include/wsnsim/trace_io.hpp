#pragma once

#include <iosfwd>
#include <string>

#include "wsnsim/sim.hpp"

namespace wsnsim {

// One row per round:
//   round,alive,residual_energy_j,packets_cumulative,clusters,deaths,ctrl_packets_cumulative
// Energies are fixed 9 decimal places; deaths is a ';'-joined id list.
extern const char* const kTraceCsvHeader;

void write_trace_csv(const SimTrace& trace, std::ostream& os);
void emit_trace_csv(const SimTrace& trace, const std::string& path);

std::string trace_filename(Protocol protocol, std::uint64_t seed);

// Trace reconstructed from a persisted CSV. Protocol and seed come from the
// filename (trace_<protocol>_seed<seed>.csv); milestones are rebuilt from
// the rows.
struct ParsedTrace {
  Protocol protocol = Protocol::Web;
  std::uint64_t seed = 0;
  int num_nodes = 0;  // alive at round 1 plus that round's deaths
  std::vector<RoundMetrics> rounds;
  Milestones milestones;
};

ParsedTrace read_trace_csv(const std::string& path);

}  // namespace wsnsim
