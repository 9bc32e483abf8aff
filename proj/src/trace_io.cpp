#include "wsnsim/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wsnsim {

const char* const kTraceCsvHeader =
    "round,alive,residual_energy_j,packets_cumulative,clusters,deaths,ctrl_packets_cumulative";

namespace {

std::string fmt_energy(double joules) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", joules);
  return buf;
}

std::string join_deaths(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(line.substr(start));
      break;
    }
    parts.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void bad_trace(const std::string& path, const std::string& why) {
  throw std::runtime_error("malformed trace file " + path + ": " + why);
}

}  // namespace

void write_trace_csv(const SimTrace& trace, std::ostream& os) {
  os << kTraceCsvHeader << '\n';
  for (const RoundMetrics& m : trace.rounds) {
    os << m.round << ',' << m.alive_count << ',' << fmt_energy(m.sum_residual_energy) << ','
       << m.packets_to_bs_cumulative << ',' << m.cluster_count << ','
       << join_deaths(m.deaths_this_round) << ',' << m.ctrl_packets_cumulative << '\n';
  }
}

void emit_trace_csv(const SimTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open trace output file: " + path);
  write_trace_csv(trace, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed for trace output file: " + path);
}

std::string trace_filename(Protocol protocol, std::uint64_t seed) {
  return std::string("trace_") + to_string(protocol) + "_seed" + std::to_string(seed) + ".csv";
}

ParsedTrace read_trace_csv(const std::string& path) {
  ParsedTrace t;

  // protocol and seed from the basename
  std::string name = path;
  if (const std::size_t slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (name.rfind("trace_web_seed", 0) == 0)
    t.protocol = Protocol::Web;
  else if (name.rfind("trace_leach_seed", 0) == 0)
    t.protocol = Protocol::Leach;
  else
    bad_trace(path, "filename must look like trace_<protocol>_seed<seed>.csv");
  const std::size_t seed_pos = name.find("seed") + 4;
  const std::size_t dot = name.rfind(".csv");
  if (dot == std::string::npos || dot <= seed_pos)
    bad_trace(path, "filename must end in <seed>.csv");
  try {
    t.seed = std::stoull(name.substr(seed_pos, dot - seed_pos));
  } catch (const std::exception&) {
    bad_trace(path, "seed in filename is not a number");
  }

  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);

  std::string line;
  if (!std::getline(in, line)) bad_trace(path, "missing header");
  if (line == std::string(kTraceCsvHeader) + "\r") line.pop_back();
  if (line != kTraceCsvHeader) bad_trace(path, "unexpected header: " + line);

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 7) bad_trace(path, "expected 7 columns, got " + std::to_string(f.size()));
    RoundMetrics m;
    try {
      m.round = std::stoi(f[0]);
      m.alive_count = std::stoi(f[1]);
      m.sum_residual_energy = std::stod(f[2]);
      m.packets_to_bs_cumulative = std::stol(f[3]);
      m.cluster_count = std::stoi(f[4]);
      if (!f[5].empty())
        for (const std::string& id : split(f[5], ';')) m.deaths_this_round.push_back(std::stoi(id));
      m.ctrl_packets_cumulative = std::stol(f[6]);
    } catch (const std::exception&) {
      bad_trace(path, "unparsable row: " + line);
    }
    t.rounds.push_back(std::move(m));
  }

  for (const RoundMetrics& m : t.rounds) {
    if (!m.deaths_this_round.empty()) {
      if (t.milestones.first_death_round < 0) {
        t.milestones.first_death_round = m.round;
        t.milestones.first_death_node = m.deaths_this_round.front();
      }
      t.milestones.last_death_round = m.round;
    }
  }
  t.milestones.rounds_total = static_cast<int>(t.rounds.size());
  if (!t.rounds.empty())
    t.num_nodes = t.rounds.front().alive_count +
                  static_cast<int>(t.rounds.front().deaths_this_round.size());
  return t;
}

}  // namespace wsnsim
