#pragma once

#include <string>
#include <vector>

#include "rvdsp/cluster.hpp"
#include "rvdsp/energy.hpp"

namespace rvdsp {

struct CoreReport {
  ExecStats stats;
  ContentionStats contention;
  EnergyReport energy;
};

// User-facing run summary: per-core sections plus aggregates. Serialized to
// JSON (schema in docs/report.schema.json) and CSV.
struct RunReport {
  uint64_t cycles = 0;
  std::vector<CoreReport> cores;
  bool deadlock = false;
  std::string golden;  // "pass", "fail" or "" when no golden check ran

  uint64_t retired() const {
    uint64_t n = 0;
    for (const auto& c : cores) n += c.stats.retired;
    return n;
  }
  uint64_t retired16() const {
    uint64_t n = 0;
    for (const auto& c : cores) n += c.stats.retired16;
    return n;
  }
  uint64_t loads() const {
    uint64_t n = 0;
    for (const auto& c : cores) n += c.stats.loads;
    return n;
  }
  uint64_t stores() const {
    uint64_t n = 0;
    for (const auto& c : cores) n += c.stats.stores;
    return n;
  }
  double ipc() const {
    return cycles == 0 ? 0.0
                       : static_cast<double>(retired()) /
                             static_cast<double>(cycles);
  }
  double compressed_ratio() const {
    const uint64_t r = retired();
    return r == 0 ? 0.0
                  : static_cast<double>(retired16()) / static_cast<double>(r);
  }
  double energy_pj() const {
    double e = 0;
    for (const auto& c : cores) e += c.energy.total_pj;
    return e;
  }
  ContentionStats contention() const {
    ContentionStats t;
    for (const auto& c : cores) t += c.contention;
    return t;
  }
  bool clean() const {
    if (deadlock) return false;
    for (const auto& c : cores)
      if (!c.stats.halted_clean) return false;
    return true;
  }
  bool trapped() const {
    for (const auto& c : cores)
      if (!c.stats.trap_message.empty() && !c.stats.nonterminating) return true;
    return false;
  }

  static RunReport from_cluster(const ClusterResult& cr,
                                const EnergyTable& table);
  static RunReport from_single(const TimedResult& tr, const EnergyTable& table);

  std::string to_json() const;  // stable key order, reproducible byte-for-byte
  std::string to_text() const;
};

}  // namespace rvdsp
