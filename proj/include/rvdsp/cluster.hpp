#pragma once

#include <cstdint>
#include <vector>

#include "rvdsp/pipeline.hpp"

namespace rvdsp {

struct ClusterConfig {
  uint32_t cores = 4;
  uint32_t banks = 8;
  uint32_t tcdm_size = MemorySystem::kDefaultSize;
  uint64_t max_cycles = 1'000'000'000;  // deadlock / runaway budget
};

struct ContentionStats {
  uint64_t total_accesses = 0;      // granted bank requests
  uint64_t contended_accesses = 0;  // accesses that lost arbitration >= once
  uint64_t stall_cycles = 0;        // total lost arbitration rounds

  double contended_pct() const {
    return total_accesses == 0 ? 0.0
                               : 100.0 * static_cast<double>(contended_accesses) /
                                     static_cast<double>(total_accesses);
  }
  ContentionStats& operator+=(const ContentionStats& o) {
    total_accesses += o.total_accesses;
    contended_accesses += o.contended_accesses;
    stall_cycles += o.stall_cycles;
    return *this;
  }
};

// Round-robin per-bank arbiter: one grant per bank per cycle, losers retry
// next cycle. The pointer advances past the granted core.
class BankArbiter {
 public:
  explicit BankArbiter(uint32_t banks) : next_(banks, 0) {}

  struct Request {
    uint32_t core = 0;
    uint32_t bank = 0;
  };
  // Returns, per request index, true when granted this cycle.
  std::vector<bool> arbitrate(const std::vector<Request>& requests);

 private:
  std::vector<uint32_t> next_;  // per-bank round-robin pointer
};

struct ClusterCoreResult {
  ExecStats stats;
  ContentionStats contention;
  CoreState core;
};

struct ClusterResult {
  std::vector<ClusterCoreResult> cores;
  uint64_t cycles = 0;  // max over cores
  bool deadlock = false;

  ContentionStats total_contention() const {
    ContentionStats t;
    for (const auto& c : cores) t += c.contention;
    return t;
  }
  bool all_clean() const {
    for (const auto& c : cores)
      if (!c.stats.halted_clean) return false;
    return !deadlock;
  }
};

// Lockstep cluster simulation: per cycle every core advances one step of its
// current instruction; TCDM word requests are arbitrated per bank; a store to
// the barrier cell parks the core until every core arrived or halted. The
// final memory image in `mem` is the golden-check surface.
ClusterResult run_cluster(const std::vector<Program>& programs,
                          MemorySystem& mem, const ClusterConfig& cluster_cfg,
                          const TimingConfig& timing_cfg);

}  // namespace rvdsp
