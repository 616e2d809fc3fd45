#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rvdsp/exec.hpp"

namespace rvdsp {

// Cycle-cost parameters of the 4-stage pipeline model. The LSU has its own
// register-file write port, so only true load-use dependences stall; taken
// control flow pays a redirect penalty plus a prefetch-line refill when the
// target leaves the current line. Values are calibration, loadable from a
// key-value file (configs/timing.default.cfg documents each one).
struct TimingConfig {
  uint32_t taken_branch_penalty = 2;
  uint32_t load_use_penalty = 1;
  uint32_t unaligned_mem_extra = 1;   // unaligned accesses cost 2 cycles total
  uint32_t hwloop_backjump_penalty = 0;
  uint32_t line_bits = 128;           // prefetch buffer line width
  uint32_t line_refill_penalty = 1;   // redirect leaving the current line
  uint32_t div_base_latency = 2;      // divider: base + quotient bits, in [2,32]

  uint32_t line_bytes() const { return line_bits / 8; }
  uint32_t div_latency(uint32_t quotient_bits) const {
    uint32_t lat = div_base_latency + quotient_bits;
    if (lat < 2) lat = 2;
    return lat > 32 ? 32 : lat;
  }

  static TimingConfig from_file(const std::string& path);
};

enum class StallReason : uint8_t {
  kNone,
  kLoadUse,
  kBranch,
  kFetch,
  kMemUnaligned,
  kDiv,
  kContention,
  kCount
};

constexpr int kStallReasonCount = static_cast<int>(StallReason::kCount);
std::string_view stall_reason_name(StallReason r);

struct CycleRecord {
  int32_t index = -1;
  uint64_t issue_cycle = 0;
  StallReason reason = StallReason::kNone;
};

struct CycleTrace {
  std::vector<CycleRecord> records;
  uint64_t total_cycles = 0;
};

// Incremental cost model: feed it each instruction's effect in program order
// and it returns the intrinsic cycle cost (contention excluded; the cluster
// layer adds arbitration losses on top).
class CoreTimer {
 public:
  explicit CoreTimer(const TimingConfig& cfg) : cfg_(cfg) {}

  struct Cost {
    uint32_t cycles = 1;
    StallReason primary = StallReason::kNone;
  };

  Cost on_instruction(const Instr& in, const EffectRecord& ef);
  void add_stall(StallReason r, uint64_t cycles) {
    stall_by_reason_[static_cast<size_t>(r)] += cycles;
  }

  const std::array<uint64_t, kStallReasonCount>& stall_by_reason() const {
    return stall_by_reason_;
  }
  uint64_t stall_cycles() const {
    uint64_t n = 0;
    for (auto v : stall_by_reason_) n += v;
    return n;
  }

 private:
  TimingConfig cfg_;
  int8_t prev_load_rd_ = -1;
  std::array<uint64_t, kStallReasonCount> stall_by_reason_{};
};

// Aggregated execution counters shared by reporting and energy accounting.
struct ExecStats {
  uint64_t cycles = 0;
  uint64_t retired = 0;
  uint64_t retired16 = 0;
  std::array<uint64_t, kMnemonicCount> retired_by_mn{};
  uint64_t loads = 0;
  uint64_t stores = 0;
  uint64_t sram_accesses = 0;
  uint64_t scm_accesses = 0;
  uint64_t unaligned_events = 0;
  std::array<uint64_t, kStallReasonCount> stall_by_reason{};
  bool halted_clean = false;
  bool nonterminating = false;
  std::string trap_message;

  uint64_t stall_cycles() const {
    uint64_t n = 0;
    for (auto v : stall_by_reason) n += v;
    return n;
  }
  double ipc() const {
    return cycles == 0 ? 0.0
                       : static_cast<double>(retired) / static_cast<double>(cycles);
  }
  double compressed_ratio() const {
    return retired == 0 ? 0.0
                        : static_cast<double>(retired16) /
                              static_cast<double>(retired);
  }
  void count_accesses(const EffectRecord& ef);
};

struct TimedResult {
  ExecStats stats;
  CycleTrace trace;  // filled only when requested
};

// Single-core timed run: executes to halt/trap or the instruction budget.
TimedResult run_timed(const Program& prog, CoreState& core, MemorySystem& mem,
                      const TimingConfig& cfg, uint64_t max_instrs = 100'000'000,
                      bool want_trace = false);

}  // namespace rvdsp
