#include "rvdsp/cluster.hpp"

#include <stdexcept>

namespace rvdsp {

std::vector<bool> BankArbiter::arbitrate(const std::vector<Request>& requests) {
  std::vector<bool> granted(requests.size(), false);
  // Grant the requesting core at or first after the round-robin pointer.
  constexpr uint32_t kWheel = 64;  // > any core index
  for (uint32_t bank = 0; bank < next_.size(); ++bank) {
    int winner = -1;
    uint32_t best_rank = UINT32_MAX;
    const uint32_t ptr = next_[bank] % kWheel;
    for (size_t i = 0; i < requests.size(); ++i) {
      if (requests[i].bank != bank) continue;
      const uint32_t rank = (requests[i].core + kWheel - ptr) % kWheel;
      if (rank < best_rank) {
        best_rank = rank;
        winner = static_cast<int>(i);
      }
    }
    if (winner >= 0) {
      granted[static_cast<size_t>(winner)] = true;
      next_[bank] = (requests[static_cast<size_t>(winner)].core + 1) % kWheel;
    }
  }
  return granted;
}

namespace {

// Per-core state machine inside the lockstep loop. An instruction issues by
// executing architecturally, then burns `pre_cycles` (intrinsic cost minus
// its bank accesses) and finally wins one arbitration round per access.
struct CoreRun {
  CoreState core;
  CoreTimer timer;
  const Program* prog = nullptr;

  uint32_t pre_cycles = 0;
  int accesses_left = 0;
  std::array<MemAccess, 2> accesses{};
  int access_pos = 0;
  bool access_lost_once = false;
  bool in_flight = false;
  bool at_barrier = false;
  bool done = false;

  ExecStats stats;
  ContentionStats contention;

  explicit CoreRun(const TimingConfig& cfg) : timer(cfg) {}
};

}  // namespace

ClusterResult run_cluster(const std::vector<Program>& programs,
                          MemorySystem& mem, const ClusterConfig& cluster_cfg,
                          const TimingConfig& timing_cfg) {
  const uint32_t n = cluster_cfg.cores;
  if (programs.size() != n)
    throw std::runtime_error("run_cluster: one program per core required");
  mem.banks = cluster_cfg.banks;
  mem.barrier_arrivals = 0;

  std::vector<CoreRun> runs;
  runs.reserve(n);
  for (uint32_t i = 0; i < n; ++i) {
    runs.emplace_back(timing_cfg);
    runs.back().prog = &programs[i];
    runs.back().core.reset(programs[i].addr_of(programs[i].entry));
  }

  BankArbiter arbiter(cluster_cfg.banks);
  uint64_t cycle = 0;
  std::vector<uint64_t> finish_cycle(n, 0);
  bool deadlock = false;

  auto all_done = [&] {
    for (const auto& r : runs)
      if (!r.done) return false;
    return true;
  };

  while (!all_done()) {
    if (cycle >= cluster_cfg.max_cycles) {
      deadlock = true;
      for (auto& r : runs)
        if (!r.done) r.stats.nonterminating = true;
      break;
    }

    // Barrier release: every core arrived or halted.
    uint32_t halted_cores = 0;
    for (const auto& r : runs)
      if (r.done) ++halted_cores;
    if (mem.barrier_arrivals > 0 &&
        mem.barrier_arrivals + halted_cores >= n) {
      mem.barrier_arrivals = 0;
      for (auto& r : runs) r.at_barrier = false;
    }

    // Issue new instructions on cores with nothing in flight.
    for (uint32_t i = 0; i < n; ++i) {
      CoreRun& r = runs[i];
      if (r.done || r.at_barrier || r.in_flight) continue;
      const EffectRecord ef = step(r.core, mem, *r.prog);
      if (ef.halted) {
        r.done = true;
        finish_cycle[i] = cycle;
        continue;
      }
      const Instr& in = r.prog->instrs[static_cast<size_t>(ef.index)];
      const CoreTimer::Cost cost = r.timer.on_instruction(in, ef);
      r.stats.count_accesses(ef);
      r.in_flight = true;
      r.accesses = ef.accesses;
      r.accesses_left = ef.n_accesses;
      r.access_pos = 0;
      r.access_lost_once = false;
      const uint32_t acc = static_cast<uint32_t>(ef.n_accesses);
      r.pre_cycles = cost.cycles > acc ? cost.cycles - acc : 0;
      if (ef.barrier_arrive) r.at_barrier = true;
    }

    // Collect this cycle's bank requests.
    std::vector<BankArbiter::Request> requests;
    std::vector<uint32_t> req_core;
    for (uint32_t i = 0; i < n; ++i) {
      CoreRun& r = runs[i];
      if (r.done || !r.in_flight || r.pre_cycles > 0 || r.accesses_left == 0)
        continue;
      requests.push_back(BankArbiter::Request{
          i, r.accesses[static_cast<size_t>(r.access_pos)].bank});
      req_core.push_back(i);
    }
    const std::vector<bool> grants = arbiter.arbitrate(requests);

    // Advance every core by one cycle.
    for (size_t q = 0; q < requests.size(); ++q) {
      CoreRun& r = runs[req_core[q]];
      if (grants[q]) {
        r.contention.total_accesses += 1;
        if (r.access_lost_once) r.contention.contended_accesses += 1;
        r.access_lost_once = false;
        r.access_pos += 1;
        r.accesses_left -= 1;
      } else {
        r.contention.stall_cycles += 1;
        r.timer.add_stall(StallReason::kContention, 1);
        r.access_lost_once = true;
      }
    }
    for (uint32_t i = 0; i < n; ++i) {
      CoreRun& r = runs[i];
      if (r.done || !r.in_flight) continue;
      if (r.pre_cycles > 0) {
        r.pre_cycles -= 1;
        if (r.pre_cycles == 0 && r.accesses_left == 0) r.in_flight = false;
      } else if (r.accesses_left == 0) {
        r.in_flight = false;
      }
      if (!r.in_flight) finish_cycle[i] = cycle + 1;
    }

    ++cycle;
  }

  ClusterResult result;
  result.deadlock = deadlock;
  uint64_t max_cycles = 0;
  for (uint32_t i = 0; i < n; ++i) {
    CoreRun& r = runs[i];
    const uint64_t core_cycles = r.done ? finish_cycle[i] : cycle;
    r.stats.cycles = core_cycles;
    r.stats.retired = r.core.retired;
    r.stats.retired16 = r.core.retired16;
    r.stats.retired_by_mn = r.core.retired_by_mn;
    r.stats.stall_by_reason = r.timer.stall_by_reason();
    r.stats.halted_clean = r.core.halted && !r.core.trap && !deadlock;
    if (r.core.trap) r.stats.trap_message = r.core.trap->message;
    max_cycles = core_cycles > max_cycles ? core_cycles : max_cycles;
    result.cores.push_back(ClusterCoreResult{std::move(r.stats),
                                             r.contention, std::move(r.core)});
  }
  result.cycles = max_cycles;
  return result;
}

}  // namespace rvdsp
