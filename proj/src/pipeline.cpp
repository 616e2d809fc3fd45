#include "rvdsp/pipeline.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rvdsp {

TimingConfig TimingConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open timing config: " + path);
  TimingConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ls(line);
    std::string key, eq;
    uint64_t value = 0;
    if (!(ls >> key)) continue;
    if (!(ls >> eq >> value) || eq != "=")
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
    const uint32_t v = static_cast<uint32_t>(value);
    if (key == "taken_branch_penalty")
      cfg.taken_branch_penalty = v;
    else if (key == "load_use_penalty")
      cfg.load_use_penalty = v;
    else if (key == "unaligned_mem_extra")
      cfg.unaligned_mem_extra = v;
    else if (key == "hwloop_backjump_penalty")
      cfg.hwloop_backjump_penalty = v;
    else if (key == "line_bits")
      cfg.line_bits = v;
    else if (key == "line_refill_penalty")
      cfg.line_refill_penalty = v;
    else if (key == "div_base_latency")
      cfg.div_base_latency = v;
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown timing key '" + key + "'");
  }
  return cfg;
}

std::string_view stall_reason_name(StallReason r) {
  switch (r) {
    case StallReason::kNone:
      return "none";
    case StallReason::kLoadUse:
      return "load_use";
    case StallReason::kBranch:
      return "branch";
    case StallReason::kFetch:
      return "fetch";
    case StallReason::kMemUnaligned:
      return "mem_unaligned";
    case StallReason::kDiv:
      return "div";
    case StallReason::kContention:
      return "contention";
    default:
      return "?";
  }
}

CoreTimer::Cost CoreTimer::on_instruction(const Instr& in,
                                          const EffectRecord& ef) {
  Cost c;
  const uint32_t line_mask = ~(cfg_.line_bytes() - 1);
  auto charge = [&](StallReason r, uint32_t cycles) {
    if (cycles == 0) return;
    c.cycles += cycles;
    stall_by_reason_[static_cast<size_t>(r)] += cycles;
    if (c.primary == StallReason::kNone) c.primary = r;
  };

  // True load-use dependence on the immediately preceding load.
  if (prev_load_rd_ > 0 && regs_read(in).contains(prev_load_rd_))
    charge(StallReason::kLoadUse, cfg_.load_use_penalty);

  if (ef.unaligned) charge(StallReason::kMemUnaligned, cfg_.unaligned_mem_extra);

  if (ef.div_quotient_bits || class_of(in.mn) == InstrClass::kDiv)
    charge(StallReason::kDiv, cfg_.div_latency(ef.div_quotient_bits) - 1);

  if (ef.taken_branch) charge(StallReason::kBranch, cfg_.taken_branch_penalty);
  if (ef.hwloop_backjump)
    charge(StallReason::kBranch, cfg_.hwloop_backjump_penalty);

  // Prefetch-line refill on redirects that leave the current line;
  // sequential crossing is free.
  if ((ef.taken_branch || ef.hwloop_backjump) &&
      (ef.next_pc & line_mask) != (ef.pc & line_mask))
    charge(StallReason::kFetch, cfg_.line_refill_penalty);

  prev_load_rd_ = ef.load_rd;
  return c;
}

void ExecStats::count_accesses(const EffectRecord& ef) {
  for (int i = 0; i < ef.n_accesses; ++i) {
    const MemAccess& a = ef.accesses[static_cast<size_t>(i)];
    if (a.scm)
      ++scm_accesses;
    else
      ++sram_accesses;
  }
  if (ef.unaligned) ++unaligned_events;
  if (ef.load_rd >= 0 || (ef.n_accesses > 0 && !ef.accesses[0].is_store))
    ++loads;
  else if (ef.n_accesses > 0)
    ++stores;
}

TimedResult run_timed(const Program& prog, CoreState& core, MemorySystem& mem,
                      const TimingConfig& cfg, uint64_t max_instrs,
                      bool want_trace) {
  TimedResult r;
  CoreTimer timer(cfg);
  uint64_t cycle = 0;
  uint64_t executed = 0;
  while (!core.halted) {
    if (executed >= max_instrs) {
      r.stats.nonterminating = true;
      break;
    }
    const EffectRecord ef = step(core, mem, prog);
    if (ef.halted) break;
    ++executed;
    const Instr& in = prog.instrs[static_cast<size_t>(ef.index)];
    const CoreTimer::Cost cost = timer.on_instruction(in, ef);
    if (want_trace)
      r.trace.records.push_back(CycleRecord{ef.index, cycle, cost.primary});
    cycle += cost.cycles;
    r.stats.count_accesses(ef);
  }
  r.stats.cycles = cycle;
  r.trace.total_cycles = cycle;
  r.stats.retired = core.retired;
  r.stats.retired16 = core.retired16;
  r.stats.retired_by_mn = core.retired_by_mn;
  r.stats.stall_by_reason = timer.stall_by_reason();
  r.stats.halted_clean = core.halted && !core.trap;
  if (core.trap) r.stats.trap_message = core.trap->message;
  return r;
}

}  // namespace rvdsp
