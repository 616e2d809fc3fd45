#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "rvdsp/assembler.hpp"
#include "rvdsp/exec.hpp"
#include "rvdsp/pipeline.hpp"

namespace testutil {

inline rvdsp::Program assemble(const std::string& text) {
  rvdsp::AsmResult res = rvdsp::parse(text);
  for (const auto& e : res.errors)
    MESSAGE("line ", e.line, ": ", e.message);
  REQUIRE(res.ok());
  return std::move(res.program);
}

struct Run {
  rvdsp::CoreState core;
  rvdsp::MemorySystem mem;
  rvdsp::Program prog;
};

// Assembles and runs to completion with no timing.
inline Run run_program(const std::string& text,
                       const std::vector<std::pair<int, uint32_t>>& regs = {},
                       uint64_t budget = 1'000'000) {
  Run r;
  r.prog = assemble(text);
  for (const auto& [addr, byte] : r.prog.data) r.mem.bytes[addr] = byte;
  r.core.reset(r.prog.addr_of(r.prog.entry));
  for (const auto& [idx, v] : regs) r.core.set_reg(idx, v);
  REQUIRE(rvdsp::run_untimed(r.core, r.mem, r.prog, budget));
  return r;
}

// Assembles and runs with the timing model, default config.
inline std::pair<Run, rvdsp::TimedResult> run_timed_program(
    const std::string& text,
    const std::vector<std::pair<int, uint32_t>>& regs = {},
    rvdsp::TimingConfig cfg = {}) {
  Run r;
  r.prog = assemble(text);
  for (const auto& [addr, byte] : r.prog.data) r.mem.bytes[addr] = byte;
  r.core.reset(r.prog.addr_of(r.prog.entry));
  for (const auto& [idx, v] : regs) r.core.set_reg(idx, v);
  rvdsp::TimedResult t = rvdsp::run_timed(r.prog, r.core, r.mem, cfg);
  return {std::move(r), std::move(t)};
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240811);
  return gen;
}

inline uint32_t rand_u32() { return static_cast<uint32_t>(rng()()); }

}  // namespace testutil
