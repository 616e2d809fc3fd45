#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvdsp/assembler.hpp"
#include "rvdsp/isa.hpp"

namespace rvdsp {

// Shared memory: byte-addressable TCDM mapped at [0, size), word-interleaved
// across `banks` (bank = word_addr mod banks). An optional SCM interval marks
// the low-energy region. A magic barrier cell outside the TCDM provides the
// cluster join primitive: stores arrive, loads read the arrival count.
struct MemorySystem {
  static constexpr uint32_t kDefaultSize = 72 * 1024;
  static constexpr uint32_t kBarrierAddr = 0x7FFF0000;

  std::vector<uint8_t> bytes;
  uint32_t banks = 8;
  std::optional<std::pair<uint32_t, uint32_t>> scm_range;  // [lo, hi)
  uint32_t barrier_arrivals = 0;

  explicit MemorySystem(uint32_t size = kDefaultSize, uint32_t nbanks = 8)
      : bytes(size, 0), banks(nbanks) {
    if (nbanks == 0 || size % (4 * nbanks) != 0)
      throw std::invalid_argument("TCDM size must be a multiple of 4 x banks");
  }

  uint32_t size() const { return static_cast<uint32_t>(bytes.size()); }
  bool in_range(uint32_t addr, uint32_t width) const {
    return addr < size() && width <= size() - addr;
  }
  uint32_t bank_of(uint32_t addr) const { return (addr / 4) % banks; }
  bool is_scm(uint32_t addr) const {
    return scm_range && addr >= scm_range->first && addr < scm_range->second;
  }

  uint8_t load8(uint32_t a) const { return bytes[a]; }
  uint16_t load16(uint32_t a) const {
    return static_cast<uint16_t>(bytes[a] | bytes[a + 1] << 8);
  }
  uint32_t load32(uint32_t a) const {
    return static_cast<uint32_t>(bytes[a] | bytes[a + 1] << 8 |
                                 bytes[a + 2] << 16 | bytes[a + 3] << 24);
  }
  void store8(uint32_t a, uint8_t v) { bytes[a] = v; }
  void store16(uint32_t a, uint16_t v) {
    bytes[a] = static_cast<uint8_t>(v);
    bytes[a + 1] = static_cast<uint8_t>(v >> 8);
  }
  void store32(uint32_t a, uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes[a + i] = static_cast<uint8_t>(v >> 8 * i);
  }
};

struct HwLoop {
  uint32_t start = 0;
  uint32_t end = 0;
  uint32_t count = 0;
  bool active() const { return count > 0; }
};

struct Trap {
  uint32_t pc = 0;
  std::string message;
};

struct CoreState {
  std::array<uint32_t, 32> regs{};
  uint32_t pc = 0;
  std::array<HwLoop, 2> hwloops{};
  bool halted = false;
  std::optional<Trap> trap;

  uint64_t retired = 0;
  uint64_t retired16 = 0;
  std::array<uint64_t, kMnemonicCount> retired_by_mn{};

  uint32_t reg(int i) const { return regs[static_cast<size_t>(i)]; }
  void set_reg(int i, uint32_t v) {
    if (i != 0) regs[static_cast<size_t>(i)] = v;  // x0 writes are discarded
  }
  void reset(uint32_t entry_pc) {
    regs.fill(0);
    pc = entry_pc;
    hwloops = {};
    halted = false;
    trap.reset();
    retired = retired16 = 0;
    retired_by_mn.fill(0);
  }
  uint64_t retired_class(InstrClass c) const {
    uint64_t n = 0;
    for (int i = 0; i < kMnemonicCount; ++i)
      if (class_of(static_cast<Mnemonic>(i)) == c)
        n += retired_by_mn[static_cast<size_t>(i)];
    return n;
  }
};

// One TCDM word request produced by a memory instruction. Unaligned accesses
// that cross a word boundary produce two, high word first.
struct MemAccess {
  uint32_t word_addr = 0;
  uint32_t bank = 0;
  bool is_store = false;
  bool scm = false;
};

// What one architectural step did; consumed by the timing model.
struct EffectRecord {
  int32_t index = -1;
  Mnemonic mn = Mnemonic::kNop;
  uint8_t size = 4;
  uint32_t pc = 0;
  uint32_t next_pc = 0;
  std::array<MemAccess, 2> accesses{};
  int n_accesses = 0;
  bool unaligned = false;       // crossed a word boundary
  bool taken_branch = false;    // taken conditional branch or any jump
  bool hwloop_backjump = false;
  bool barrier_arrive = false;
  int8_t load_rd = -1;           // destination of a load, for hazard tracking
  uint32_t div_quotient_bits = 0;  // significant quotient bits of a division
  bool trapped = false;
  bool halted = false;
};

// Lane helpers shared by the packed-SIMD semantics.
int lane_count(LaneWidth w);
uint32_t get_lane(uint32_t word, int i, LaneWidth w);
uint32_t set_lane(uint32_t word, int i, LaneWidth w, uint32_t v);
int32_t sext_lane(uint32_t lane, LaneWidth w);
uint32_t replicate_lane(uint32_t scalar, LaneWidth w);

// Per-lane ALU op; for .sc/.sci the caller replicates b beforehand.
uint32_t exec_vector_alu(Mnemonic op, uint32_t a, uint32_t b, LaneWidth w);

// acc + sum of per-lane products, modular 32 bit.
uint32_t exec_dotp(LaneWidth w, Signedness sign, uint32_t a, uint32_t b,
                   uint32_t acc);

// Mask lanes select source (bit above the index bits; 1 = a) and lane index.
// single_source forces every lane to read from a.
uint32_t exec_shuffle(uint32_t a, uint32_t b, uint32_t mask, LaneWidth w,
                      bool single_source = false);

// addRN/addRNu/subRN/clip/clipu/mulsRN/muluRN/mac/msu; acc is the old rd for
// mac/msu and ignored otherwise.
uint32_t exec_fixpoint(Mnemonic op, uint32_t a, uint32_t b, uint32_t acc,
                       unsigned shift_i);

uint32_t exec_bitmanip(Mnemonic op, uint32_t a, unsigned len, unsigned off);

uint32_t exec_div(Mnemonic op, uint32_t a, uint32_t b);

// Operand-dependent latency of the iterative divider, in [2, 32].
uint32_t div_latency(Mnemonic op, uint32_t a, uint32_t b);

// Executes exactly one instruction, mutating core + mem. Invalid fetch or
// data addresses trap (core halts with a diagnostic); running past the last
// instruction halts cleanly.
EffectRecord step(CoreState& core, MemorySystem& mem, const Program& prog);

// Runs until halt/trap or the instruction budget is exhausted (returns false
// on budget exhaustion). Timing-free reference execution.
bool run_untimed(CoreState& core, MemorySystem& mem, const Program& prog,
                 uint64_t max_instrs = 100'000'000);

}  // namespace rvdsp
