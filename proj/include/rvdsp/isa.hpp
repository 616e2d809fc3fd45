#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

// Instruction vocabulary for a 32-bit RISC core with DSP extensions:
// hardware loops, post-increment memory ops, packed-SIMD, dot products,
// fixed-point round/normalize/clip and bit manipulation. Instructions are
// kept in decoded form only; `size` (2 or 4 bytes) is a static attribute
// used by fetch modeling and code-size statistics, never a bit pattern.

namespace rvdsp {

// (enum, assembly text, class)
// Vector/dot-product entries are families: lane width, scalar mode and
// signedness suffixes live in Instr fields and are appended when printing.
#define RVDSP_MNEMONICS(X)                                                     \
  /* base integer */                                                           \
  X(kAdd, "add", kAlu)                                                         \
  X(kAddi, "addi", kAlu)                                                       \
  X(kSub, "sub", kAlu)                                                         \
  X(kAnd, "and", kAlu)                                                         \
  X(kAndi, "andi", kAlu)                                                       \
  X(kOr, "or", kAlu)                                                           \
  X(kOri, "ori", kAlu)                                                         \
  X(kXor, "xor", kAlu)                                                         \
  X(kXori, "xori", kAlu)                                                       \
  X(kSll, "sll", kAlu)                                                         \
  X(kSlli, "slli", kAlu)                                                       \
  X(kSrl, "srl", kAlu)                                                         \
  X(kSrli, "srli", kAlu)                                                       \
  X(kSra, "sra", kAlu)                                                         \
  X(kSrai, "srai", kAlu)                                                       \
  X(kSlt, "slt", kAlu)                                                         \
  X(kSlti, "slti", kAlu)                                                       \
  X(kLui, "lui", kAlu)                                                         \
  X(kAuipc, "auipc", kAlu)                                                     \
  X(kMv, "mv", kAlu)                                                           \
  X(kNop, "nop", kNopClass)                                                    \
  X(kBeq, "beq", kBranch)                                                      \
  X(kBne, "bne", kBranch)                                                      \
  X(kBlt, "blt", kBranch)                                                      \
  X(kBge, "bge", kBranch)                                                      \
  X(kJal, "jal", kJump)                                                        \
  X(kJ, "j", kJump)                                                            \
  X(kJalr, "jalr", kJump)                                                      \
  X(kLw, "lw", kLoad)                                                          \
  X(kLh, "lh", kLoad)                                                          \
  X(kLhu, "lhu", kLoad)                                                        \
  X(kLb, "lb", kLoad)                                                          \
  X(kLbu, "lbu", kLoad)                                                        \
  X(kSw, "sw", kStore)                                                         \
  X(kSh, "sh", kStore)                                                         \
  X(kSb, "sb", kStore)                                                         \
  X(kMul, "mul", kMul)                                                         \
  X(kMulh, "mulh", kMul)                                                       \
  X(kDiv, "div", kDiv)                                                         \
  X(kDivu, "divu", kDiv)                                                       \
  X(kRem, "rem", kDiv)                                                         \
  X(kRemu, "remu", kDiv)                                                       \
  /* hardware loops */                                                         \
  X(kLpSetup, "lp.setup", kHwloopSetup)                                        \
  X(kLpSetupi, "lp.setupi", kHwloopSetup)                                      \
  X(kLpStart, "lp.start", kHwloopSetup)                                        \
  X(kLpEnd, "lp.end", kHwloopSetup)                                            \
  X(kLpCount, "lp.count", kHwloopSetup)                                        \
  X(kLpCounti, "lp.counti", kHwloopSetup)                                      \
  /* post-increment / register-offset memory ops */                           \
  X(kPLw, "p.lw", kLoad)                                                       \
  X(kPLh, "p.lh", kLoad)                                                       \
  X(kPLhu, "p.lhu", kLoad)                                                     \
  X(kPLb, "p.lb", kLoad)                                                       \
  X(kPLbu, "p.lbu", kLoad)                                                     \
  X(kPSw, "p.sw", kStore)                                                      \
  X(kPSh, "p.sh", kStore)                                                      \
  X(kPSb, "p.sb", kStore)                                                      \
  /* fixed point */                                                            \
  X(kPAddRN, "p.addRN", kAlu)                                                  \
  X(kPAddRNu, "p.addRNu", kAlu)                                                \
  X(kPSubRN, "p.subRN", kAlu)                                                  \
  X(kPClip, "p.clip", kAlu)                                                    \
  X(kPClipu, "p.clipu", kAlu)                                                  \
  X(kPMulsRN, "p.mulsRN", kMul)                                                \
  X(kPMuluRN, "p.muluRN", kMul)                                                \
  X(kPMac, "p.mac", kMac)                                                      \
  X(kPMsu, "p.msu", kMac)                                                      \
  /* packed-SIMD ALU */                                                        \
  X(kPvAdd, "pv.add", kAlu)                                                    \
  X(kPvSub, "pv.sub", kAlu)                                                    \
  X(kPvAvg, "pv.avg", kAlu)                                                    \
  X(kPvMin, "pv.min", kAlu)                                                    \
  X(kPvMax, "pv.max", kAlu)                                                    \
  X(kPvSrl, "pv.srl", kAlu)                                                    \
  X(kPvSra, "pv.sra", kAlu)                                                    \
  X(kPvSll, "pv.sll", kAlu)                                                    \
  X(kPvAnd, "pv.and", kAlu)                                                    \
  X(kPvOr, "pv.or", kAlu)                                                      \
  X(kPvXor, "pv.xor", kAlu)                                                    \
  X(kPvCmpeq, "pv.cmpeq", kAlu)                                                \
  X(kPvCmpgt, "pv.cmpgt", kAlu)                                                \
  /* sub-word data manipulation */                                             \
  X(kPvShuffle, "pv.shuffle", kShuffle)                                        \
  X(kPvShuffle2, "pv.shuffle2", kShuffle)                                      \
  X(kPvInsert, "pv.insert", kShuffle)                                          \
  X(kPvExtract, "pv.extract", kShuffle)                                        \
  X(kPvExtractu, "pv.extractu", kShuffle)                                      \
  X(kPvPack, "pv.pack", kShuffle)                                              \
  /* dot products */                                                           \
  X(kPvDotp, "pv.dotp", kDotp)                                                 \
  X(kPvSdotp, "pv.sdotp", kDotp)                                               \
  /* bit manipulation */                                                       \
  X(kPExtract, "p.extract", kAlu)                                              \
  X(kPExtractu, "p.extractu", kAlu)                                            \
  X(kPInsert, "p.insert", kAlu)                                                \
  X(kPBclr, "p.bclr", kAlu)                                                    \
  X(kPBset, "p.bset", kAlu)                                                    \
  X(kPCnt, "p.cnt", kAlu)                                                      \
  X(kPFf1, "p.ff1", kAlu)                                                      \
  X(kPFl1, "p.fl1", kAlu)                                                      \
  X(kPClb, "p.clb", kAlu)

enum class Mnemonic : uint8_t {
#define RVDSP_ENUM(name, text, cls) name,
  RVDSP_MNEMONICS(RVDSP_ENUM)
#undef RVDSP_ENUM
      kCount
};

constexpr int kMnemonicCount = static_cast<int>(Mnemonic::kCount);

enum class InstrClass : uint8_t {
  kAlu,
  kMul,
  kMac,
  kDotp,
  kShuffle,
  kLoad,
  kStore,
  kBranch,
  kJump,
  kDiv,
  kHwloopSetup,
  kCsr,
  kNopClass,
  kCount
};

constexpr int kClassCount = static_cast<int>(InstrClass::kCount);

// Lane geometry of packed operations: four 8b lanes or two 16b lanes.
enum class LaneWidth : uint8_t { kNone, kByte, kHalf };

// Second-operand addressing for packed ops: register vector, scalar
// replicated from a register (.sc), or scalar immediate (.sci).
enum class VecMode : uint8_t { kVector, kScalarReg, kScalarImm };

enum class Signedness : uint8_t { kSigned, kUnsigned };

// Memory addressing: base+imm (plain), post-increment by imm or register,
// or base+register without update.
enum class AddrMode : uint8_t { kOffset, kPostImm, kPostReg, kRegOffset };

enum class LoopSet : uint8_t { kNone, kL0, kL1 };

// One decoded instruction. Absent register operands are -1. `target` is a
// resolved instruction index for branch/jump/loop-end operands and -1
// otherwise; `label` keeps the textual name for printing.
struct Instr {
  Mnemonic mn = Mnemonic::kNop;
  int8_t rd = -1;
  int8_t rs1 = -1;
  int8_t rs2 = -1;
  int8_t rs3 = -1;  // register offset of reg-offset/reg-post-inc memory ops
  int32_t imm = 0;
  uint8_t shift_i = 0;  // round/normalize/clip amount I
  uint8_t len = 0;      // bit-field length (bit manipulation)
  uint8_t off = 0;      // bit-field offset
  LaneWidth lane = LaneWidth::kNone;
  VecMode vmode = VecMode::kVector;
  Signedness sign = Signedness::kSigned;
  AddrMode amode = AddrMode::kOffset;
  LoopSet loop = LoopSet::kNone;
  uint8_t size = 4;     // bytes: 4, or 2 when compressed
  int32_t target = -1;  // resolved instruction index
  std::string label;    // textual target, kept for round-trip printing

  bool operator==(const Instr&) const = default;
};

InstrClass class_of(Mnemonic mn);
std::string_view mnemonic_text(Mnemonic mn);

// Full canonical spelling including lane/mode suffixes, e.g. "pv.add.sc.b",
// "pv.sdotp.sh".
std::string mnemonic_spelling(const Instr& in);

bool is_load(Mnemonic mn);
bool is_store(Mnemonic mn);
bool is_branch_or_jump(Mnemonic mn);
bool is_post_increment_mem(Mnemonic mn);

// Access width in bytes for memory mnemonics, 0 otherwise.
int mem_width(Mnemonic mn);

// True when the instruction fits the 16b compressed form. The constraint
// table (subset of base mnemonics, 3-bit register fields, small immediates)
// is documented in docs/assembly.md. Extended mnemonics never compress.
bool is_compressible(const Instr& in);

// Registers read / written by an instruction (architectural, x0 included).
// Used by the assembler for arity checks and by the pipeline for hazards.
struct RegList {
  std::array<int8_t, 4> r{-1, -1, -1, -1};
  int n = 0;
  void add(int8_t reg) {
    if (reg >= 0) r[static_cast<size_t>(n++)] = reg;
  }
  bool contains(int8_t reg) const {
    for (int i = 0; i < n; ++i)
      if (r[static_cast<size_t>(i)] == reg) return true;
    return false;
  }
};

RegList regs_read(const Instr& in);
RegList regs_written(const Instr& in);

}  // namespace rvdsp
