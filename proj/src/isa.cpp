#include "rvdsp/isa.hpp"

namespace rvdsp {

namespace {

constexpr InstrClass kClassTable[kMnemonicCount] = {
#define RVDSP_CLASS(name, text, cls) InstrClass::cls,
    RVDSP_MNEMONICS(RVDSP_CLASS)
#undef RVDSP_CLASS
};

constexpr std::string_view kTextTable[kMnemonicCount] = {
#define RVDSP_TEXT(name, text, cls) text,
    RVDSP_MNEMONICS(RVDSP_TEXT)
#undef RVDSP_TEXT
};

bool in_compressed_reg_range(int8_t r) { return r >= 8 && r <= 15; }

bool fits_imm6(int32_t v) { return v >= -32 && v <= 31; }

}  // namespace

InstrClass class_of(Mnemonic mn) { return kClassTable[static_cast<int>(mn)]; }

std::string_view mnemonic_text(Mnemonic mn) {
  return kTextTable[static_cast<int>(mn)];
}

std::string mnemonic_spelling(const Instr& in) {
  std::string s(mnemonic_text(in.mn));
  const bool is_dotp = in.mn == Mnemonic::kPvDotp || in.mn == Mnemonic::kPvSdotp;
  const bool is_vec_alu = in.mn >= Mnemonic::kPvAdd && in.mn <= Mnemonic::kPvCmpgt;
  const bool is_subword = in.mn >= Mnemonic::kPvShuffle && in.mn <= Mnemonic::kPvPack;
  if (is_vec_alu || is_dotp) {
    if (in.vmode == VecMode::kScalarReg) s += ".sc";
    if (in.vmode == VecMode::kScalarImm) s += ".sci";
  }
  if (is_dotp) {
    s += in.sign == Signedness::kSigned ? ".s" : ".u";
    s += in.lane == LaneWidth::kByte ? "b" : "h";
  } else if (is_vec_alu || is_subword) {
    s += in.lane == LaneWidth::kByte ? ".b" : ".h";
  }
  return s;
}

bool is_load(Mnemonic mn) { return class_of(mn) == InstrClass::kLoad; }
bool is_store(Mnemonic mn) { return class_of(mn) == InstrClass::kStore; }

bool is_branch_or_jump(Mnemonic mn) {
  const InstrClass c = class_of(mn);
  return c == InstrClass::kBranch || c == InstrClass::kJump;
}

bool is_post_increment_mem(Mnemonic mn) {
  return mn >= Mnemonic::kPLw && mn <= Mnemonic::kPSb;
}

int mem_width(Mnemonic mn) {
  switch (mn) {
    case Mnemonic::kLw:
    case Mnemonic::kSw:
    case Mnemonic::kPLw:
    case Mnemonic::kPSw:
      return 4;
    case Mnemonic::kLh:
    case Mnemonic::kLhu:
    case Mnemonic::kSh:
    case Mnemonic::kPLh:
    case Mnemonic::kPLhu:
    case Mnemonic::kPSh:
      return 2;
    case Mnemonic::kLb:
    case Mnemonic::kLbu:
    case Mnemonic::kSb:
    case Mnemonic::kPLb:
    case Mnemonic::kPLbu:
    case Mnemonic::kPSb:
      return 1;
    default:
      return 0;
  }
}

// Compressed-form constraint table (see docs/assembly.md). The shape follows
// the standard C extension: 3-bit register fields except for mv/add, 6-bit
// signed immediates, scaled 5-bit unsigned offsets for lw/sw. Branch and
// jump target ranges are not checked since code addresses are assigned after
// size selection.
bool is_compressible(const Instr& in) {
  switch (in.mn) {
    case Mnemonic::kNop:
      return true;
    case Mnemonic::kMv:
      return in.rs1 != 0;  // c.mv requires a nonzero source
    case Mnemonic::kAdd:
      return in.rd == in.rs1 && in.rs2 != 0;
    case Mnemonic::kSub:
    case Mnemonic::kAnd:
    case Mnemonic::kOr:
    case Mnemonic::kXor:
    case Mnemonic::kSll:
    case Mnemonic::kSrl:
    case Mnemonic::kSra:
    case Mnemonic::kSlt:
      return in.rd == in.rs1 && in_compressed_reg_range(in.rd) &&
             in_compressed_reg_range(in.rs2);
    case Mnemonic::kAddi:
    case Mnemonic::kAndi:
    case Mnemonic::kSlti:
      return in.rd == in.rs1 && in_compressed_reg_range(in.rd) &&
             fits_imm6(in.imm);
    case Mnemonic::kSlli:
    case Mnemonic::kSrli:
    case Mnemonic::kSrai:
      return in.rd == in.rs1 && in_compressed_reg_range(in.rd);
    case Mnemonic::kLui:
      return in_compressed_reg_range(in.rd) && fits_imm6(in.imm) && in.imm != 0;
    case Mnemonic::kLw:
    case Mnemonic::kSw:
      return in_compressed_reg_range(in.rs1) &&
             in_compressed_reg_range(in.mn == Mnemonic::kLw ? in.rd : in.rs2) &&
             in.imm >= 0 && in.imm <= 124 && in.imm % 4 == 0;
    case Mnemonic::kBeq:
    case Mnemonic::kBne:
      return in_compressed_reg_range(in.rs1) && in.rs2 == 0;
    case Mnemonic::kJal:
      return in.rd == 0 || in.rd == 1;
    case Mnemonic::kJ:
      return true;
    default:
      return false;  // extended mnemonics have no compressed form
  }
}

RegList regs_read(const Instr& in) {
  RegList rl;
  switch (in.mn) {
    // rd is an accumulator / merge input for these.
    case Mnemonic::kPMac:
    case Mnemonic::kPMsu:
    case Mnemonic::kPvSdotp:
    case Mnemonic::kPvShuffle2:
    case Mnemonic::kPvInsert:
    case Mnemonic::kPInsert:
      rl.add(in.rd);
      rl.add(in.rs1);
      if (in.vmode != VecMode::kScalarImm) rl.add(in.rs2);
      return rl;
    default:
      break;
  }
  if (is_store(in.mn)) {
    rl.add(in.rs2);  // store data
    rl.add(in.rs1);  // base
    rl.add(in.rs3);  // register offset, when present
    return rl;
  }
  if (is_load(in.mn)) {
    rl.add(in.rs1);
    rl.add(in.rs3);
    return rl;
  }
  rl.add(in.rs1);
  if (in.vmode != VecMode::kScalarImm) rl.add(in.rs2);
  return rl;
}

RegList regs_written(const Instr& in) {
  RegList rl;
  if (is_store(in.mn)) {
    if (in.amode == AddrMode::kPostImm || in.amode == AddrMode::kPostReg)
      rl.add(in.rs1);
    return rl;
  }
  if (is_load(in.mn)) {
    rl.add(in.rd);
    if (in.amode == AddrMode::kPostImm || in.amode == AddrMode::kPostReg)
      rl.add(in.rs1);
    return rl;
  }
  if (class_of(in.mn) == InstrClass::kBranch ||
      class_of(in.mn) == InstrClass::kHwloopSetup ||
      in.mn == Mnemonic::kNop || in.mn == Mnemonic::kJ)
    return rl;
  rl.add(in.rd);
  return rl;
}

}  // namespace rvdsp
