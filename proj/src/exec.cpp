#include "rvdsp/exec.hpp"

#include <bit>

namespace rvdsp {

namespace {

int32_t s32(uint32_t v) { return static_cast<int32_t>(v); }
uint32_t u32(int64_t v) { return static_cast<uint32_t>(v); }
int32_t sext16(uint32_t v) { return static_cast<int16_t>(v & 0xFFFF); }

uint32_t field_mask(unsigned len) {
  return len >= 32 ? 0xFFFFFFFFu : (1u << len) - 1u;
}

}  // namespace

int lane_count(LaneWidth w) { return w == LaneWidth::kByte ? 4 : 2; }

uint32_t get_lane(uint32_t word, int i, LaneWidth w) {
  if (w == LaneWidth::kByte) return (word >> (8 * i)) & 0xFF;
  return (word >> (16 * i)) & 0xFFFF;
}

uint32_t set_lane(uint32_t word, int i, LaneWidth w, uint32_t v) {
  if (w == LaneWidth::kByte) {
    const uint32_t sh = static_cast<uint32_t>(8 * i);
    return (word & ~(0xFFu << sh)) | ((v & 0xFF) << sh);
  }
  const uint32_t sh = static_cast<uint32_t>(16 * i);
  return (word & ~(0xFFFFu << sh)) | ((v & 0xFFFF) << sh);
}

int32_t sext_lane(uint32_t lane, LaneWidth w) {
  if (w == LaneWidth::kByte) return static_cast<int8_t>(lane & 0xFF);
  return static_cast<int16_t>(lane & 0xFFFF);
}

uint32_t replicate_lane(uint32_t scalar, LaneWidth w) {
  if (w == LaneWidth::kByte) {
    const uint32_t b = scalar & 0xFF;
    return b | b << 8 | b << 16 | b << 24;
  }
  const uint32_t h = scalar & 0xFFFF;
  return h | h << 16;
}

uint32_t exec_vector_alu(Mnemonic op, uint32_t a, uint32_t b, LaneWidth w) {
  const int n = lane_count(w);
  const unsigned lane_bits = w == LaneWidth::kByte ? 8 : 16;
  uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    const uint32_t la = get_lane(a, i, w);
    const uint32_t lb = get_lane(b, i, w);
    const int32_t sa = sext_lane(la, w);
    const int32_t sb = sext_lane(lb, w);
    const unsigned shamt = lb & (lane_bits - 1);
    uint32_t r = 0;
    switch (op) {
      case Mnemonic::kPvAdd:
        r = la + lb;
        break;
      case Mnemonic::kPvSub:
        r = la - lb;
        break;
      case Mnemonic::kPvAvg:
        r = static_cast<uint32_t>((sa + sb) >> 1);
        break;
      case Mnemonic::kPvMin:
        r = static_cast<uint32_t>(sa < sb ? sa : sb);
        break;
      case Mnemonic::kPvMax:
        r = static_cast<uint32_t>(sa > sb ? sa : sb);
        break;
      case Mnemonic::kPvSrl:
        r = la >> shamt;
        break;
      case Mnemonic::kPvSra:
        r = static_cast<uint32_t>(sa >> shamt);
        break;
      case Mnemonic::kPvSll:
        r = la << shamt;
        break;
      case Mnemonic::kPvAnd:
        r = la & lb;
        break;
      case Mnemonic::kPvOr:
        r = la | lb;
        break;
      case Mnemonic::kPvXor:
        r = la ^ lb;
        break;
      case Mnemonic::kPvCmpeq:
        r = la == lb ? ~0u : 0u;
        break;
      case Mnemonic::kPvCmpgt:
        r = sa > sb ? ~0u : 0u;
        break;
      default:
        r = 0;
        break;
    }
    out = set_lane(out, i, w, r);
  }
  return out;
}

uint32_t exec_dotp(LaneWidth w, Signedness sign, uint32_t a, uint32_t b,
                   uint32_t acc) {
  const int n = lane_count(w);
  int64_t sum = static_cast<int64_t>(s32(acc));
  for (int i = 0; i < n; ++i) {
    const uint32_t la = get_lane(a, i, w);
    const uint32_t lb = get_lane(b, i, w);
    const int64_t ea = sign == Signedness::kSigned
                           ? static_cast<int64_t>(sext_lane(la, w))
                           : static_cast<int64_t>(la);
    const int64_t eb = sign == Signedness::kSigned
                           ? static_cast<int64_t>(sext_lane(lb, w))
                           : static_cast<int64_t>(lb);
    sum += ea * eb;
  }
  return u32(sum);
}

uint32_t exec_shuffle(uint32_t a, uint32_t b, uint32_t mask, LaneWidth w,
                      bool single_source) {
  const int n = lane_count(w);
  const uint32_t idx_bits = w == LaneWidth::kByte ? 2 : 1;
  const uint32_t idx_mask = (1u << idx_bits) - 1;
  uint32_t out = 0;
  for (int j = 0; j < n; ++j) {
    const uint32_t sel = get_lane(mask, j, w);
    const uint32_t index = sel & idx_mask;
    const bool from_a = single_source || ((sel >> idx_bits) & 1u) != 0;
    const uint32_t src = from_a ? a : b;
    out = set_lane(out, j, w, get_lane(src, static_cast<int>(index), w));
  }
  return out;
}

uint32_t exec_fixpoint(Mnemonic op, uint32_t a, uint32_t b, uint32_t acc,
                       unsigned shift_i) {
  const uint32_t round = shift_i > 0 ? 1u << (shift_i - 1) : 0u;
  switch (op) {
    case Mnemonic::kPAddRN: {
      const uint32_t sum = a + b + round;
      return static_cast<uint32_t>(s32(sum) >> shift_i);
    }
    case Mnemonic::kPAddRNu: {
      const uint32_t sum = a + b + round;
      return sum >> shift_i;
    }
    case Mnemonic::kPSubRN: {
      const uint32_t diff = a - b + round;
      return static_cast<uint32_t>(s32(diff) >> shift_i);
    }
    case Mnemonic::kPClip: {
      const int32_t lo = shift_i == 0 ? -1 : -(1 << (shift_i - 1));
      const int32_t hi = shift_i == 0 ? 0 : (1 << (shift_i - 1)) - 1;
      const int32_t x = s32(a);
      return static_cast<uint32_t>(x < lo ? lo : (x > hi ? hi : x));
    }
    case Mnemonic::kPClipu: {
      const int32_t hi = shift_i == 0 ? 0 : (1 << (shift_i - 1)) - 1;
      const int32_t x = s32(a);
      return static_cast<uint32_t>(x < 0 ? 0 : (x > hi ? hi : x));
    }
    case Mnemonic::kPMulsRN: {
      const int64_t prod =
          static_cast<int64_t>(sext16(a)) * sext16(b) + round;
      return u32(prod >> shift_i);
    }
    case Mnemonic::kPMuluRN: {
      const uint64_t prod =
          static_cast<uint64_t>(a & 0xFFFF) * (b & 0xFFFF) + round;
      return static_cast<uint32_t>(prod >> shift_i);
    }
    case Mnemonic::kPMac:
      return acc + u32(static_cast<int64_t>(sext16(a)) * sext16(b));
    case Mnemonic::kPMsu:
      return acc - u32(static_cast<int64_t>(sext16(a)) * sext16(b));
    default:
      return 0;
  }
}

uint32_t exec_bitmanip(Mnemonic op, uint32_t a, unsigned len, unsigned off) {
  const uint32_t mask = field_mask(len);
  switch (op) {
    case Mnemonic::kPExtract: {
      const uint32_t f = (a >> off) & mask;
      const uint32_t sign_bit = 1u << (len - 1);
      return (f ^ sign_bit) - sign_bit;  // sign-extend len-bit field
    }
    case Mnemonic::kPExtractu:
      return (a >> off) & mask;
    case Mnemonic::kPBclr:
      return a & ~(mask << off);
    case Mnemonic::kPBset:
      return a | (mask << off);
    case Mnemonic::kPCnt:
      return static_cast<uint32_t>(std::popcount(a));
    case Mnemonic::kPFf1:
      return a == 0 ? 32u : static_cast<uint32_t>(std::countr_zero(a));
    case Mnemonic::kPFl1:
      return a == 0 ? 32u : 31u - static_cast<uint32_t>(std::countl_zero(a));
    case Mnemonic::kPClb: {
      if (a == 0) return 0;
      const int lead = (a >> 31) ? std::countl_one(a) : std::countl_zero(a);
      return static_cast<uint32_t>(lead - 1);
    }
    default:
      return 0;
  }
}

// p.insert needs the old destination besides the source field.
static uint32_t exec_bit_insert(uint32_t src, uint32_t old_rd, unsigned len,
                                unsigned off) {
  const uint32_t mask = field_mask(len);
  return (old_rd & ~(mask << off)) | ((src & mask) << off);
}

uint32_t exec_div(Mnemonic op, uint32_t a, uint32_t b) {
  const int32_t sa = s32(a), sb = s32(b);
  switch (op) {
    case Mnemonic::kDiv:
      if (b == 0) return 0xFFFFFFFFu;
      if (sa == INT32_MIN && sb == -1) return static_cast<uint32_t>(INT32_MIN);
      return static_cast<uint32_t>(sa / sb);
    case Mnemonic::kDivu:
      if (b == 0) return 0xFFFFFFFFu;
      return a / b;
    case Mnemonic::kRem:
      if (b == 0) return a;
      if (sa == INT32_MIN && sb == -1) return 0;
      return static_cast<uint32_t>(sa % sb);
    case Mnemonic::kRemu:
      if (b == 0) return a;
      return a % b;
    default:
      return 0;
  }
}

static uint32_t div_quotient_bits_of(Mnemonic op, uint32_t a, uint32_t b) {
  const Mnemonic qop =
      (op == Mnemonic::kRem) ? Mnemonic::kDiv
                             : (op == Mnemonic::kRemu ? Mnemonic::kDivu : op);
  const uint32_t q = exec_div(qop, a, b);
  uint64_t mag;
  if (qop == Mnemonic::kDiv) {
    const int64_t sq = s32(q);
    mag = static_cast<uint64_t>(sq < 0 ? -sq : sq);
  } else {
    mag = q;
  }
  return static_cast<uint32_t>(std::bit_width(mag));
}

uint32_t div_latency(Mnemonic op, uint32_t a, uint32_t b) {
  const uint32_t lat = 2 + div_quotient_bits_of(op, a, b);
  return lat > 32 ? 32 : lat;
}

namespace {

struct MemOp {
  uint32_t ea = 0;
  bool base_update = false;
  uint32_t new_base = 0;
};

MemOp address_of(const Instr& in, const CoreState& core) {
  MemOp m;
  const uint32_t base = core.reg(in.rs1);
  switch (in.amode) {
    case AddrMode::kOffset:
      m.ea = base + static_cast<uint32_t>(in.imm);
      break;
    case AddrMode::kPostImm:
      m.ea = base;
      m.base_update = true;
      m.new_base = base + static_cast<uint32_t>(in.imm);
      break;
    case AddrMode::kPostReg:
      m.ea = base;
      m.base_update = true;
      m.new_base = base + core.reg(in.rs3);
      break;
    case AddrMode::kRegOffset:
      m.ea = base + core.reg(in.rs3);
      break;
  }
  return m;
}

void record_accesses(EffectRecord& ef, const MemorySystem& mem, uint32_t ea,
                     int width, bool is_store) {
  const uint32_t first_word = ea & ~3u;
  const uint32_t last_word = (ea + static_cast<uint32_t>(width) - 1) & ~3u;
  ef.unaligned = first_word != last_word;
  auto add = [&](uint32_t w) {
    ef.accesses[static_cast<size_t>(ef.n_accesses++)] =
        MemAccess{w, mem.bank_of(w), is_store, mem.is_scm(w)};
  };
  if (ef.unaligned) {
    add(last_word);  // high word is requested first
    add(first_word);
  } else {
    add(first_word);
  }
}

}  // namespace

EffectRecord step(CoreState& core, MemorySystem& mem, const Program& prog) {
  EffectRecord ef;
  if (core.halted) {
    ef.halted = true;
    return ef;
  }
  if (core.pc == prog.end_addr()) {
    core.halted = true;
    ef.halted = true;
    return ef;
  }
  const int32_t idx = prog.index_of(core.pc);
  auto trap = [&](const std::string& msg) {
    core.halted = true;
    core.trap = Trap{core.pc, msg};
    ef.trapped = true;
    ef.halted = true;
    return ef;
  };
  if (idx < 0) return trap("pc does not map to an instruction");
  const Instr& in = prog.instrs[static_cast<size_t>(idx)];
  ef.index = idx;
  ef.mn = in.mn;
  ef.size = in.size;
  ef.pc = core.pc;
  ef.next_pc = core.pc + in.size;

  auto target_addr = [&](int32_t t) { return prog.addr_of(t); };
  auto vec_b = [&]() -> uint32_t {
    if (in.vmode == VecMode::kScalarImm)
      return replicate_lane(static_cast<uint32_t>(in.imm), in.lane);
    if (in.vmode == VecMode::kScalarReg)
      return replicate_lane(get_lane(core.reg(in.rs2), 0, in.lane), in.lane);
    return core.reg(in.rs2);
  };

  switch (in.mn) {
    case Mnemonic::kNop:
      break;
    case Mnemonic::kMv:
      core.set_reg(in.rd, core.reg(in.rs1));
      break;
    case Mnemonic::kAdd:
      core.set_reg(in.rd, core.reg(in.rs1) + core.reg(in.rs2));
      break;
    case Mnemonic::kAddi:
      core.set_reg(in.rd, core.reg(in.rs1) + static_cast<uint32_t>(in.imm));
      break;
    case Mnemonic::kSub:
      core.set_reg(in.rd, core.reg(in.rs1) - core.reg(in.rs2));
      break;
    case Mnemonic::kAnd:
      core.set_reg(in.rd, core.reg(in.rs1) & core.reg(in.rs2));
      break;
    case Mnemonic::kAndi:
      core.set_reg(in.rd, core.reg(in.rs1) & static_cast<uint32_t>(in.imm));
      break;
    case Mnemonic::kOr:
      core.set_reg(in.rd, core.reg(in.rs1) | core.reg(in.rs2));
      break;
    case Mnemonic::kOri:
      core.set_reg(in.rd, core.reg(in.rs1) | static_cast<uint32_t>(in.imm));
      break;
    case Mnemonic::kXor:
      core.set_reg(in.rd, core.reg(in.rs1) ^ core.reg(in.rs2));
      break;
    case Mnemonic::kXori:
      core.set_reg(in.rd, core.reg(in.rs1) ^ static_cast<uint32_t>(in.imm));
      break;
    case Mnemonic::kSll:
      core.set_reg(in.rd, core.reg(in.rs1) << (core.reg(in.rs2) & 31));
      break;
    case Mnemonic::kSlli:
      core.set_reg(in.rd, core.reg(in.rs1) << (in.imm & 31));
      break;
    case Mnemonic::kSrl:
      core.set_reg(in.rd, core.reg(in.rs1) >> (core.reg(in.rs2) & 31));
      break;
    case Mnemonic::kSrli:
      core.set_reg(in.rd, core.reg(in.rs1) >> (in.imm & 31));
      break;
    case Mnemonic::kSra:
      core.set_reg(in.rd, static_cast<uint32_t>(s32(core.reg(in.rs1)) >>
                                                (core.reg(in.rs2) & 31)));
      break;
    case Mnemonic::kSrai:
      core.set_reg(
          in.rd, static_cast<uint32_t>(s32(core.reg(in.rs1)) >> (in.imm & 31)));
      break;
    case Mnemonic::kSlt:
      core.set_reg(in.rd,
                   s32(core.reg(in.rs1)) < s32(core.reg(in.rs2)) ? 1u : 0u);
      break;
    case Mnemonic::kSlti:
      core.set_reg(in.rd, s32(core.reg(in.rs1)) < in.imm ? 1u : 0u);
      break;
    case Mnemonic::kLui:
      core.set_reg(in.rd, static_cast<uint32_t>(in.imm) << 12);
      break;
    case Mnemonic::kAuipc:
      core.set_reg(in.rd, core.pc + (static_cast<uint32_t>(in.imm) << 12));
      break;
    case Mnemonic::kMul:
      core.set_reg(in.rd, core.reg(in.rs1) * core.reg(in.rs2));
      break;
    case Mnemonic::kMulh: {
      const int64_t p = static_cast<int64_t>(s32(core.reg(in.rs1))) *
                        static_cast<int64_t>(s32(core.reg(in.rs2)));
      core.set_reg(in.rd, static_cast<uint32_t>(p >> 32));
      break;
    }
    case Mnemonic::kDiv:
    case Mnemonic::kDivu:
    case Mnemonic::kRem:
    case Mnemonic::kRemu: {
      const uint32_t a = core.reg(in.rs1), b = core.reg(in.rs2);
      core.set_reg(in.rd, exec_div(in.mn, a, b));
      ef.div_quotient_bits = div_quotient_bits_of(in.mn, a, b);
      break;
    }
    case Mnemonic::kBeq:
    case Mnemonic::kBne:
    case Mnemonic::kBlt:
    case Mnemonic::kBge: {
      const int32_t a = s32(core.reg(in.rs1)), b = s32(core.reg(in.rs2));
      bool taken = false;
      if (in.mn == Mnemonic::kBeq) taken = a == b;
      if (in.mn == Mnemonic::kBne) taken = a != b;
      if (in.mn == Mnemonic::kBlt) taken = a < b;
      if (in.mn == Mnemonic::kBge) taken = a >= b;
      if (taken) {
        ef.next_pc = target_addr(in.target);
        ef.taken_branch = true;
      }
      break;
    }
    case Mnemonic::kJal:
      core.set_reg(in.rd, core.pc + in.size);
      ef.next_pc = target_addr(in.target);
      ef.taken_branch = true;
      break;
    case Mnemonic::kJ:
      ef.next_pc = target_addr(in.target);
      ef.taken_branch = true;
      break;
    case Mnemonic::kJalr: {
      const uint32_t ret = core.pc + in.size;
      ef.next_pc = (core.reg(in.rs1) + static_cast<uint32_t>(in.imm)) & ~1u;
      core.set_reg(in.rd, ret);
      ef.taken_branch = true;
      break;
    }
    case Mnemonic::kLw:
    case Mnemonic::kLh:
    case Mnemonic::kLhu:
    case Mnemonic::kLb:
    case Mnemonic::kLbu:
    case Mnemonic::kPLw:
    case Mnemonic::kPLh:
    case Mnemonic::kPLhu:
    case Mnemonic::kPLb:
    case Mnemonic::kPLbu: {
      const MemOp m = address_of(in, core);
      const int width = mem_width(in.mn);
      if (m.ea == MemorySystem::kBarrierAddr && width == 4) {
        if (m.base_update) core.set_reg(in.rs1, m.new_base);
        core.set_reg(in.rd, mem.barrier_arrivals);
        break;
      }
      if (!mem.in_range(m.ea, static_cast<uint32_t>(width)))
        return trap("load outside TCDM at address " + std::to_string(m.ea));
      record_accesses(ef, mem, m.ea, width, /*is_store=*/false);
      uint32_t v = 0;
      switch (in.mn) {
        case Mnemonic::kLw:
        case Mnemonic::kPLw:
          v = mem.load32(m.ea);
          break;
        case Mnemonic::kLh:
        case Mnemonic::kPLh:
          v = static_cast<uint32_t>(
              static_cast<int32_t>(static_cast<int16_t>(mem.load16(m.ea))));
          break;
        case Mnemonic::kLhu:
        case Mnemonic::kPLhu:
          v = mem.load16(m.ea);
          break;
        case Mnemonic::kLb:
        case Mnemonic::kPLb:
          v = static_cast<uint32_t>(
              static_cast<int32_t>(static_cast<int8_t>(mem.load8(m.ea))));
          break;
        default:
          v = mem.load8(m.ea);
          break;
      }
      // Post-increment loads write both rd and the base; on rd == base the
      // loaded data wins (documented in docs/semantics.md).
      if (m.base_update) core.set_reg(in.rs1, m.new_base);
      core.set_reg(in.rd, v);
      ef.load_rd = in.rd;
      break;
    }
    case Mnemonic::kSw:
    case Mnemonic::kSh:
    case Mnemonic::kSb:
    case Mnemonic::kPSw:
    case Mnemonic::kPSh:
    case Mnemonic::kPSb: {
      const MemOp m = address_of(in, core);
      const int width = mem_width(in.mn);
      const uint32_t v = core.reg(in.rs2);
      if (m.ea == MemorySystem::kBarrierAddr && width == 4) {
        mem.barrier_arrivals += 1;
        ef.barrier_arrive = true;
        if (m.base_update) core.set_reg(in.rs1, m.new_base);
        break;
      }
      if (!mem.in_range(m.ea, static_cast<uint32_t>(width)))
        return trap("store outside TCDM at address " + std::to_string(m.ea));
      record_accesses(ef, mem, m.ea, width, /*is_store=*/true);
      if (width == 4)
        mem.store32(m.ea, v);
      else if (width == 2)
        mem.store16(m.ea, static_cast<uint16_t>(v));
      else
        mem.store8(m.ea, static_cast<uint8_t>(v));
      if (m.base_update) core.set_reg(in.rs1, m.new_base);
      break;
    }
    case Mnemonic::kLpSetup:
    case Mnemonic::kLpSetupi: {
      HwLoop& hl = core.hwloops[in.loop == LoopSet::kL0 ? 0 : 1];
      if (hl.active())
        return trap("hardware loop set already active at setup");
      const uint32_t count = in.mn == Mnemonic::kLpSetup
                                 ? core.reg(in.rs1)
                                 : static_cast<uint32_t>(in.imm);
      if (count == 0) return trap("hardware loop count is zero at setup");
      hl.start = core.pc + in.size;
      hl.end = target_addr(in.target);
      hl.count = count;
      break;
    }
    case Mnemonic::kLpStart:
      core.hwloops[in.loop == LoopSet::kL0 ? 0 : 1].start =
          target_addr(in.target);
      break;
    case Mnemonic::kLpEnd:
      core.hwloops[in.loop == LoopSet::kL0 ? 0 : 1].end =
          target_addr(in.target);
      break;
    case Mnemonic::kLpCount:
    case Mnemonic::kLpCounti: {
      HwLoop& hl = core.hwloops[in.loop == LoopSet::kL0 ? 0 : 1];
      if (hl.active())
        return trap("hardware loop set already active at count write");
      const uint32_t count = in.mn == Mnemonic::kLpCount
                                 ? core.reg(in.rs1)
                                 : static_cast<uint32_t>(in.imm);
      if (count == 0) return trap("hardware loop count is zero");
      hl.count = count;
      break;
    }
    case Mnemonic::kPAddRN:
    case Mnemonic::kPAddRNu:
    case Mnemonic::kPSubRN:
    case Mnemonic::kPMulsRN:
    case Mnemonic::kPMuluRN:
      core.set_reg(in.rd, exec_fixpoint(in.mn, core.reg(in.rs1),
                                        core.reg(in.rs2), 0, in.shift_i));
      break;
    case Mnemonic::kPClip:
    case Mnemonic::kPClipu:
      core.set_reg(in.rd,
                   exec_fixpoint(in.mn, core.reg(in.rs1), 0, 0, in.shift_i));
      break;
    case Mnemonic::kPMac:
    case Mnemonic::kPMsu:
      core.set_reg(in.rd, exec_fixpoint(in.mn, core.reg(in.rs1),
                                        core.reg(in.rs2), core.reg(in.rd), 0));
      break;
    case Mnemonic::kPvAdd:
    case Mnemonic::kPvSub:
    case Mnemonic::kPvAvg:
    case Mnemonic::kPvMin:
    case Mnemonic::kPvMax:
    case Mnemonic::kPvSrl:
    case Mnemonic::kPvSra:
    case Mnemonic::kPvSll:
    case Mnemonic::kPvAnd:
    case Mnemonic::kPvOr:
    case Mnemonic::kPvXor:
    case Mnemonic::kPvCmpeq:
    case Mnemonic::kPvCmpgt:
      core.set_reg(in.rd,
                   exec_vector_alu(in.mn, core.reg(in.rs1), vec_b(), in.lane));
      break;
    case Mnemonic::kPvDotp:
      core.set_reg(in.rd,
                   exec_dotp(in.lane, in.sign, core.reg(in.rs1), vec_b(), 0));
      break;
    case Mnemonic::kPvSdotp:
      core.set_reg(in.rd, exec_dotp(in.lane, in.sign, core.reg(in.rs1),
                                    vec_b(), core.reg(in.rd)));
      break;
    case Mnemonic::kPvShuffle:
      core.set_reg(in.rd, exec_shuffle(core.reg(in.rs1), 0, core.reg(in.rs2),
                                       in.lane, /*single_source=*/true));
      break;
    case Mnemonic::kPvShuffle2:
      core.set_reg(in.rd, exec_shuffle(core.reg(in.rs1), core.reg(in.rd),
                                       core.reg(in.rs2), in.lane));
      break;
    case Mnemonic::kPvInsert:
      core.set_reg(in.rd,
                   set_lane(core.reg(in.rd), in.imm, in.lane,
                            get_lane(core.reg(in.rs1), 0, in.lane)));
      break;
    case Mnemonic::kPvExtract:
      core.set_reg(in.rd, static_cast<uint32_t>(sext_lane(
                              get_lane(core.reg(in.rs1), in.imm, in.lane),
                              in.lane)));
      break;
    case Mnemonic::kPvExtractu:
      core.set_reg(in.rd, get_lane(core.reg(in.rs1), in.imm, in.lane));
      break;
    case Mnemonic::kPvPack:
      core.set_reg(in.rd, (core.reg(in.rs1) << 16) |
                              (core.reg(in.rs2) & 0xFFFF));
      break;
    case Mnemonic::kPExtract:
    case Mnemonic::kPExtractu:
    case Mnemonic::kPBclr:
    case Mnemonic::kPBset:
      core.set_reg(in.rd,
                   exec_bitmanip(in.mn, core.reg(in.rs1), in.len, in.off));
      break;
    case Mnemonic::kPInsert:
      core.set_reg(in.rd, exec_bit_insert(core.reg(in.rs1), core.reg(in.rd),
                                          in.len, in.off));
      break;
    case Mnemonic::kPCnt:
    case Mnemonic::kPFf1:
    case Mnemonic::kPFl1:
    case Mnemonic::kPClb:
      core.set_reg(in.rd, exec_bitmanip(in.mn, core.reg(in.rs1), 0, 0));
      break;
    default:
      return trap("unimplemented mnemonic");
  }

  // Hardware-loop back-jump: when the retiring instruction sits at an active
  // loop's end address and did not redirect itself. L0 has priority.
  if (!ef.taken_branch) {
    for (HwLoop& hl : core.hwloops) {
      if (!hl.active() || hl.end != ef.pc) continue;
      if (hl.count > 1) {
        hl.count -= 1;
        ef.next_pc = hl.start;
        ef.hwloop_backjump = true;
      } else {
        hl.count = 0;  // final iteration falls through
      }
      break;
    }
  }

  core.retired += 1;
  if (in.size == 2) core.retired16 += 1;
  core.retired_by_mn[static_cast<size_t>(in.mn)] += 1;
  core.pc = ef.next_pc;
  return ef;
}

bool run_untimed(CoreState& core, MemorySystem& mem, const Program& prog,
                 uint64_t max_instrs) {
  for (uint64_t i = 0; i < max_instrs; ++i) {
    if (core.halted) return true;
    step(core, mem, prog);
  }
  return core.halted;
}

}  // namespace rvdsp
