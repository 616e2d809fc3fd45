#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "rvdsp/exec.hpp"

using namespace rvdsp;

namespace {

constexpr int kCasesPerFamily = 100'000;

struct VecPair {
  Mnemonic mn;
  oracle::VecOp op;
};

constexpr VecPair kVecOps[] = {
    {Mnemonic::kPvAdd, oracle::VecOp::kAdd},
    {Mnemonic::kPvSub, oracle::VecOp::kSub},
    {Mnemonic::kPvAvg, oracle::VecOp::kAvg},
    {Mnemonic::kPvMin, oracle::VecOp::kMin},
    {Mnemonic::kPvMax, oracle::VecOp::kMax},
    {Mnemonic::kPvSrl, oracle::VecOp::kSrl},
    {Mnemonic::kPvSra, oracle::VecOp::kSra},
    {Mnemonic::kPvSll, oracle::VecOp::kSll},
    {Mnemonic::kPvAnd, oracle::VecOp::kAnd},
    {Mnemonic::kPvOr, oracle::VecOp::kOr},
    {Mnemonic::kPvXor, oracle::VecOp::kXor},
    {Mnemonic::kPvCmpeq, oracle::VecOp::kCmpeq},
    {Mnemonic::kPvCmpgt, oracle::VecOp::kCmpgt},
};

}  // namespace

TEST_CASE("vector ALU matches the wide-integer oracle") {
  std::mt19937_64 gen(101);
  for (int i = 0; i < kCasesPerFamily; ++i) {
    const auto& vp = kVecOps[gen() % std::size(kVecOps)];
    const LaneWidth w = gen() % 2 ? LaneWidth::kByte : LaneWidth::kHalf;
    const uint32_t a = static_cast<uint32_t>(gen());
    // mix equal lanes in so cmpeq has true cases
    uint32_t b = static_cast<uint32_t>(gen());
    if (gen() % 4 == 0) b = a;
    const uint32_t got = exec_vector_alu(vp.mn, a, b, w);
    const uint32_t want =
        oracle::vec_alu(vp.op, a, b, w == LaneWidth::kByte ? 8 : 16);
    REQUIRE(got == want);
  }
}

TEST_CASE("dot products match the exact-integer oracle") {
  std::mt19937_64 gen(102);
  for (int i = 0; i < kCasesPerFamily; ++i) {
    const LaneWidth w = gen() % 2 ? LaneWidth::kByte : LaneWidth::kHalf;
    const Signedness s = gen() % 2 ? Signedness::kSigned : Signedness::kUnsigned;
    const uint32_t a = static_cast<uint32_t>(gen());
    const uint32_t b = static_cast<uint32_t>(gen());
    const uint32_t acc = gen() % 2 ? static_cast<uint32_t>(gen()) : 0;
    const uint32_t got = exec_dotp(w, s, a, b, acc);
    const uint32_t want = oracle::dotp(a, b, acc, w == LaneWidth::kByte ? 8 : 16,
                                       s == Signedness::kSigned);
    REQUIRE(got == want);
  }
}

TEST_CASE("fixed point ops match the oracle") {
  std::mt19937_64 gen(103);
  for (int i = 0; i < kCasesPerFamily; ++i) {
    const uint32_t a = static_cast<uint32_t>(gen());
    const uint32_t b = static_cast<uint32_t>(gen());
    const uint32_t acc = static_cast<uint32_t>(gen());
    const unsigned sh = gen() % 32;
    switch (gen() % 9) {
      case 0:
        REQUIRE(exec_fixpoint(Mnemonic::kPAddRN, a, b, 0, sh) ==
                oracle::add_round_norm(a, b, static_cast<int>(sh), false, true));
        break;
      case 1:
        REQUIRE(exec_fixpoint(Mnemonic::kPAddRNu, a, b, 0, sh) ==
                oracle::add_round_norm(a, b, static_cast<int>(sh), false, false));
        break;
      case 2:
        REQUIRE(exec_fixpoint(Mnemonic::kPSubRN, a, b, 0, sh) ==
                oracle::add_round_norm(a, b, static_cast<int>(sh), true, true));
        break;
      case 3:
        REQUIRE(exec_fixpoint(Mnemonic::kPClip, a, b, 0, sh) ==
                oracle::clip(a, static_cast<int>(sh), false));
        break;
      case 4:
        REQUIRE(exec_fixpoint(Mnemonic::kPClipu, a, b, 0, sh) ==
                oracle::clip(a, static_cast<int>(sh), true));
        break;
      case 5:
        REQUIRE(exec_fixpoint(Mnemonic::kPMulsRN, a, b, 0, sh) ==
                oracle::mul_round_norm(a, b, static_cast<int>(sh), true));
        break;
      case 6:
        REQUIRE(exec_fixpoint(Mnemonic::kPMuluRN, a, b, 0, sh) ==
                oracle::mul_round_norm(a, b, static_cast<int>(sh), false));
        break;
      case 7:
        REQUIRE(exec_fixpoint(Mnemonic::kPMac, a, b, acc, 0) ==
                oracle::mac(acc, a, b, false));
        break;
      default:
        REQUIRE(exec_fixpoint(Mnemonic::kPMsu, a, b, acc, 0) ==
                oracle::mac(acc, a, b, true));
        break;
    }
  }
}

TEST_CASE("bit manipulation matches the bit-loop oracle") {
  std::mt19937_64 gen(104);
  for (int i = 0; i < kCasesPerFamily; ++i) {
    const uint32_t a = static_cast<uint32_t>(gen());
    const unsigned len = 1 + gen() % 32;
    const unsigned off = gen() % (33 - len);
    switch (gen() % 9) {
      case 0:
        REQUIRE(exec_bitmanip(Mnemonic::kPExtract, a, len, off) ==
                oracle::bitmanip(oracle::BitOp::kExtract, a,
                                 static_cast<int>(len), static_cast<int>(off)));
        break;
      case 1:
        REQUIRE(exec_bitmanip(Mnemonic::kPExtractu, a, len, off) ==
                oracle::bitmanip(oracle::BitOp::kExtractu, a,
                                 static_cast<int>(len), static_cast<int>(off)));
        break;
      case 2:
        REQUIRE(exec_bitmanip(Mnemonic::kPBclr, a, len, off) ==
                oracle::bitmanip(oracle::BitOp::kBclr, a, static_cast<int>(len),
                                 static_cast<int>(off)));
        break;
      case 3:
        REQUIRE(exec_bitmanip(Mnemonic::kPBset, a, len, off) ==
                oracle::bitmanip(oracle::BitOp::kBset, a, static_cast<int>(len),
                                 static_cast<int>(off)));
        break;
      case 4:
        REQUIRE(exec_bitmanip(Mnemonic::kPCnt, a, 0, 0) ==
                oracle::bitmanip(oracle::BitOp::kCnt, a, 0, 0));
        break;
      case 5:
        REQUIRE(exec_bitmanip(Mnemonic::kPFf1, a, 0, 0) ==
                oracle::bitmanip(oracle::BitOp::kFf1, a, 0, 0));
        break;
      case 6:
        REQUIRE(exec_bitmanip(Mnemonic::kPFl1, a, 0, 0) ==
                oracle::bitmanip(oracle::BitOp::kFl1, a, 0, 0));
        break;
      case 7:
        REQUIRE(exec_bitmanip(Mnemonic::kPClb, a, 0, 0) ==
                oracle::bitmanip(oracle::BitOp::kClb, a, 0, 0));
        break;
      default: {
        const uint32_t old = static_cast<uint32_t>(gen());
        Program p = testutil::assemble(
            "p.insert x5, x6, " + std::to_string(len) + ", " +
            std::to_string(off) + "\n");
        CoreState core;
        MemorySystem mem;
        core.reset(0);
        core.set_reg(5, old);
        core.set_reg(6, a);
        step(core, mem, p);
        REQUIRE(core.reg(5) == oracle::bit_insert(a, old, static_cast<int>(len),
                                                  static_cast<int>(off)));
        break;
      }
    }
  }
}

TEST_CASE("division matches the oracle and satisfies the identity") {
  std::mt19937_64 gen(105);
  for (int i = 0; i < kCasesPerFamily; ++i) {
    uint32_t a = static_cast<uint32_t>(gen());
    uint32_t b = static_cast<uint32_t>(gen());
    switch (gen() % 8) {
      case 0: b = 0; break;
      case 1: b = static_cast<uint32_t>(gen() % 7) - 3; break;
      case 2: a = 0x80000000u; b = 0xFFFFFFFFu; break;
      default: break;
    }
    REQUIRE(exec_div(Mnemonic::kDiv, a, b) ==
            oracle::divide(oracle::DivOp::kDiv, a, b));
    REQUIRE(exec_div(Mnemonic::kDivu, a, b) ==
            oracle::divide(oracle::DivOp::kDivu, a, b));
    REQUIRE(exec_div(Mnemonic::kRem, a, b) ==
            oracle::divide(oracle::DivOp::kRem, a, b));
    REQUIRE(exec_div(Mnemonic::kRemu, a, b) ==
            oracle::divide(oracle::DivOp::kRemu, a, b));
    if (b != 0) {
      // a == q*b + r, |r| < |b|, sign(r) == sign(a)
      const int32_t q = static_cast<int32_t>(exec_div(Mnemonic::kDiv, a, b));
      const int32_t r = static_cast<int32_t>(exec_div(Mnemonic::kRem, a, b));
      const int32_t sa = static_cast<int32_t>(a), sb = static_cast<int32_t>(b);
      const int64_t recomposed = static_cast<int64_t>(q) * sb + r;
      REQUIRE(static_cast<int32_t>(static_cast<uint32_t>(
                  static_cast<uint64_t>(recomposed))) == sa);
      if (r != 0) {
        REQUIRE((r < 0) == (sa < 0));
        const int64_t rr = r < 0 ? -static_cast<int64_t>(r) : r;
        const int64_t bb = sb < 0 ? -static_cast<int64_t>(sb) : sb;
        REQUIRE(rr < bb);
      }
      const uint32_t qu = exec_div(Mnemonic::kDivu, a, b);
      const uint32_t ru = exec_div(Mnemonic::kRemu, a, b);
      REQUIRE(qu * b + ru == a);
      REQUIRE(ru < b);
    }
    const uint32_t lat = div_latency(Mnemonic::kDiv, a, b);
    REQUIRE(lat >= 2);
    REQUIRE(lat <= 32);
  }
}

TEST_CASE("lane isolation: perturbing one lane changes only that lane") {
  std::mt19937_64 gen(106);
  const Mnemonic ops[] = {Mnemonic::kPvAdd, Mnemonic::kPvSub, Mnemonic::kPvAnd,
                          Mnemonic::kPvOr,  Mnemonic::kPvXor, Mnemonic::kPvSrl,
                          Mnemonic::kPvSra, Mnemonic::kPvSll, Mnemonic::kPvCmpeq,
                          Mnemonic::kPvCmpgt};
  for (int i = 0; i < 20'000; ++i) {
    const Mnemonic mn = ops[gen() % std::size(ops)];
    const LaneWidth w = gen() % 2 ? LaneWidth::kByte : LaneWidth::kHalf;
    const int lanes = lane_count(w);
    const uint32_t a = static_cast<uint32_t>(gen());
    const uint32_t b = static_cast<uint32_t>(gen());
    const int lane = static_cast<int>(gen()) & (lanes - 1);
    uint32_t delta = static_cast<uint32_t>(gen());
    if ((delta & (w == LaneWidth::kByte ? 0xFFu : 0xFFFFu)) == 0) delta = 1;
    const uint32_t a2 = set_lane(a, lane, w, get_lane(a, lane, w) ^ delta);
    const uint32_t r1 = exec_vector_alu(mn, a, b, w);
    const uint32_t r2 = exec_vector_alu(mn, a2, b, w);
    for (int j = 0; j < lanes; ++j) {
      if (j != lane) REQUIRE(get_lane(r1, j, w) == get_lane(r2, j, w));
    }
  }
}

TEST_CASE("clip is idempotent and stays in range") {
  std::mt19937_64 gen(107);
  for (int i = 0; i < 50'000; ++i) {
    const uint32_t x = static_cast<uint32_t>(gen());
    const unsigned bits = 1 + gen() % 31;
    const uint32_t once = exec_fixpoint(Mnemonic::kPClip, x, 0, 0, bits);
    const uint32_t twice = exec_fixpoint(Mnemonic::kPClip, once, 0, 0, bits);
    REQUIRE(once == twice);
    const int32_t v = static_cast<int32_t>(once);
    REQUIRE(v >= -(1 << (bits - 1)));
    REQUIRE(v <= (1 << (bits - 1)) - 1);
  }
}

TEST_CASE("shuffle totality: every output lane is some input lane") {
  std::mt19937_64 gen(108);
  for (int i = 0; i < 50'000; ++i) {
    const LaneWidth w = gen() % 2 ? LaneWidth::kByte : LaneWidth::kHalf;
    const uint32_t a = static_cast<uint32_t>(gen());
    const uint32_t b = static_cast<uint32_t>(gen());
    const uint32_t mask = static_cast<uint32_t>(gen());
    const uint32_t r = exec_shuffle(a, b, mask, w);
    const int lanes = lane_count(w);
    for (int j = 0; j < lanes; ++j) {
      const uint32_t out = get_lane(r, j, w);
      bool found = false;
      for (int q = 0; q < lanes; ++q)
        found = found || out == get_lane(a, q, w) || out == get_lane(b, q, w);
      REQUIRE(found);
    }
  }
}

// The two-instruction tails these DSP ops replace, executed as programs.
TEST_CASE("addRN and mulsRN equal the instruction sequences they replace") {
  Program add_seq = testutil::assemble(R"(
    add x3, x4, x5
    addi x3, x3, 2
    srai x3, x3, 2
  )");
  Program add_rn = testutil::assemble("p.addRN x3, x4, x5, 2\n");
  Program mul_seq = testutil::assemble(R"(
    mul x4, x4, x5
    lui x6, 1
    addi x6, x6, -2048
    add x4, x4, x6
    srai x4, x4, 12
  )");
  Program mul_rn = testutil::assemble("p.mulsRN x4, x4, x5, 12\n");
  std::mt19937_64 gen(109);
  MemorySystem mem;
  for (int i = 0; i < 20'000; ++i) {
    const uint32_t x = static_cast<uint32_t>(gen());
    const uint32_t y = static_cast<uint32_t>(gen());
    CoreState c1, c2;
    c1.reset(0);
    c2.reset(0);
    c1.set_reg(4, x);
    c1.set_reg(5, y);
    c2.set_reg(4, x);
    c2.set_reg(5, y);
    REQUIRE(run_untimed(c1, mem, add_seq));
    REQUIRE(run_untimed(c2, mem, add_rn));
    REQUIRE(c1.reg(3) == c2.reg(3));

    // 16-bit operands for the fractional multiply
    const uint32_t xs = x & 0xFFFF, ys = y & 0xFFFF;
    const uint32_t xe = static_cast<uint32_t>(static_cast<int32_t>(
        static_cast<int16_t>(xs)));
    const uint32_t ye = static_cast<uint32_t>(static_cast<int32_t>(
        static_cast<int16_t>(ys)));
    CoreState c3, c4;
    c3.reset(0);
    c4.reset(0);
    c3.set_reg(4, xe);
    c3.set_reg(5, ye);
    c4.set_reg(4, xe);
    c4.set_reg(5, ye);
    REQUIRE(run_untimed(c3, mem, mul_seq));
    REQUIRE(run_untimed(c4, mem, mul_rn));
    REQUIRE(c3.reg(4) == c4.reg(4));
  }
}

TEST_CASE("hardware loops are architecturally equivalent to branch loops") {
  std::mt19937_64 gen(110);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 50);
    const std::string count = std::to_string(n);
    // accumulate and store in a counted loop, both ways
    const std::string hw = R"(
      addi x10, x0, 512
      lp.setupi L0, )" + count + R"(, tail
      addi x5, x5, 3
      xor x6, x6, x5
      tail: p.sw x6, 4(x10!)
    )";
    const std::string br = R"(
      addi x10, x0, 512
      addi x7, x0, )" + count + R"(
      loop: addi x5, x5, 3
      xor x6, x6, x5
      p.sw x6, 4(x10!)
      addi x7, x7, -1
      bne x7, x0, loop
    )";
    auto r1 = testutil::run_program(hw);
    auto r2 = testutil::run_program(br);
    CHECK(r1.core.reg(5) == r2.core.reg(5));
    CHECK(r1.core.reg(6) == r2.core.reg(6));
    CHECK(r1.core.reg(10) == r2.core.reg(10));
    CHECK(r1.mem.bytes == r2.mem.bytes);
  }
}

TEST_CASE("unaligned loads equal the five-instruction software sequence") {
  std::mt19937_64 gen(111);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t ea = 100 + static_cast<uint32_t>(gen() % 400) * 4 +
                        1 + static_cast<uint32_t>(gen() % 3);
    const uint32_t aligned = ea & ~3u;
    const unsigned sh = (ea & 3u) * 8;
    const std::string hw = "lw x4, 0(x10)\n";
    const std::string sw = "lw x5, 0(x11)\n"
                           "lw x6, 4(x11)\n"
                           "srli x5, x5, " + std::to_string(sh) + "\n" +
                           "slli x6, x6, " + std::to_string(32 - sh) + "\n" +
                           "or x4, x5, x6\n";
    Program hp = testutil::assemble(hw);
    Program sp = testutil::assemble(sw);
    CHECK(sp.instrs.size() == 5);
    MemorySystem mem;
    for (auto& byte : mem.bytes) byte = static_cast<uint8_t>(gen());
    CoreState c1, c2;
    c1.reset(0);
    c1.set_reg(10, ea);
    c2.reset(0);
    c2.set_reg(11, aligned);
    MemorySystem m1 = mem, m2 = mem;
    REQUIRE(run_untimed(c1, m1, hp));
    REQUIRE(run_untimed(c2, m2, sp));
    REQUIRE(c1.reg(4) == c2.reg(4));
  }
}
