// Benchmark kernel program generation. Each kernel comes in up to three ISA
// variants on identical data:
//   baseline  plain RV32IM, compiled-code shape: immediate-offset loads,
//             scheduled to dodge load-use stalls, out-of-line clamp blocks,
//             pointer-increment loops
//   ext       adds hardware loops, post-increment addressing and the scalar
//             DSP ops (mac, addRN, clip, mulsRN)
//   builtin   adds packed-SIMD dot products and shuffle-based register-file
//             window reuse
// Multi-core variants strip the output rows/ranges and join at the barrier
// cell. All variants are generated so that their results are bit-identical
// to the host-side golden reference.

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvdsp/bench.hpp"

namespace rvdsp {
namespace bench {

namespace {

constexpr uint32_t kCoefBase = 0x100;    // scalar coefficient array
constexpr uint32_t kPackedBase = 0x300;  // packed / padded coefficient views
constexpr uint32_t kImgBase = 0x1000;    // image / A / x / first operand
constexpr uint32_t kIn2Base = 0x5000;    // B (transposed) / second operand
constexpr uint32_t kOutBase = 0x9000;

std::string rg(int r) { return "x" + std::to_string(r); }

struct Asm {
  std::string text;
  int instrs = 0;

  void l(const std::string& s) {
    text += "    " + s + "\n";
    ++instrs;
  }
  void label(const std::string& s) { text += s + ":\n"; }
  void directive(const std::string& s) { text += s + "\n"; }

  void li(int rd, int32_t v) {
    if (v >= -2048 && v <= 2047) {
      l("addi " + rg(rd) + ", x0, " + std::to_string(v));
      return;
    }
    const int32_t upper = (v + 0x800) >> 12;
    const int32_t lower = v - (upper << 12);
    l("lui " + rg(rd) + ", " + std::to_string(upper));
    if (lower != 0)
      l("addi " + rg(rd) + ", " + rg(rd) + ", " + std::to_string(lower));
  }
  void barrier(int scratch) {
    li(scratch, static_cast<int32_t>(MemorySystem::kBarrierAddr));
    l("sw x0, 0(" + rg(scratch) + ")");
  }
};

struct Range {
  uint32_t begin = 0;
  uint32_t end = 0;
  uint32_t count() const { return end - begin; }
};

Range strip(uint32_t total, uint32_t core, uint32_t ncores) {
  return Range{total * core / ncores, total * (core + 1) / ncores};
}

void put(std::map<uint32_t, uint8_t>& img, uint32_t addr, uint32_t v, int w) {
  for (int i = 0; i < w; ++i)
    img[addr + static_cast<uint32_t>(i)] = static_cast<uint8_t>(v >> 8 * i);
}

void put_elems(std::map<uint32_t, uint8_t>& img, uint32_t addr,
               const std::vector<int32_t>& v, int ew) {
  for (size_t i = 0; i < v.size(); ++i)
    put(img, addr + static_cast<uint32_t>(i) * static_cast<uint32_t>(ew),
        static_cast<uint32_t>(v[i]), ew);
}

int elem_width(ElemType e) { return e == ElemType::kI8 ? 1 : 2; }

std::string load_mn(ElemType e) { return e == ElemType::kI8 ? "lb" : "lh"; }
std::string store_mn(ElemType e) { return e == ElemType::kI8 ? "sb" : "sh"; }

// ---------------------------------------------------------------------------
// Convolution
// ---------------------------------------------------------------------------

// Image rows are padded to an odd word count so that vertical access
// patterns rotate through all TCDM banks instead of hammering one.
uint32_t conv_stride(uint32_t w, int ew) {
  return w * static_cast<uint32_t>(ew) + 4;
}

// The builtin variants keep a per-core copy of their packed coefficients,
// offset by an odd word count, so cores do not serialize on one bank.
constexpr uint32_t kPackedCopyStep = 0x104;

struct ConvParams {
  uint32_t w, k, ow;
  int ew, shift, clip_bits;
  uint32_t stride;  // padded row stride in bytes
  Range rows;       // output rows handled by this core
  uint32_t img(uint32_t row) const { return kImgBase + row * stride; }
  uint32_t out(uint32_t row) const {
    return kOutBase + row * ow * static_cast<uint32_t>(ew);
  }
};

ConvParams conv_params(const KernelSpec& spec, const KernelInputs& in,
                       uint32_t core) {
  ConvParams p;
  p.w = in.w;
  p.k = in.k;
  p.ow = in.w - in.k + 1;
  p.ew = elem_width(spec.elem);
  p.shift = in.shift;
  p.clip_bits = in.clip_bits;
  p.stride = conv_stride(in.w, p.ew);
  p.rows = strip(p.ow, core, spec.cores);
  return p;
}

// Baseline: fully unrolled window with immediate-offset loads off one pixel
// pointer, coefficients in registers for 3x3 and reloaded per product
// otherwise, branch loops, out-of-line clamps.
std::string gen_conv_baseline(const KernelSpec& spec, const KernelInputs& in,
                              uint32_t core) {
  const ConvParams p = conv_params(spec, in, core);
  Asm a;
  const std::string ld = load_mn(spec.elem), st = store_mn(spec.elem);
  const int np = static_cast<int>(p.k * p.k);
  const bool coef_in_regs = p.k == 3;
  // x10 p, x11 pout, x12 acc, x13 colcnt, x9 rowcnt, x14/x15 pixel temps,
  // x28/x29 coefficient temps, x7 product, x5/x6 clamp bounds, x8 coef ptr
  if (p.rows.count() > 0) {
    a.li(10, static_cast<int32_t>(p.img(p.rows.begin)));
    a.li(11, static_cast<int32_t>(p.out(p.rows.begin)));
    a.li(5, -(1 << (p.clip_bits - 1)));
    a.li(6, (1 << (p.clip_bits - 1)) - 1);
    a.li(8, static_cast<int32_t>(kCoefBase));
    if (coef_in_regs)
      for (int i = 0; i < 9; ++i)
        a.l(ld + " " + rg(16 + i) + ", " + std::to_string(i * p.ew) + "(x8)");
    a.li(9, static_cast<int32_t>(p.rows.count()));

    auto pix_off = [&](int j) {
      return (j / static_cast<int>(p.k)) * static_cast<int>(p.stride) +
             (j % static_cast<int>(p.k)) * p.ew;
    };
    auto emit_loads = [&](int j) {
      a.l(ld + " " + rg(14 + j % 2) + ", " + std::to_string(pix_off(j)) +
          "(x10)");
      if (!coef_in_regs)
        a.l(ld + " " + rg(28 + j % 2) + ", " + std::to_string(j * p.ew) +
            "(x8)");
    };
    auto emit_mul = [&](int j) {
      const std::string cj = coef_in_regs ? rg(16 + j) : rg(28 + j % 2);
      if (j == 0) {
        a.l("mul x12, " + rg(14 + j % 2) + ", " + cj);
      } else {
        a.l("mul x7, " + rg(14 + j % 2) + ", " + cj);
        a.l("add x12, x12, x7");
      }
    };

    a.label("rowloop");
    a.li(13, static_cast<int32_t>(p.ow));
    a.label("colloop");
    emit_loads(0);
    emit_loads(1);
    for (int j = 2; j < np; ++j) {
      emit_mul(j - 2);
      emit_loads(j);
    }
    emit_mul(np - 2);
    emit_mul(np - 1);
    a.l("addi x12, x12, " + std::to_string(1 << (p.shift - 1)));
    a.l("srai x12, x12, " + std::to_string(p.shift));
    a.l("blt x12, x5, cliplo");
    a.l("blt x6, x12, cliphi");
    a.label("store");
    a.l(st + " x12, 0(x11)");
    a.l("addi x11, x11, " + std::to_string(p.ew));
    a.l("addi x10, x10, " + std::to_string(p.ew));
    a.l("addi x13, x13, -1");
    a.l("bne x13, x0, colloop");
    a.l("addi x10, x10, " +
        std::to_string(static_cast<int>(p.stride) -
                       static_cast<int>(p.ow) * p.ew));
    a.l("addi x9, x9, -1");
    a.l("bne x9, x0, rowloop");
  }
  if (spec.cores > 1) a.barrier(31);
  a.l("j end");
  a.label("cliplo");
  a.l("mv x12, x5");
  a.l("j store");
  a.label("cliphi");
  a.l("mv x12, x6");
  a.l("j store");
  a.label("end");
  return a.text;
}

// Ext: hardware loops for rows and columns, post-increment pixel/coefficient
// loads, mac accumulation, fused round-normalize and clip.
std::string gen_conv_ext(const KernelSpec& spec, const KernelInputs& in,
                         uint32_t core) {
  const ConvParams p = conv_params(spec, in, core);
  Asm a;
  const std::string st = store_mn(spec.elem);
  const std::string pld = spec.elem == ElemType::kI8 ? "p.lb" : "p.lh";
  const std::string ld = load_mn(spec.elem);
  const int np = static_cast<int>(p.k * p.k);
  const bool coef_in_regs = p.k == 3;
  const int kk = static_cast<int>(p.k);
  const int stride = static_cast<int>(p.stride);
  // x10 p, x11 pout, x12 acc, x14/x15 pixel temps, x28/x29 coef temps,
  // x8 coef ptr, x16.. coefficient registers (3x3)
  if (p.rows.count() > 0) {
    a.li(10, static_cast<int32_t>(p.img(p.rows.begin)));
    a.li(11, static_cast<int32_t>(p.out(p.rows.begin)));
    a.li(8, static_cast<int32_t>(kCoefBase));
    if (coef_in_regs)
      for (int i = 0; i < 9; ++i)
        a.l(ld + " " + rg(16 + i) + ", " + std::to_string(i * p.ew) + "(x8)");

    // Post-increment weave through the window: +ew within a row, row jump at
    // row ends, and a final rewind that leaves the pointer one pixel ahead.
    auto pix_inc = [&](int j) {
      if (j == np - 1) return p.ew - (kk - 1) * p.ew - (kk - 1) * stride;
      if (j % kk == kk - 1) return stride - (kk - 1) * p.ew;
      return p.ew;
    };
    auto emit_loads = [&](int j) {
      a.l(pld + " " + rg(14 + j % 2) + ", " + std::to_string(pix_inc(j)) +
          "(x10!)");
      if (!coef_in_regs)
        a.l(pld + " " + rg(28 + j % 2) + ", " + std::to_string(p.ew) + "(x8!)");
    };
    auto emit_mac = [&](int j) {
      const std::string cj = coef_in_regs ? rg(16 + j) : rg(28 + j % 2);
      a.l("p.mac x12, " + rg(14 + j % 2) + ", " + cj);
    };

    a.l("lp.setupi L1, " + std::to_string(p.rows.count()) + ", rowend");
    a.l("lp.setupi L0, " + std::to_string(p.ow) + ", colend");
    a.l("mv x12, x0");
    emit_loads(0);
    emit_loads(1);
    for (int j = 2; j < np; ++j) {
      emit_mac(j - 2);
      emit_loads(j);
    }
    emit_mac(np - 2);
    emit_mac(np - 1);
    a.l("p.addRN x12, x12, x0, " + std::to_string(p.shift));
    a.l("p.clip x12, x12, " + std::to_string(p.clip_bits));
    if (!coef_in_regs) a.l("addi x8, x8, " + std::to_string(-np * p.ew));
    a.label("colend");
    a.l("p." + st + " x12, " + std::to_string(p.ew) + "(x11!)");
    a.label("rowend");
    a.l("addi x10, x10, " +
        std::to_string(stride - static_cast<int>(p.ow) * p.ew));
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

// Builtin conv 3x3 i8: the coefficient rows live in three packed registers;
// four outputs are computed per loop from a register-file window, sliding it
// with shuffles and loading one new word per image row.
std::string gen_conv_builtin_3x3_i8(const KernelSpec& spec,
                                    const KernelInputs& in, uint32_t core) {
  const ConvParams p = conv_params(spec, in, core);
  // The group structure advances each row pointer by exactly one image row
  // only when two tail outputs remain, i.e. the image width is 0 mod 4.
  if (p.ow % 4 != 2)
    throw std::runtime_error("conv3x3 i8 builtin: width must be 0 mod 4");
  const uint32_t groups = p.ow / 4;
  const uint32_t tail = p.ow % 4;
  Asm a;
  // x16..x18 coef rows, x19..x21 cur, x22..x24 nxt, x25..x28 position masks,
  // x29 t, x12 acc, x30 outp, x5..x7 row pointers, x11 pout, x13 rowcnt
  if (p.rows.count() > 0) {
    a.li(10, static_cast<int32_t>(kPackedBase + core * kPackedCopyStep));
    for (int r = 0; r < 3; ++r) a.l("p.lw " + rg(16 + r) + ", 4(x10!)");
    // Mask for output position q selects window bytes q..q+2 of cur:nxt.
    for (int q = 0; q < 4; ++q) {
      uint32_t m = 0;
      for (int j = 0; j < 3; ++j) {
        const int idx = q + j;
        const uint32_t enc =
            idx < 4 ? static_cast<uint32_t>(idx)
                    : 4u | static_cast<uint32_t>(idx - 4);
        m |= enc << (8 * j);
      }
      a.li(25 + q, static_cast<int32_t>(m));
    }
    for (int r = 0; r < 3; ++r)
      a.li(5 + r, static_cast<int32_t>(p.img(p.rows.begin + static_cast<uint32_t>(r))));
    a.li(11, static_cast<int32_t>(p.out(p.rows.begin)));
    a.li(13, static_cast<int32_t>(p.rows.count()));

    auto emit_output = [&](int q, bool use_nxt) {
      a.l("mv x12, x0");
      for (int r = 0; r < 3; ++r) {
        a.l("mv x29, " + rg(19 + r));
        a.l("pv.shuffle2.b x29, " + rg(use_nxt ? 22 + r : 19 + r) + ", " +
            rg(25 + q));
        a.l("pv.sdotp.sb x12, x29, " + rg(16 + r));
      }
      a.l("p.addRN x12, x12, x0, " + std::to_string(p.shift));
      a.l("p.clip x12, x12, 8");
      if (q == 0)
        a.l("mv x30, x12");
      else
        a.l("p.insert x30, x12, 8, " + std::to_string(8 * q));
    };

    a.label("rowloop");
    for (int r = 0; r < 3; ++r) a.l("p.lw " + rg(19 + r) + ", 4(" + rg(5 + r) + "!)");
    if (groups > 0) {
      a.l("lp.setupi L0, " + std::to_string(groups) + ", groupend");
      for (int r = 0; r < 3; ++r)
        a.l("p.lw " + rg(22 + r) + ", 4(" + rg(5 + r) + "!)");
      for (int q = 0; q < 4; ++q) emit_output(q, true);
      a.l("p.sh x30, 2(x11!)");
      a.l("srli x30, x30, 16");
      a.l("p.sh x30, 2(x11!)");
      a.l("mv x19, x22");
      a.l("mv x20, x23");
      a.label("groupend");
      a.l("mv x21, x24");
    }
    // Tail outputs use only the four resident columns.
    for (uint32_t q = 0; q < tail; ++q) emit_output(static_cast<int>(q), false);
    if (tail == 1) {
      a.l("p.sb x30, 1(x11!)");
    } else if (tail == 2) {
      a.l("p.sh x30, 2(x11!)");
    }
    for (int r = 0; r < 3; ++r)
      a.l("addi " + rg(5 + r) + ", " + rg(5 + r) + ", " +
          std::to_string(static_cast<int>(p.stride) - static_cast<int>(p.w)));
    a.l("addi x13, x13, -1");
    a.l("bne x13, x0, rowloop");
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

// Builtin conv 5x5 i8: the full 25-byte window lives flattened in seven
// registers (with seven packed coefficient registers); each step loads the
// five new column bytes, shifts the flat window one byte with shuffles and
// computes the inner product with exactly seven sdotp.
std::string gen_conv_builtin_5x5_i8(const KernelSpec& spec,
                                    const KernelInputs& in, uint32_t core) {
  const ConvParams p = conv_params(spec, in, core);
  Asm a;
  // x16..x22 coef, x23..x29 window, x30 shift mask, x5..x9 row pointers,
  // x14/x15 new-byte temps, x12 acc, x11 pout, x13 rowcnt
  if (p.rows.count() > 0) {
    a.li(10, static_cast<int32_t>(kPackedBase + core * kPackedCopyStep));
    for (int i = 0; i < 7; ++i) a.l("p.lw " + rg(16 + i) + ", 4(x10!)");
    a.li(30, 0x04030201);  // each lane: next byte; top lane: first of rs1
    for (int r = 0; r < 5; ++r)
      a.li(5 + r, static_cast<int32_t>(p.img(p.rows.begin + static_cast<uint32_t>(r))));
    a.li(11, static_cast<int32_t>(p.out(p.rows.begin)));
    a.li(13, static_cast<int32_t>(p.rows.count()));

    // One column slide: shift flat window left one byte, insert the five new
    // bytes at flat positions 4, 9, 14, 19, 24.
    auto emit_slide = [&] {
      a.l("p.lb x14, 1(x5!)");
      a.l("p.lb x15, 1(x6!)");
      for (int i = 0; i < 6; ++i)
        a.l("pv.shuffle2.b " + rg(23 + i) + ", " + rg(24 + i) + ", x30");
      a.l("pv.insert.b x24, x14, 0");  // flat 4
      a.l("p.lb x14, 1(x7!)");
      a.l("pv.insert.b x25, x15, 1");  // flat 9
      a.l("p.lb x15, 1(x8!)");
      a.l("pv.insert.b x26, x14, 2");  // flat 14
      a.l("p.lb x14, 1(x9!)");
      a.l("pv.insert.b x27, x15, 3");  // flat 19
      a.l("pv.insert.b x29, x14, 0");  // flat 24
    };

    a.label("rowloop");
    for (int s = 0; s < 4; ++s) emit_slide();
    a.l("lp.setupi L0, " + std::to_string(p.ow) + ", colend");
    emit_slide();
    a.l("mv x12, x0");
    for (int i = 0; i < 7; ++i)
      a.l("pv.sdotp.sb x12, " + rg(23 + i) + ", " + rg(16 + i));
    a.l("p.addRN x12, x12, x0, " + std::to_string(p.shift));
    a.l("p.clip x12, x12, 8");
    a.label("colend");
    a.l("p.sb x12, 1(x11!)");
    for (int r = 0; r < 5; ++r)
      a.l("addi " + rg(5 + r) + ", " + rg(5 + r) + ", " +
          std::to_string(static_cast<int>(p.stride) - static_cast<int>(p.w)));
    a.l("addi x13, x13, -1");
    a.l("bne x13, x0, rowloop");
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

// Builtin conv 7x7 i8: 49 coefficients exceed the register file, so rows are
// reloaded as padded words; fourteen packed coefficient registers remain
// resident. Two sdotp per image row.
std::string gen_conv_builtin_7x7_i8(const KernelSpec& spec,
                                    const KernelInputs& in, uint32_t core) {
  const ConvParams p = conv_params(spec, in, core);
  Asm a;
  // x16..x29 coef pairs, x10 px, x11 pout, x12 acc, x14/x15 + x5/x6 pixel
  // word pairs (ping-pong), x13 rowcnt
  if (p.rows.count() > 0) {
    a.li(9, static_cast<int32_t>(kPackedBase + core * kPackedCopyStep));
    for (int i = 0; i < 14; ++i) a.l("p.lw " + rg(16 + i) + ", 4(x9!)");
    a.li(10, static_cast<int32_t>(p.img(p.rows.begin)));
    a.li(11, static_cast<int32_t>(p.out(p.rows.begin)));
    a.li(13, static_cast<int32_t>(p.rows.count()));

    auto load_row = [&](int r, int set) {
      const int base = r * static_cast<int>(p.stride);
      a.l("lw " + rg(set == 0 ? 14 : 5) + ", " + std::to_string(base) + "(x10)");
      a.l("lw " + rg(set == 0 ? 15 : 6) + ", " + std::to_string(base + 4) +
          "(x10)");
    };
    auto dot_row = [&](int r, int set) {
      a.l("pv.sdotp.sb x12, " + rg(set == 0 ? 14 : 5) + ", " + rg(16 + 2 * r));
      a.l("pv.sdotp.sb x12, " + rg(set == 0 ? 15 : 6) + ", " +
          rg(16 + 2 * r + 1));
    };

    a.l("lp.setupi L1, " + std::to_string(p.rows.count()) + ", rowend");
    a.l("lp.setupi L0, " + std::to_string(p.ow) + ", colend");
    load_row(0, 0);
    a.l("mv x12, x0");
    for (int r = 1; r < 7; ++r) {
      load_row(r, r % 2);
      dot_row(r - 1, (r - 1) % 2);
    }
    dot_row(6, 0);
    a.l("addi x10, x10, 1");
    a.l("p.addRN x12, x12, x0, " + std::to_string(p.shift));
    a.l("p.clip x12, x12, 8");
    a.label("colend");
    a.l("p.sb x12, 1(x11!)");
    a.label("rowend");
    a.l("addi x10, x10, " +
        std::to_string(static_cast<int>(p.stride) - static_cast<int>(p.ow)));
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

// Builtin conv 3x3 i16: nine halfword window flattened into five registers,
// computed with four sdotp.sh plus one mac tail.
std::string gen_conv_builtin_3x3_i16(const KernelSpec& spec,
                                     const KernelInputs& in, uint32_t core) {
  const ConvParams p = conv_params(spec, in, core);
  Asm a;
  // x16..x20 window, x21..x25 coef, x26 shift mask, x5..x7 row pointers,
  // x14/x15 temps, x12 acc, x11 pout, x13 rowcnt
  if (p.rows.count() > 0) {
    a.li(10, static_cast<int32_t>(kPackedBase + core * kPackedCopyStep));
    for (int i = 0; i < 5; ++i) a.l("p.lw " + rg(21 + i) + ", 4(x10!)");
    a.li(26, 0x00020001);
    for (int r = 0; r < 3; ++r)
      a.li(5 + r, static_cast<int32_t>(p.img(p.rows.begin + static_cast<uint32_t>(r))));
    a.li(11, static_cast<int32_t>(p.out(p.rows.begin)));
    a.li(13, static_cast<int32_t>(p.rows.count()));

    auto emit_slide = [&] {
      a.l("p.lh x14, 2(x5!)");
      a.l("p.lh x15, 2(x6!)");
      for (int i = 0; i < 4; ++i)
        a.l("pv.shuffle2.h " + rg(16 + i) + ", " + rg(17 + i) + ", x26");
      a.l("pv.insert.h x17, x14, 0");  // flat 2
      a.l("p.lh x14, 2(x7!)");
      a.l("pv.insert.h x18, x15, 1");  // flat 5
      a.l("pv.insert.h x20, x14, 0");  // flat 8
    };

    a.label("rowloop");
    for (int s = 0; s < 2; ++s) emit_slide();
    a.l("lp.setupi L0, " + std::to_string(p.ow) + ", colend");
    emit_slide();
    a.l("mv x12, x0");
    for (int i = 0; i < 4; ++i)
      a.l("pv.sdotp.sh x12, " + rg(16 + i) + ", " + rg(21 + i));
    a.l("p.mac x12, x20, x25");
    a.l("p.addRN x12, x12, x0, " + std::to_string(p.shift));
    a.l("p.clip x12, x12, 16");
    a.label("colend");
    a.l("p.sh x12, 2(x11!)");
    for (int r = 0; r < 3; ++r)
      a.l("addi " + rg(5 + r) + ", " + rg(5 + r) + ", " +
          std::to_string(static_cast<int>(p.stride) -
                         2 * static_cast<int>(p.w)));
    a.l("addi x13, x13, -1");
    a.l("bne x13, x0, rowloop");
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

// Builtin conv 5x5 i16: per-row loads (two words and the odd half) with two
// sdotp.sh and one mac tail per row; coefficients stay in registers.
std::string gen_conv_builtin_5x5_i16(const KernelSpec& spec,
                                     const KernelInputs& in, uint32_t core) {
  const ConvParams p = conv_params(spec, in, core);
  Asm a;
  // x16..x25 coef vector pairs, x26..x30 coef tails, x10 px, x11 pout,
  // x12 acc, x14/x15/x7 + x5/x6/x9 row load sets, x13 rowcnt
  if (p.rows.count() > 0) {
    a.li(8, static_cast<int32_t>(kPackedBase + core * kPackedCopyStep));
    for (int i = 0; i < 10; ++i) a.l("p.lw " + rg(16 + i) + ", 4(x8!)");
    for (int i = 0; i < 5; ++i) a.l("p.lw " + rg(26 + i) + ", 4(x8!)");
    a.li(10, static_cast<int32_t>(p.img(p.rows.begin)));
    a.li(11, static_cast<int32_t>(p.out(p.rows.begin)));
    a.li(13, static_cast<int32_t>(p.rows.count()));

    auto load_row = [&](int r, int set) {
      const int base = r * static_cast<int>(p.stride);
      a.l("lw " + rg(set == 0 ? 14 : 5) + ", " + std::to_string(base) + "(x10)");
      a.l("lw " + rg(set == 0 ? 15 : 6) + ", " + std::to_string(base + 4) +
          "(x10)");
      a.l("lh " + rg(set == 0 ? 7 : 9) + ", " + std::to_string(base + 8) +
          "(x10)");
    };
    auto dot_row = [&](int r, int set) {
      a.l("pv.sdotp.sh x12, " + rg(set == 0 ? 14 : 5) + ", " + rg(16 + 2 * r));
      a.l("pv.sdotp.sh x12, " + rg(set == 0 ? 15 : 6) + ", " +
          rg(16 + 2 * r + 1));
      a.l("p.mac x12, " + rg(set == 0 ? 7 : 9) + ", " + rg(26 + r));
    };

    a.l("lp.setupi L1, " + std::to_string(p.rows.count()) + ", rowend");
    a.l("lp.setupi L0, " + std::to_string(p.ow) + ", colend");
    load_row(0, 0);
    a.l("mv x12, x0");
    for (int r = 1; r < 5; ++r) {
      load_row(r, r % 2);
      dot_row(r - 1, (r - 1) % 2);
    }
    dot_row(4, 0);
    a.l("addi x10, x10, 2");
    a.l("p.addRN x12, x12, x0, " + std::to_string(p.shift));
    a.l("p.clip x12, x12, 16");
    a.label("colend");
    a.l("p.sh x12, 2(x11!)");
    a.label("rowend");
    a.l("addi x10, x10, " +
        std::to_string(static_cast<int>(p.stride) -
                       2 * static_cast<int>(p.ow)));
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

// Builtin conv 7x7 i16: rows as four packed words (padded), coefficient
// vectors streamed from memory since they exceed the register file.
std::string gen_conv_builtin_7x7_i16(const KernelSpec& spec,
                                     const KernelInputs& in, uint32_t core) {
  const ConvParams p = conv_params(spec, in, core);
  Asm a;
  // x16..x19 pixel words, x20..x23 coef words, x10 px, x8 coef ptr,
  // x11 pout, x12 acc, x13 rowcnt
  if (p.rows.count() > 0) {
    a.li(10, static_cast<int32_t>(p.img(p.rows.begin)));
    a.li(11, static_cast<int32_t>(p.out(p.rows.begin)));
    a.li(13, static_cast<int32_t>(p.rows.count()));
    a.li(8, static_cast<int32_t>(kPackedBase + core * kPackedCopyStep));

    a.l("lp.setupi L1, " + std::to_string(p.rows.count()) + ", rowend");
    a.l("lp.setupi L0, " + std::to_string(p.ow) + ", colend");
    a.l("mv x12, x0");
    for (int r = 0; r < 7; ++r) {
      for (int q = 0; q < 4; ++q)
        a.l("lw " + rg(16 + q) + ", " +
            std::to_string(r * static_cast<int>(p.stride) + q * 4) + "(x10)");
      for (int q = 0; q < 4; ++q) a.l("p.lw " + rg(20 + q) + ", 4(x8!)");
      for (int q = 0; q < 4; ++q)
        a.l("pv.sdotp.sh x12, " + rg(16 + q) + ", " + rg(20 + q));
    }
    a.l("addi x8, x8, -112");
    a.l("addi x10, x10, 2");
    a.l("p.addRN x12, x12, x0, " + std::to_string(p.shift));
    a.l("p.clip x12, x12, 16");
    a.label("colend");
    a.l("p.sh x12, 2(x11!)");
    a.label("rowend");
    a.l("addi x10, x10, " +
        std::to_string(static_cast<int>(p.stride) -
                       2 * static_cast<int>(p.ow)));
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

std::string gen_conv(const KernelSpec& spec, const KernelInputs& in,
                     uint32_t core) {
  switch (spec.variant) {
    case Variant::kBaseline:
      return gen_conv_baseline(spec, in, core);
    case Variant::kExt:
      return gen_conv_ext(spec, in, core);
    case Variant::kBuiltin:
      break;
  }
  if (spec.elem == ElemType::kI8) {
    if (in.k == 3) return gen_conv_builtin_3x3_i8(spec, in, core);
    if (in.k == 5) return gen_conv_builtin_5x5_i8(spec, in, core);
    return gen_conv_builtin_7x7_i8(spec, in, core);
  }
  if (in.k == 3) return gen_conv_builtin_3x3_i16(spec, in, core);
  if (in.k == 5) return gen_conv_builtin_5x5_i16(spec, in, core);
  return gen_conv_builtin_7x7_i16(spec, in, core);
}

// ---------------------------------------------------------------------------
// Matrix multiplication, C = A * B^T (B stored transposed, row-major)
// ---------------------------------------------------------------------------

std::string gen_matmul(const KernelSpec& spec, const KernelInputs& in,
                       uint32_t core) {
  const uint32_t n = in.w;
  const int ew = elem_width(spec.elem);
  const Range rows = strip(n, core, spec.cores);
  Asm a;
  const std::string ld = load_mn(spec.elem);
  const std::string pld = spec.elem == ElemType::kI8 ? "p.lb" : "p.lh";
  // x10 pa, x11 pb, x12 pc, x14 a, x15 b, x7 t, x8 acc, x9 kend,
  // x5 icnt, x28 pb base
  if (rows.count() > 0) {
    if (spec.variant == Variant::kBuiltin) a.directive(".nocompress");
    a.li(10, static_cast<int32_t>(kImgBase + rows.begin * n * static_cast<uint32_t>(ew)));
    a.li(28, static_cast<int32_t>(kIn2Base));
    a.li(12, static_cast<int32_t>(kOutBase + rows.begin * n * 4));
    a.li(5, static_cast<int32_t>(rows.count()));
    const int kbytes = static_cast<int>(n) * ew;

    switch (spec.variant) {
      case Variant::kBaseline:
        a.label("iloop");
        a.l("mv x11, x28");
        a.li(6, static_cast<int32_t>(n));
        a.label("jloop");
        a.l("mv x8, x0");
        a.l("addi x9, x11, " + std::to_string(kbytes));
        a.label("kloop");
        a.l(ld + " x14, 0(x10)");
        a.l(ld + " x15, 0(x11)");
        a.l("addi x10, x10, " + std::to_string(ew));
        a.l("addi x11, x11, " + std::to_string(ew));
        a.l("mul x7, x14, x15");
        a.l("add x8, x8, x7");
        a.l("bne x11, x9, kloop");
        a.l("sw x8, 0(x12)");
        a.l("addi x12, x12, 4");
        a.l("addi x10, x10, " + std::to_string(-kbytes));
        a.l("addi x6, x6, -1");
        a.l("bne x6, x0, jloop");
        a.l("addi x10, x10, " + std::to_string(kbytes));
        a.l("addi x5, x5, -1");
        a.l("bne x5, x0, iloop");
        break;
      case Variant::kExt:
        a.label("iloop");
        a.l("mv x11, x28");
        a.l("lp.setupi L1, " + std::to_string(n) + ", jend");
        a.l("mv x8, x0");
        a.l("lp.setupi L0, " + std::to_string(n) + ", kend");
        a.l(pld + " x14, " + std::to_string(ew) + "(x10!)");
        a.l(pld + " x15, " + std::to_string(ew) + "(x11!)");
        a.l("mul x7, x14, x15");
        a.label("kend");
        a.l("add x8, x8, x7");
        a.l("p.sw x8, 4(x12!)");
        a.label("jend");
        a.l("addi x10, x10, " + std::to_string(-kbytes));
        a.l("addi x10, x10, " + std::to_string(kbytes));
        a.l("addi x5, x5, -1");
        a.l("bne x5, x0, iloop");
        break;
      case Variant::kBuiltin: {
        const uint32_t lanes = spec.elem == ElemType::kI8 ? 4 : 2;
        const std::string dot =
            spec.elem == ElemType::kI8 ? "pv.sdotp.sb" : "pv.sdotp.sh";
        // Align the k-loop body to a fetch line so back-jumps stay free.
        while ((a.instrs + 4) % 4 != 0) a.l("nop");
        a.label("iloop");
        a.l("mv x11, x28");
        a.l("lp.setupi L1, " + std::to_string(n) + ", jend");
        a.l("mv x8, x0");
        a.l("lp.setupi L0, " + std::to_string(n / lanes) + ", kend");
        a.l("p.lw x14, 4(x10!)");
        a.l("p.lw x15, 4(x11!)");
        a.label("kend");
        a.l(dot + " x8, x14, x15");
        a.l("p.sw x8, 4(x12!)");
        a.label("jend");
        a.l("addi x10, x10, " + std::to_string(-kbytes));
        a.l("addi x10, x10, " + std::to_string(kbytes));
        a.l("addi x5, x5, -1");
        a.l("bne x5, x0, iloop");
        break;
      }
    }
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

// ---------------------------------------------------------------------------
// FIR filter, 16 taps, fully unrolled tap loop
// ---------------------------------------------------------------------------

std::string gen_fir(const KernelSpec& spec, const KernelInputs& in,
                    uint32_t core) {
  const int ew = elem_width(spec.elem);
  const int taps = static_cast<int>(in.k);
  const Range out = strip(in.w, core, spec.cores);
  Asm a;
  const std::string ld = load_mn(spec.elem), st = store_mn(spec.elem);
  // x10 px, x11 py, x12 acc, x13 cnt, x14/x15 x temps, x7/x9 h temps,
  // x28 h base
  if (out.count() > 0) {
    a.li(10, static_cast<int32_t>(kImgBase + out.begin * static_cast<uint32_t>(ew)));
    a.li(11, static_cast<int32_t>(kOutBase + out.begin * static_cast<uint32_t>(ew)));
    a.li(28, static_cast<int32_t>(kCoefBase));
    const int round = 1 << (in.shift - 1);

    auto emit_loads = [&](int t) {
      a.l(ld + " " + rg(14 + t % 2) + ", " + std::to_string(t * ew) + "(x10)");
      a.l(ld + " " + rg(t % 2 == 0 ? 7 : 9) + ", " + std::to_string(t * ew) +
          "(x28)");
    };
    auto emit_mul = [&](int t) {
      const std::string h = rg(t % 2 == 0 ? 7 : 9);
      if (t == 0) {
        a.l("mul x12, x14, " + h);
      } else {
        a.l("mul x6, " + rg(14 + t % 2) + ", " + h);
        a.l("add x12, x12, x6");
      }
    };

    switch (spec.variant) {
      case Variant::kBaseline:
        a.li(13, static_cast<int32_t>(out.count()));
        a.label("nloop");
        emit_loads(0);
        emit_loads(1);
        for (int t = 2; t < taps; ++t) {
          emit_mul(t - 2);
          emit_loads(t);
        }
        emit_mul(taps - 2);
        emit_mul(taps - 1);
        a.l("addi x12, x12, " + std::to_string(round));
        a.l("srai x12, x12, " + std::to_string(in.shift));
        a.l(st + " x12, 0(x11)");
        a.l("addi x11, x11, " + std::to_string(ew));
        a.l("addi x10, x10, " + std::to_string(ew));
        a.l("addi x13, x13, -1");
        a.l("bne x13, x0, nloop");
        break;
      case Variant::kExt:
        a.l("lp.setupi L0, " + std::to_string(out.count()) + ", nend");
        emit_loads(0);
        emit_loads(1);
        for (int t = 2; t < taps; ++t) {
          emit_mul(t - 2);
          emit_loads(t);
        }
        emit_mul(taps - 2);
        emit_mul(taps - 1);
        a.l("p.addRN x12, x12, x0, " + std::to_string(in.shift));
        a.l("addi x10, x10, " + std::to_string(ew));
        a.label("nend");
        a.l("p." + st + " x12, " + std::to_string(ew) + "(x11!)");
        break;
      case Variant::kBuiltin: {
        const int lanes = spec.elem == ElemType::kI8 ? 4 : 2;
        const int vecs = taps / lanes;  // 4 or 8 packed tap registers
        const std::string dot =
            spec.elem == ElemType::kI8 ? "pv.sdotp.sb" : "pv.sdotp.sh";
        a.li(8, static_cast<int32_t>(kPackedBase));
        for (int v = 0; v < vecs; ++v) a.l("p.lw " + rg(16 + v) + ", 4(x8!)");
        a.l("lp.setupi L0, " + std::to_string(out.count()) + ", nend");
        for (int v = 0; v < vecs; ++v)
          a.l("lw " + rg(24 + v % 8) + ", " + std::to_string(v * 4) + "(x10)");
        a.l("mv x12, x0");
        for (int v = 0; v < vecs; ++v)
          a.l(dot + " x12, " + rg(24 + v % 8) + ", " + rg(16 + v));
        a.l("p.addRN x12, x12, x0, " + std::to_string(in.shift));
        a.l("addi x10, x10, " + std::to_string(ew));
        a.label("nend");
        a.l("p." + st + " x12, " + std::to_string(ew) + "(x11!)");
        break;
      }
    }
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

// ---------------------------------------------------------------------------
// Element-wise fixed point kernels
// ---------------------------------------------------------------------------

std::string gen_vecadd(const KernelSpec& spec, const KernelInputs& in,
                       uint32_t core) {
  const Range r = strip(in.w, core, spec.cores);
  Asm a;
  // x10 pa, x11 pb, x9 py, x14 a, x15 b, x5/x6 bounds, x13 cnt
  if (r.count() > 0) {
    a.li(10, static_cast<int32_t>(kImgBase + r.begin * 2));
    a.li(11, static_cast<int32_t>(kIn2Base + r.begin * 2));
    a.li(9, static_cast<int32_t>(kOutBase + r.begin * 2));
    if (spec.variant == Variant::kBaseline) {
      a.li(5, -(1 << (in.clip_bits - 1)));
      a.li(6, (1 << (in.clip_bits - 1)) - 1);
      a.li(13, static_cast<int32_t>(r.count()));
      a.label("nloop");
      a.l("lh x14, 0(x10)");
      a.l("lh x15, 0(x11)");
      a.l("add x14, x14, x15");
      a.l("blt x14, x5, cliplo");
      a.l("blt x6, x14, cliphi");
      a.label("store");
      a.l("sh x14, 0(x9)");
      a.l("addi x10, x10, 2");
      a.l("addi x11, x11, 2");
      a.l("addi x9, x9, 2");
      a.l("addi x13, x13, -1");
      a.l("bne x13, x0, nloop");
      if (spec.cores > 1) a.barrier(31);
      a.l("j end");
      a.label("cliplo");
      a.l("mv x14, x5");
      a.l("j store");
      a.label("cliphi");
      a.l("mv x14, x6");
      a.l("j store");
      a.label("end");
      return a.text;
    }
    a.l("lp.setupi L0, " + std::to_string(r.count()) + ", nend");
    a.l("p.lh x14, 2(x10!)");
    a.l("p.lh x15, 2(x11!)");
    a.l("add x14, x14, x15");
    a.l("p.clip x14, x14, " + std::to_string(in.clip_bits));
    a.label("nend");
    a.l("p.sh x14, 2(x9!)");
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

std::string gen_mulq(const KernelSpec& spec, const KernelInputs& in,
                     uint32_t core) {
  const Range r = strip(in.w, core, spec.cores);
  Asm a;
  // x10 pa, x11 pb, x9 py, x14 a, x15 b, x7 round const, x13 cnt
  if (r.count() > 0) {
    a.li(10, static_cast<int32_t>(kImgBase + r.begin * 2));
    a.li(11, static_cast<int32_t>(kIn2Base + r.begin * 2));
    a.li(9, static_cast<int32_t>(kOutBase + r.begin * 2));
    if (spec.variant == Variant::kBaseline) {
      a.li(7, 1 << (in.shift - 1));
      a.li(13, static_cast<int32_t>(r.count()));
      a.label("nloop");
      a.l("lh x14, 0(x10)");
      a.l("lh x15, 0(x11)");
      a.l("addi x10, x10, 2");
      a.l("addi x11, x11, 2");
      a.l("mul x14, x14, x15");
      a.l("add x14, x14, x7");
      a.l("srai x14, x14, " + std::to_string(in.shift));
      a.l("sh x14, 0(x9)");
      a.l("addi x9, x9, 2");
      a.l("addi x13, x13, -1");
      a.l("bne x13, x0, nloop");
    } else {
      a.l("lp.setupi L0, " + std::to_string(r.count()) + ", nend");
      a.l("p.lh x14, 2(x10!)");
      a.l("p.lh x15, 2(x11!)");
      a.l("p.mulsRN x14, x14, x15, " + std::to_string(in.shift));
      a.label("nend");
      a.l("p.sh x14, 2(x9!)");
    }
  }
  if (spec.cores > 1) a.barrier(31);
  return a.text;
}

// ---------------------------------------------------------------------------
// Data image
// ---------------------------------------------------------------------------

void write_preload(const KernelSpec& spec, const KernelInputs& in,
                   KernelBuild& b) {
  const int ew = elem_width(spec.elem);
  auto& img = b.preload;
  switch (spec.kernel) {
    case Kernel::kConv3x3:
    case Kernel::kConv5x5:
    case Kernel::kConv7x7: {
      // image rows at the padded stride
      const uint32_t stride = conv_stride(in.w, ew);
      for (uint32_t r = 0; r < in.w; ++r)
        for (uint32_t c = 0; c < in.w; ++c)
          put(img, kImgBase + r * stride + c * static_cast<uint32_t>(ew),
              static_cast<uint32_t>(in.a[r * in.w + c]), ew);
      put_elems(img, kCoefBase, in.coef, ew);
      const int k = static_cast<int>(in.k);
      // per-core packed coefficient copies for the builtin variants
      for (uint32_t copy = 0; copy < 4; ++copy) {
        uint32_t at = kPackedBase + copy * kPackedCopyStep;
        if (spec.elem == ElemType::kI8) {
          if (k == 3) {  // rows padded to 4 bytes
            for (int r = 0; r < 3; ++r) {
              for (int c = 0; c < 3; ++c)
                put(img, at++, static_cast<uint32_t>(in.coef[static_cast<size_t>(r * 3 + c)]), 1);
              put(img, at++, 0, 1);
            }
          } else if (k == 5) {  // flat 25 bytes + 3 pad
            for (int i = 0; i < 25; ++i)
              put(img, at++, static_cast<uint32_t>(in.coef[static_cast<size_t>(i)]), 1);
            for (int i = 0; i < 3; ++i) put(img, at++, 0, 1);
          } else {  // rows padded to 8 bytes
            for (int r = 0; r < 7; ++r) {
              for (int c = 0; c < 7; ++c)
                put(img, at++, static_cast<uint32_t>(in.coef[static_cast<size_t>(r * 7 + c)]), 1);
              put(img, at++, 0, 1);
            }
          }
        } else {
          if (k == 3) {  // flat 9 halves + 1 pad
            for (int i = 0; i < 9; ++i) {
              put(img, at, static_cast<uint32_t>(in.coef[static_cast<size_t>(i)]), 2);
              at += 2;
            }
            put(img, at, 0, 2);
          } else if (k == 5) {  // per row: 4 packed halves, then 5 tail words
            for (int r = 0; r < 5; ++r)
              for (int c = 0; c < 4; ++c) {
                put(img, at, static_cast<uint32_t>(in.coef[static_cast<size_t>(r * 5 + c)]), 2);
                at += 2;
              }
            for (int r = 0; r < 5; ++r) {
              put(img, at, static_cast<uint32_t>(in.coef[static_cast<size_t>(r * 5 + 4)]), 4);
              at += 4;
            }
          } else {  // rows padded to 8 halves
            for (int r = 0; r < 7; ++r) {
              for (int c = 0; c < 7; ++c) {
                put(img, at, static_cast<uint32_t>(in.coef[static_cast<size_t>(r * 7 + c)]), 2);
                at += 2;
              }
              put(img, at, 0, 2);
              at += 2;
            }
          }
        }
      }
      break;
    }
    case Kernel::kMatmul:
      put_elems(img, kImgBase, in.a, ew);
      put_elems(img, kIn2Base, in.b, ew);
      break;
    case Kernel::kFir: {
      put_elems(img, kImgBase, in.a, ew);
      put_elems(img, kCoefBase, in.coef, ew);
      // packed taps for the builtin variant
      uint32_t at = kPackedBase;
      for (size_t t = 0; t < in.coef.size(); ++t) {
        put(img, at, static_cast<uint32_t>(in.coef[t]), ew);
        at += static_cast<uint32_t>(ew);
      }
      break;
    }
    case Kernel::kVecaddClip:
    case Kernel::kMulqNorm:
      put_elems(img, kImgBase, in.a, 2);
      put_elems(img, kIn2Base, in.b, 2);
      break;
  }
}

}  // namespace

KernelBuild generate(const KernelSpec& spec) {
  if ((spec.kernel == Kernel::kVecaddClip || spec.kernel == Kernel::kMulqNorm) &&
      spec.variant == Variant::kBuiltin)
    throw std::runtime_error(spec.name() + ": no builtin variant");
  if (spec.kernel == Kernel::kMatmul &&
      spec.dim_or_default() % 4 != 0)
    throw std::runtime_error(spec.name() + ": dimension must be a multiple of 4");
  if (spec.kernel == Kernel::kFir && spec.dim_or_default() < spec.cores)
    throw std::runtime_error(spec.name() + ": too few outputs");
  {
    // inputs must stay below the output region, outputs inside the TCDM
    const uint32_t dim = spec.dim_or_default();
    const uint32_t ew = spec.elem == ElemType::kI8 ? 1 : 2;
    uint32_t in_end = 0, out_bytes = 0;
    switch (spec.kernel) {
      case Kernel::kConv3x3:
      case Kernel::kConv5x5:
      case Kernel::kConv7x7: {
        const uint32_t k = spec.kernel == Kernel::kConv3x3  ? 3u
                           : spec.kernel == Kernel::kConv5x5 ? 5u
                                                             : 7u;
        in_end = kImgBase + dim * conv_stride(dim, static_cast<int>(ew));
        out_bytes = (dim - k + 1) * (dim - k + 1) * ew;
        break;
      }
      case Kernel::kMatmul:
        in_end = kIn2Base + dim * dim * ew;
        out_bytes = dim * dim * 4;
        break;
      case Kernel::kFir:
        in_end = std::max(kIn2Base, kImgBase + (dim + 15) * ew);
        out_bytes = dim * ew;
        break;
      default:
        in_end = kIn2Base + dim * 2;
        out_bytes = dim * 2;
        break;
    }
    if (in_end > kOutBase ||
        kOutBase + out_bytes > MemorySystem::kDefaultSize)
      throw std::runtime_error(spec.name() +
                               ": dimension too large for the memory layout");
  }

  const KernelInputs in = make_inputs(spec);
  KernelBuild b;
  write_preload(spec, in, b);
  b.golden = golden_bytes(spec, in);
  b.out_addr = kOutBase;
  b.out_bytes = static_cast<uint32_t>(b.golden.size());
  switch (spec.kernel) {
    case Kernel::kConv3x3:
    case Kernel::kConv5x5:
    case Kernel::kConv7x7: {
      const uint32_t ow = in.w - in.k + 1;
      b.outputs = static_cast<uint64_t>(ow) * ow;
      break;
    }
    case Kernel::kMatmul:
      b.outputs = static_cast<uint64_t>(in.w) * in.w;
      break;
    default:
      b.outputs = in.w;
      break;
  }
  for (uint32_t core = 0; core < spec.cores; ++core) {
    switch (spec.kernel) {
      case Kernel::kConv3x3:
      case Kernel::kConv5x5:
      case Kernel::kConv7x7:
        b.asm_texts.push_back(gen_conv(spec, in, core));
        break;
      case Kernel::kMatmul:
        b.asm_texts.push_back(gen_matmul(spec, in, core));
        break;
      case Kernel::kFir:
        b.asm_texts.push_back(gen_fir(spec, in, core));
        break;
      case Kernel::kVecaddClip:
        b.asm_texts.push_back(gen_vecadd(spec, in, core));
        break;
      case Kernel::kMulqNorm:
        b.asm_texts.push_back(gen_mulq(spec, in, core));
        break;
    }
  }
  return b;
}

}  // namespace bench
}  // namespace rvdsp
