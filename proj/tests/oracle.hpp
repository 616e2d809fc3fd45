#pragma once

// Independent reference semantics for the packed/DSP operations, used to
// cross-check the simulator. Everything is computed lane-by-lane in 64-bit
// integers with explicit masking and bit loops, deliberately avoiding the
// implementation's helpers.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

inline int64_t sext(uint64_t v, int bits) {
  const uint64_t m = 1ull << (bits - 1);
  const uint64_t x = v & ((1ull << bits) - 1);
  return static_cast<int64_t>((x ^ m) - m);
}

inline std::vector<uint64_t> split(uint32_t w, int lane_bits) {
  std::vector<uint64_t> lanes;
  for (int at = 0; at < 32; at += lane_bits)
    lanes.push_back((w >> at) & ((1ull << lane_bits) - 1));
  return lanes;
}

inline uint32_t join(const std::vector<uint64_t>& lanes, int lane_bits) {
  uint64_t w = 0;
  for (size_t i = 0; i < lanes.size(); ++i)
    w |= (lanes[i] & ((1ull << lane_bits) - 1)) << (lane_bits * i);
  return static_cast<uint32_t>(w);
}

enum class VecOp { kAdd, kSub, kAvg, kMin, kMax, kSrl, kSra, kSll, kAnd, kOr, kXor, kCmpeq, kCmpgt };

inline uint32_t vec_alu(VecOp op, uint32_t a, uint32_t b, int lane_bits) {
  const auto la = split(a, lane_bits), lb = split(b, lane_bits);
  std::vector<uint64_t> lo(la.size());
  const uint64_t mask = (1ull << lane_bits) - 1;
  for (size_t i = 0; i < la.size(); ++i) {
    const int64_t sa = sext(la[i], lane_bits), sb = sext(lb[i], lane_bits);
    const int sh = static_cast<int>(lb[i] & (lane_bits == 8 ? 7 : 15));
    int64_t r = 0;
    switch (op) {
      case VecOp::kAdd: r = sa + sb; break;
      case VecOp::kSub: r = sa - sb; break;
      case VecOp::kAvg: {
        // arithmetic shift right by one == floor((sa+sb)/2)
        const int64_t s = sa + sb;
        r = (s - ((s % 2 + 2) % 2)) / 2;
        break;
      }
      case VecOp::kMin: r = sa < sb ? sa : sb; break;
      case VecOp::kMax: r = sa > sb ? sa : sb; break;
      case VecOp::kSrl: r = static_cast<int64_t>(la[i] >> sh); break;
      case VecOp::kSra: {
        int64_t x = sa;
        for (int q = 0; q < sh; ++q) x = (x - ((x % 2 + 2) % 2)) / 2;
        r = x;
        break;
      }
      case VecOp::kSll: r = static_cast<int64_t>(la[i] << sh); break;
      case VecOp::kAnd: r = static_cast<int64_t>(la[i] & lb[i]); break;
      case VecOp::kOr: r = static_cast<int64_t>(la[i] | lb[i]); break;
      case VecOp::kXor: r = static_cast<int64_t>(la[i] ^ lb[i]); break;
      case VecOp::kCmpeq: r = la[i] == lb[i] ? -1 : 0; break;
      case VecOp::kCmpgt: r = sa > sb ? -1 : 0; break;
    }
    lo[i] = static_cast<uint64_t>(r) & mask;
  }
  return join(lo, lane_bits);
}

inline uint32_t dotp(uint32_t a, uint32_t b, uint32_t acc, int lane_bits,
                     bool is_signed) {
  const auto la = split(a, lane_bits), lb = split(b, lane_bits);
  int64_t sum = sext(acc, 32);
  for (size_t i = 0; i < la.size(); ++i) {
    const int64_t x = is_signed ? sext(la[i], lane_bits) : static_cast<int64_t>(la[i]);
    const int64_t y = is_signed ? sext(lb[i], lane_bits) : static_cast<int64_t>(lb[i]);
    sum += x * y;
  }
  return static_cast<uint32_t>(static_cast<uint64_t>(sum) & 0xFFFFFFFFull);
}

inline uint32_t shuffle(uint32_t a, uint32_t b, uint32_t mask, int lane_bits,
                        bool single_source) {
  const auto lm = split(mask, lane_bits);
  const auto la = split(a, lane_bits), lb = split(b, lane_bits);
  std::vector<uint64_t> lo(lm.size());
  const uint64_t idx_mask = lane_bits == 8 ? 3 : 1;
  for (size_t j = 0; j < lm.size(); ++j) {
    const uint64_t idx = lm[j] & idx_mask;
    const bool from_a = single_source || ((lm[j] >> (lane_bits == 8 ? 2 : 1)) & 1);
    lo[j] = from_a ? la[idx] : lb[idx];
  }
  return join(lo, lane_bits);
}

inline int64_t asr64(int64_t x, int sh) {
  for (int i = 0; i < sh; ++i) x = (x - ((x % 2 + 2) % 2)) / 2;
  return x;
}

inline uint32_t add_round_norm(uint32_t a, uint32_t b, int sh, bool sub,
                               bool is_signed) {
  const int64_t round = sh > 0 ? (1ll << (sh - 1)) : 0;
  const uint64_t sum =
      (static_cast<uint64_t>(a) + (sub ? -static_cast<uint64_t>(b)
                                       : static_cast<uint64_t>(b)) +
       static_cast<uint64_t>(round)) &
      0xFFFFFFFFull;
  if (is_signed)
    return static_cast<uint32_t>(static_cast<uint64_t>(asr64(sext(sum, 32), sh)) &
                                 0xFFFFFFFFull);
  return static_cast<uint32_t>(sum >> sh);
}

inline uint32_t mul_round_norm(uint32_t a, uint32_t b, int sh, bool is_signed) {
  const int64_t round = sh > 0 ? (1ll << (sh - 1)) : 0;
  if (is_signed) {
    const int64_t p = sext(a, 16) * sext(b, 16) + round;
    return static_cast<uint32_t>(static_cast<uint64_t>(asr64(p, sh)) & 0xFFFFFFFFull);
  }
  const uint64_t p = static_cast<uint64_t>(a & 0xFFFF) * (b & 0xFFFF) +
                     static_cast<uint64_t>(round);
  return static_cast<uint32_t>((p >> sh) & 0xFFFFFFFFull);
}

inline uint32_t clip(uint32_t a, int bits, bool is_unsigned) {
  const int64_t x = sext(a, 32);
  const int64_t hi = bits == 0 ? 0 : (1ll << (bits - 1)) - 1;
  const int64_t lo = is_unsigned ? 0 : (bits == 0 ? -1 : -(1ll << (bits - 1)));
  const int64_t r = x < lo ? lo : (x > hi ? hi : x);
  return static_cast<uint32_t>(static_cast<uint64_t>(r) & 0xFFFFFFFFull);
}

inline uint32_t mac(uint32_t acc, uint32_t a, uint32_t b, bool subtract) {
  const int64_t p = sext(a, 16) * sext(b, 16);
  const uint64_t r = static_cast<uint64_t>(acc) +
                     static_cast<uint64_t>(subtract ? -p : p);
  return static_cast<uint32_t>(r & 0xFFFFFFFFull);
}

enum class BitOp { kExtract, kExtractu, kBclr, kBset, kCnt, kFf1, kFl1, kClb };

inline uint32_t bitmanip(BitOp op, uint32_t a, int len, int off) {
  switch (op) {
    case BitOp::kExtract: {
      uint64_t f = 0;
      for (int i = 0; i < len; ++i) f |= static_cast<uint64_t>((a >> (off + i)) & 1u) << i;
      return static_cast<uint32_t>(static_cast<uint64_t>(sext(f, len)) & 0xFFFFFFFFull);
    }
    case BitOp::kExtractu: {
      uint64_t f = 0;
      for (int i = 0; i < len; ++i) f |= static_cast<uint64_t>((a >> (off + i)) & 1u) << i;
      return static_cast<uint32_t>(f);
    }
    case BitOp::kBclr: {
      uint32_t r = a;
      for (int i = 0; i < len; ++i) r &= ~(1u << (off + i));
      return r;
    }
    case BitOp::kBset: {
      uint32_t r = a;
      for (int i = 0; i < len; ++i) r |= 1u << (off + i);
      return r;
    }
    case BitOp::kCnt: {
      int n = 0;
      for (int i = 0; i < 32; ++i) n += (a >> i) & 1u;
      return static_cast<uint32_t>(n);
    }
    case BitOp::kFf1:
      for (int i = 0; i < 32; ++i)
        if ((a >> i) & 1u) return static_cast<uint32_t>(i);
      return 32;
    case BitOp::kFl1:
      for (int i = 31; i >= 0; --i)
        if ((a >> i) & 1u) return static_cast<uint32_t>(i);
      return 32;
    case BitOp::kClb: {
      if (a == 0) return 0;
      const uint32_t sign = a >> 31;
      int n = 0;
      for (int i = 30; i >= 0 && ((a >> i) & 1u) == sign; --i) ++n;
      return static_cast<uint32_t>(n);
    }
  }
  return 0;
}

inline uint32_t bit_insert(uint32_t src, uint32_t old, int len, int off) {
  uint32_t r = old;
  for (int i = 0; i < len; ++i) {
    r &= ~(1u << (off + i));
    r |= ((src >> i) & 1u) << (off + i);
  }
  return r;
}

enum class DivOp { kDiv, kDivu, kRem, kRemu };

inline uint32_t divide(DivOp op, uint32_t a, uint32_t b) {
  const int64_t sa = sext(a, 32), sb = sext(b, 32);
  switch (op) {
    case DivOp::kDiv:
      if (b == 0) return 0xFFFFFFFFu;
      if (sa == INT32_MIN && sb == -1) return 0x80000000u;
      return static_cast<uint32_t>(static_cast<uint64_t>(sa / sb) & 0xFFFFFFFFull);
    case DivOp::kDivu:
      return b == 0 ? 0xFFFFFFFFu : a / b;
    case DivOp::kRem:
      if (b == 0) return a;
      if (sa == INT32_MIN && sb == -1) return 0;
      return static_cast<uint32_t>(static_cast<uint64_t>(sa % sb) & 0xFFFFFFFFull);
    case DivOp::kRemu:
      return b == 0 ? a : a % b;
  }
  return 0;
}

}  // namespace oracle
