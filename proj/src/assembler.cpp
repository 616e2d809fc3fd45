#include "rvdsp/assembler.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace rvdsp {

void Program::relayout() {
  addrs.clear();
  addr_to_index.clear();
  addrs.reserve(instrs.size() + 1);
  uint32_t a = base_addr;
  for (size_t i = 0; i < instrs.size(); ++i) {
    addrs.push_back(a);
    addr_to_index.emplace(a, static_cast<int32_t>(i));
    a += instrs[i].size;
  }
  addrs.push_back(a);
}

namespace {

struct MnemSig {
  Mnemonic mn;
  LaneWidth lane = LaneWidth::kNone;
  VecMode vmode = VecMode::kVector;
  Signedness sign = Signedness::kSigned;
};

const std::unordered_map<std::string, MnemSig>& mnemonic_table() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string, MnemSig>();
    for (int i = 0; i < kMnemonicCount; ++i) {
      const auto mn = static_cast<Mnemonic>(i);
      const std::string base(mnemonic_text(mn));
      const bool vec_alu = mn >= Mnemonic::kPvAdd && mn <= Mnemonic::kPvCmpgt;
      const bool dotp = mn == Mnemonic::kPvDotp || mn == Mnemonic::kPvSdotp;
      const bool subword = mn >= Mnemonic::kPvShuffle && mn <= Mnemonic::kPvPack;
      if (vec_alu || dotp) {
        const std::pair<const char*, VecMode> modes[] = {
            {"", VecMode::kVector},
            {".sc", VecMode::kScalarReg},
            {".sci", VecMode::kScalarImm}};
        for (const auto& [msuf, vm] : modes) {
          if (dotp) {
            t->emplace(base + msuf + ".sb",
                       MnemSig{mn, LaneWidth::kByte, vm, Signedness::kSigned});
            t->emplace(base + msuf + ".ub",
                       MnemSig{mn, LaneWidth::kByte, vm, Signedness::kUnsigned});
            t->emplace(base + msuf + ".sh",
                       MnemSig{mn, LaneWidth::kHalf, vm, Signedness::kSigned});
            t->emplace(base + msuf + ".uh",
                       MnemSig{mn, LaneWidth::kHalf, vm, Signedness::kUnsigned});
          } else {
            t->emplace(base + msuf + ".b", MnemSig{mn, LaneWidth::kByte, vm});
            t->emplace(base + msuf + ".h", MnemSig{mn, LaneWidth::kHalf, vm});
          }
        }
      } else if (subword) {
        if (mn == Mnemonic::kPvPack) {
          t->emplace(base + ".h", MnemSig{mn, LaneWidth::kHalf});
        } else {
          t->emplace(base + ".b", MnemSig{mn, LaneWidth::kByte});
          t->emplace(base + ".h", MnemSig{mn, LaneWidth::kHalf});
        }
      } else {
        t->emplace(base, MnemSig{mn});
      }
    }
    return t;
  }();
  return *table;
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_' &&
      s[0] != '.')
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  });
}

std::optional<int> parse_reg(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'r')) return std::nullopt;
  int v = 0;
  for (size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return std::nullopt;
    v = v * 10 + (tok[i] - '0');
    if (v > 31) return std::nullopt;
  }
  return v;
}

std::optional<int64_t> parse_int(const std::string& tok) {
  if (tok.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(tok.c_str(), &end, 0);
  if (errno != 0 || end != tok.c_str() + tok.size()) return std::nullopt;
  return v;
}

// Collects parse state for a single file.
class Parser {
 public:
  explicit Parser(uint32_t base_addr) { result_.program.base_addr = base_addr; }

  AsmResult run(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      parse_line(line, lineno);
    }
    finish();
    return std::move(result_);
  }

 private:
  void error(int line, std::string msg) {
    result_.errors.push_back(SourceError{line, std::move(msg)});
  }

  Program& prog() { return result_.program; }

  void parse_line(const std::string& raw, int lineno) {
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    // Peel off leading labels.
    for (;;) {
      const std::string t = trim(line);
      if (t.empty()) return;
      const size_t colon = t.find(':');
      if (colon == std::string::npos) break;
      const std::string head = trim(t.substr(0, colon));
      // A colon inside an operand list never follows a bare identifier.
      if (!is_ident(head) || head[0] == '.') break;
      if (prog().labels.count(head)) {
        error(lineno, "duplicate label '" + head + "'");
      } else {
        prog().labels.emplace(head,
                              static_cast<int32_t>(prog().instrs.size()));
      }
      line = t.substr(colon + 1);
    }
    const std::string stmt = trim(line);
    if (stmt.empty()) return;
    // Split "mnemonic rest".
    size_t sp = stmt.find_first_of(" \t");
    const std::string head = stmt.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(stmt.substr(sp));
    if (head[0] == '.') {
      parse_directive(head, rest, lineno);
      return;
    }
    parse_instr(head, rest, lineno);
  }

  void parse_directive(const std::string& name, const std::string& rest,
                       int lineno) {
    std::vector<std::string> toks = split_ws(rest);
    if (name == ".nocompress") {
      nocompress_ = true;
      return;
    }
    if (name == ".compress") {
      nocompress_ = false;
      return;
    }
    if (name == ".data") {
      if (toks.empty()) {
        error(lineno, ".data requires an address");
        return;
      }
      auto addr = parse_int(toks[0]);
      if (!addr || *addr < 0 || *addr > 0xFFFFFFFFll) {
        error(lineno, "bad .data address '" + toks[0] + "'");
        return;
      }
      data_cursor_ = static_cast<uint32_t>(*addr);
      emit_values(toks, 1, 1, -128, 255, lineno);
      return;
    }
    if (name == ".byte") {
      emit_values(toks, 0, 1, -128, 255, lineno);
      return;
    }
    if (name == ".half") {
      emit_values(toks, 0, 2, -32768, 65535, lineno);
      return;
    }
    if (name == ".word") {
      emit_values(toks, 0, 4, INT32_MIN, UINT32_MAX, lineno);
      return;
    }
    error(lineno, "unknown directive '" + name + "'");
  }

  void emit_values(const std::vector<std::string>& toks, size_t first,
                   int width, int64_t lo, int64_t hi, int lineno) {
    for (size_t i = first; i < toks.size(); ++i) {
      auto v = parse_int(toks[i]);
      if (!v || *v < lo || *v > hi) {
        error(lineno, "data value out of range: '" + toks[i] + "'");
        continue;
      }
      auto u = static_cast<uint32_t>(*v);
      for (int b = 0; b < width; ++b) {
        prog().data[data_cursor_++] = static_cast<uint8_t>(u & 0xFF);
        u >>= 8;
      }
    }
  }

  static std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
  }

  static std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    const std::string last = trim(cur);
    if (!last.empty() || !out.empty()) out.push_back(last);
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
  }

  bool want_arity(const std::vector<std::string>& ops, size_t n, int lineno,
                  const std::string& mn) {
    if (ops.size() == n) return true;
    error(lineno, mn + " expects " + std::to_string(n) + " operands, got " +
                      std::to_string(ops.size()));
    return false;
  }

  std::optional<int8_t> reg_op(const std::string& tok, int lineno) {
    auto r = parse_reg(tok);
    if (!r) {
      error(lineno, "expected register, got '" + tok + "'");
      return std::nullopt;
    }
    return static_cast<int8_t>(*r);
  }

  std::optional<int32_t> imm_op(const std::string& tok, int64_t lo, int64_t hi,
                                int lineno) {
    auto v = parse_int(tok);
    if (!v) {
      error(lineno, "expected immediate, got '" + tok + "'");
      return std::nullopt;
    }
    if (*v < lo || *v > hi) {
      error(lineno, "immediate " + tok + " out of range [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]");
      return std::nullopt;
    }
    return static_cast<int32_t>(*v);
  }

  std::optional<LoopSet> loop_op(const std::string& tok, int lineno) {
    if (tok == "L0" || tok == "l0") return LoopSet::kL0;
    if (tok == "L1" || tok == "l1") return LoopSet::kL1;
    error(lineno, "expected loop set L0 or L1, got '" + tok + "'");
    return std::nullopt;
  }

  bool label_op(Instr& in, const std::string& tok, int lineno) {
    if (!is_ident(tok) || tok[0] == '.') {
      error(lineno, "expected label, got '" + tok + "'");
      return false;
    }
    in.label = tok;
    return true;
  }

  // "imm(base)", "imm(base!)", "reg(base)", "reg(base!)"
  bool mem_op(Instr& in, const std::string& tok, bool allow_post, int lineno) {
    const size_t open = tok.find('(');
    const size_t close = tok.rfind(')');
    if (open == std::string::npos || close == std::string::npos ||
        close < open || close != tok.size() - 1) {
      error(lineno, "bad memory operand '" + tok + "'");
      return false;
    }
    const std::string outer = trim(tok.substr(0, open));
    std::string inner = trim(tok.substr(open + 1, close - open - 1));
    bool post = false;
    if (!inner.empty() && inner.back() == '!') {
      post = true;
      inner = trim(inner.substr(0, inner.size() - 1));
    }
    if (post && !allow_post) {
      error(lineno, "post-increment not supported by this mnemonic");
      return false;
    }
    auto base = parse_reg(inner);
    if (!base) {
      error(lineno, "bad base register '" + inner + "'");
      return false;
    }
    in.rs1 = static_cast<int8_t>(*base);
    if (auto off = parse_reg(outer)) {
      if (!allow_post) {
        error(lineno, "register offset not supported by this mnemonic");
        return false;
      }
      in.rs3 = static_cast<int8_t>(*off);
      in.amode = post ? AddrMode::kPostReg : AddrMode::kRegOffset;
      return true;
    }
    auto imm = imm_op(outer.empty() ? "0" : outer, -2048, 2047, lineno);
    if (!imm) return false;
    in.imm = *imm;
    in.amode = post ? AddrMode::kPostImm : AddrMode::kOffset;
    return true;
  }

  void parse_instr(const std::string& head, const std::string& rest,
                   int lineno) {
    const auto& table = mnemonic_table();
    auto it = table.find(head);
    if (it == table.end()) {
      error(lineno, "unknown mnemonic '" + head + "'");
      return;
    }
    const MnemSig& sig = it->second;
    Instr in;
    in.mn = sig.mn;
    in.lane = sig.lane;
    in.vmode = sig.vmode;
    in.sign = sig.sign;
    std::vector<std::string> ops = split_commas(rest);
    if (!build(in, ops, lineno)) return;
    lines_.push_back(lineno);
    nocomp_.push_back(nocompress_);
    prog().instrs.push_back(std::move(in));
  }

  // Fills operand fields; false on error.
  bool build(Instr& in, const std::vector<std::string>& ops, int lineno) {
    const std::string name = std::string(mnemonic_text(in.mn));
    auto reg = [&](const std::string& t) { return reg_op(t, lineno); };
    switch (in.mn) {
      case Mnemonic::kNop:
        return want_arity(ops, 0, lineno, name);
      case Mnemonic::kMv: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto rd = reg(ops[0]), rs = reg(ops[1]);
        if (!rd || !rs) return false;
        in.rd = *rd;
        in.rs1 = *rs;
        return true;
      }
      case Mnemonic::kAdd:
      case Mnemonic::kSub:
      case Mnemonic::kAnd:
      case Mnemonic::kOr:
      case Mnemonic::kXor:
      case Mnemonic::kSll:
      case Mnemonic::kSrl:
      case Mnemonic::kSra:
      case Mnemonic::kSlt:
      case Mnemonic::kMul:
      case Mnemonic::kMulh:
      case Mnemonic::kDiv:
      case Mnemonic::kDivu:
      case Mnemonic::kRem:
      case Mnemonic::kRemu:
      case Mnemonic::kPMac:
      case Mnemonic::kPMsu:
      case Mnemonic::kPvShuffle:
      case Mnemonic::kPvShuffle2:
      case Mnemonic::kPvPack: {
        if (!want_arity(ops, 3, lineno, name)) return false;
        auto rd = reg(ops[0]), rs1 = reg(ops[1]), rs2 = reg(ops[2]);
        if (!rd || !rs1 || !rs2) return false;
        in.rd = *rd;
        in.rs1 = *rs1;
        in.rs2 = *rs2;
        return true;
      }
      case Mnemonic::kAddi:
      case Mnemonic::kAndi:
      case Mnemonic::kOri:
      case Mnemonic::kXori:
      case Mnemonic::kSlti:
      case Mnemonic::kJalr: {
        if (!want_arity(ops, 3, lineno, name)) return false;
        auto rd = reg(ops[0]), rs1 = reg(ops[1]);
        auto imm = imm_op(ops[2], -2048, 2047, lineno);
        if (!rd || !rs1 || !imm) return false;
        in.rd = *rd;
        in.rs1 = *rs1;
        in.imm = *imm;
        return true;
      }
      case Mnemonic::kSlli:
      case Mnemonic::kSrli:
      case Mnemonic::kSrai: {
        if (!want_arity(ops, 3, lineno, name)) return false;
        auto rd = reg(ops[0]), rs1 = reg(ops[1]);
        auto imm = imm_op(ops[2], 0, 31, lineno);
        if (!rd || !rs1 || !imm) return false;
        in.rd = *rd;
        in.rs1 = *rs1;
        in.imm = *imm;
        return true;
      }
      case Mnemonic::kLui:
      case Mnemonic::kAuipc: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto rd = reg(ops[0]);
        auto imm = imm_op(ops[1], -0x80000, 0xFFFFF, lineno);
        if (!rd || !imm) return false;
        in.rd = *rd;
        in.imm = *imm;
        return true;
      }
      case Mnemonic::kBeq:
      case Mnemonic::kBne:
      case Mnemonic::kBlt:
      case Mnemonic::kBge: {
        if (!want_arity(ops, 3, lineno, name)) return false;
        auto rs1 = reg(ops[0]), rs2 = reg(ops[1]);
        if (!rs1 || !rs2) return false;
        in.rs1 = *rs1;
        in.rs2 = *rs2;
        return label_op(in, ops[2], lineno);
      }
      case Mnemonic::kJal: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto rd = reg(ops[0]);
        if (!rd) return false;
        in.rd = *rd;
        return label_op(in, ops[1], lineno);
      }
      case Mnemonic::kJ: {
        if (!want_arity(ops, 1, lineno, name)) return false;
        return label_op(in, ops[0], lineno);
      }
      case Mnemonic::kLw:
      case Mnemonic::kLh:
      case Mnemonic::kLhu:
      case Mnemonic::kLb:
      case Mnemonic::kLbu: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto rd = reg(ops[0]);
        if (!rd) return false;
        in.rd = *rd;
        return mem_op(in, ops[1], /*allow_post=*/false, lineno);
      }
      case Mnemonic::kSw:
      case Mnemonic::kSh:
      case Mnemonic::kSb: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto rs2 = reg(ops[0]);
        if (!rs2) return false;
        in.rs2 = *rs2;
        return mem_op(in, ops[1], /*allow_post=*/false, lineno);
      }
      case Mnemonic::kPLw:
      case Mnemonic::kPLh:
      case Mnemonic::kPLhu:
      case Mnemonic::kPLb:
      case Mnemonic::kPLbu: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto rd = reg(ops[0]);
        if (!rd) return false;
        in.rd = *rd;
        return mem_op(in, ops[1], /*allow_post=*/true, lineno);
      }
      case Mnemonic::kPSw:
      case Mnemonic::kPSh:
      case Mnemonic::kPSb: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto rs2 = reg(ops[0]);
        if (!rs2) return false;
        in.rs2 = *rs2;
        return mem_op(in, ops[1], /*allow_post=*/true, lineno);
      }
      case Mnemonic::kLpSetup: {
        if (!want_arity(ops, 3, lineno, name)) return false;
        auto ls = loop_op(ops[0], lineno);
        auto rs1 = reg(ops[1]);
        if (!ls || !rs1) return false;
        in.loop = *ls;
        in.rs1 = *rs1;
        return label_op(in, ops[2], lineno);
      }
      case Mnemonic::kLpSetupi: {
        if (!want_arity(ops, 3, lineno, name)) return false;
        auto ls = loop_op(ops[0], lineno);
        auto imm = imm_op(ops[1], 1, INT32_MAX, lineno);
        if (!ls || !imm) return false;
        in.loop = *ls;
        in.imm = *imm;
        return label_op(in, ops[2], lineno);
      }
      case Mnemonic::kLpStart:
      case Mnemonic::kLpEnd: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto ls = loop_op(ops[0], lineno);
        if (!ls) return false;
        in.loop = *ls;
        return label_op(in, ops[1], lineno);
      }
      case Mnemonic::kLpCount: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto ls = loop_op(ops[0], lineno);
        auto rs1 = reg(ops[1]);
        if (!ls || !rs1) return false;
        in.loop = *ls;
        in.rs1 = *rs1;
        return true;
      }
      case Mnemonic::kLpCounti: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto ls = loop_op(ops[0], lineno);
        auto imm = imm_op(ops[1], 1, INT32_MAX, lineno);
        if (!ls || !imm) return false;
        in.loop = *ls;
        in.imm = *imm;
        return true;
      }
      case Mnemonic::kPAddRN:
      case Mnemonic::kPAddRNu:
      case Mnemonic::kPSubRN:
      case Mnemonic::kPMulsRN:
      case Mnemonic::kPMuluRN: {
        if (!want_arity(ops, 4, lineno, name)) return false;
        auto rd = reg(ops[0]), rs1 = reg(ops[1]), rs2 = reg(ops[2]);
        auto sh = imm_op(ops[3], 0, 31, lineno);
        if (!rd || !rs1 || !rs2 || !sh) return false;
        in.rd = *rd;
        in.rs1 = *rs1;
        in.rs2 = *rs2;
        in.shift_i = static_cast<uint8_t>(*sh);
        return true;
      }
      case Mnemonic::kPClip:
      case Mnemonic::kPClipu: {
        if (!want_arity(ops, 3, lineno, name)) return false;
        auto rd = reg(ops[0]), rs1 = reg(ops[1]);
        auto sh = imm_op(ops[2], 0, 31, lineno);
        if (!rd || !rs1 || !sh) return false;
        in.rd = *rd;
        in.rs1 = *rs1;
        in.shift_i = static_cast<uint8_t>(*sh);
        return true;
      }
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
      case Mnemonic::kPvDotp:
      case Mnemonic::kPvSdotp: {
        if (!want_arity(ops, 3, lineno, name)) return false;
        auto rd = reg(ops[0]), rs1 = reg(ops[1]);
        if (!rd || !rs1) return false;
        in.rd = *rd;
        in.rs1 = *rs1;
        if (in.vmode == VecMode::kScalarImm) {
          auto imm = imm_op(ops[2], -32, 31, lineno);
          if (!imm) return false;
          in.imm = *imm;
          return true;
        }
        auto rs2 = reg(ops[2]);
        if (!rs2) return false;
        in.rs2 = *rs2;
        return true;
      }
      case Mnemonic::kPvInsert:
      case Mnemonic::kPvExtract:
      case Mnemonic::kPvExtractu: {
        if (!want_arity(ops, 3, lineno, name)) return false;
        auto rd = reg(ops[0]), rs1 = reg(ops[1]);
        const int max_lane = in.lane == LaneWidth::kByte ? 3 : 1;
        auto imm = imm_op(ops[2], 0, max_lane, lineno);
        if (!rd || !rs1 || !imm) return false;
        in.rd = *rd;
        in.rs1 = *rs1;
        in.imm = *imm;
        return true;
      }
      case Mnemonic::kPExtract:
      case Mnemonic::kPExtractu:
      case Mnemonic::kPInsert:
      case Mnemonic::kPBclr:
      case Mnemonic::kPBset: {
        if (!want_arity(ops, 4, lineno, name)) return false;
        auto rd = reg(ops[0]), rs1 = reg(ops[1]);
        auto len = imm_op(ops[2], 1, 32, lineno);
        auto off = imm_op(ops[3], 0, 31, lineno);
        if (!rd || !rs1 || !len || !off) return false;
        if (*len + *off > 32) {
          error(lineno, "bit field exceeds 32 bits (len+off > 32)");
          return false;
        }
        in.rd = *rd;
        in.rs1 = *rs1;
        in.len = static_cast<uint8_t>(*len);
        in.off = static_cast<uint8_t>(*off);
        return true;
      }
      case Mnemonic::kPCnt:
      case Mnemonic::kPFf1:
      case Mnemonic::kPFl1:
      case Mnemonic::kPClb: {
        if (!want_arity(ops, 2, lineno, name)) return false;
        auto rd = reg(ops[0]), rs1 = reg(ops[1]);
        if (!rd || !rs1) return false;
        in.rd = *rd;
        in.rs1 = *rs1;
        return true;
      }
      default:
        error(lineno, "internal: unhandled mnemonic shape");
        return false;
    }
  }

  void finish() {
    Program& p = prog();
    // Resolve labels.
    for (size_t i = 0; i < p.instrs.size(); ++i) {
      Instr& in = p.instrs[i];
      if (in.label.empty()) continue;
      auto it = p.labels.find(in.label);
      if (it == p.labels.end()) {
        error(lines_[i], "unresolved label '" + in.label + "'");
        continue;
      }
      in.target = it->second;
      if ((in.mn == Mnemonic::kLpSetup || in.mn == Mnemonic::kLpSetupi ||
           in.mn == Mnemonic::kLpEnd) &&
          in.target < static_cast<int32_t>(i)) {
        error(lines_[i],
              "hardware-loop end label '" + in.label + "' precedes the setup");
      }
    }
    // Assign sizes, then addresses.
    for (size_t i = 0; i < p.instrs.size(); ++i) {
      Instr& in = p.instrs[i];
      in.size = (!nocomp_[i] && is_compressible(in)) ? 2 : 4;
    }
    p.relayout();
  }

  AsmResult result_;
  std::vector<int> lines_;    // source line per instruction
  std::vector<char> nocomp_;  // .nocompress region flag per instruction
  bool nocompress_ = false;
  uint32_t data_cursor_ = 0;
};

std::string reg_name(int8_t r) { return "x" + std::to_string(r); }

std::string mem_operand(const Instr& in) {
  switch (in.amode) {
    case AddrMode::kOffset:
      return std::to_string(in.imm) + "(" + reg_name(in.rs1) + ")";
    case AddrMode::kPostImm:
      return std::to_string(in.imm) + "(" + reg_name(in.rs1) + "!)";
    case AddrMode::kPostReg:
      return reg_name(in.rs3) + "(" + reg_name(in.rs1) + "!)";
    case AddrMode::kRegOffset:
      return reg_name(in.rs3) + "(" + reg_name(in.rs1) + ")";
  }
  return "";
}

std::string loop_name(LoopSet ls) { return ls == LoopSet::kL0 ? "L0" : "L1"; }

std::string print_instr(const Instr& in) {
  const std::string mn = mnemonic_spelling(in);
  auto join = [&](std::initializer_list<std::string> parts) {
    std::string s = mn;
    bool first = true;
    for (const auto& part : parts) {
      s += first ? " " : ", ";
      s += part;
      first = false;
    }
    return s;
  };
  const std::string rd = reg_name(in.rd), rs1 = reg_name(in.rs1),
                    rs2 = reg_name(in.rs2);
  const std::string imm = std::to_string(in.imm);
  switch (in.mn) {
    case Mnemonic::kNop:
      return mn;
    case Mnemonic::kMv:
      return join({rd, rs1});
    case Mnemonic::kAdd:
    case Mnemonic::kSub:
    case Mnemonic::kAnd:
    case Mnemonic::kOr:
    case Mnemonic::kXor:
    case Mnemonic::kSll:
    case Mnemonic::kSrl:
    case Mnemonic::kSra:
    case Mnemonic::kSlt:
    case Mnemonic::kMul:
    case Mnemonic::kMulh:
    case Mnemonic::kDiv:
    case Mnemonic::kDivu:
    case Mnemonic::kRem:
    case Mnemonic::kRemu:
    case Mnemonic::kPMac:
    case Mnemonic::kPMsu:
    case Mnemonic::kPvShuffle:
    case Mnemonic::kPvShuffle2:
    case Mnemonic::kPvPack:
      return join({rd, rs1, rs2});
    case Mnemonic::kAddi:
    case Mnemonic::kAndi:
    case Mnemonic::kOri:
    case Mnemonic::kXori:
    case Mnemonic::kSlti:
    case Mnemonic::kSlli:
    case Mnemonic::kSrli:
    case Mnemonic::kSrai:
    case Mnemonic::kJalr:
      return join({rd, rs1, imm});
    case Mnemonic::kLui:
    case Mnemonic::kAuipc:
      return join({rd, imm});
    case Mnemonic::kBeq:
    case Mnemonic::kBne:
    case Mnemonic::kBlt:
    case Mnemonic::kBge:
      return join({rs1, rs2, in.label});
    case Mnemonic::kJal:
      return join({rd, in.label});
    case Mnemonic::kJ:
      return join({in.label});
    case Mnemonic::kLw:
    case Mnemonic::kLh:
    case Mnemonic::kLhu:
    case Mnemonic::kLb:
    case Mnemonic::kLbu:
    case Mnemonic::kPLw:
    case Mnemonic::kPLh:
    case Mnemonic::kPLhu:
    case Mnemonic::kPLb:
    case Mnemonic::kPLbu:
      return join({rd, mem_operand(in)});
    case Mnemonic::kSw:
    case Mnemonic::kSh:
    case Mnemonic::kSb:
    case Mnemonic::kPSw:
    case Mnemonic::kPSh:
    case Mnemonic::kPSb:
      return join({rs2, mem_operand(in)});
    case Mnemonic::kLpSetup:
      return join({loop_name(in.loop), rs1, in.label});
    case Mnemonic::kLpSetupi:
      return join({loop_name(in.loop), imm, in.label});
    case Mnemonic::kLpStart:
    case Mnemonic::kLpEnd:
      return join({loop_name(in.loop), in.label});
    case Mnemonic::kLpCount:
      return join({loop_name(in.loop), rs1});
    case Mnemonic::kLpCounti:
      return join({loop_name(in.loop), imm});
    case Mnemonic::kPAddRN:
    case Mnemonic::kPAddRNu:
    case Mnemonic::kPSubRN:
    case Mnemonic::kPMulsRN:
    case Mnemonic::kPMuluRN:
      return join({rd, rs1, rs2, std::to_string(in.shift_i)});
    case Mnemonic::kPClip:
    case Mnemonic::kPClipu:
      return join({rd, rs1, std::to_string(in.shift_i)});
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
    case Mnemonic::kPvDotp:
    case Mnemonic::kPvSdotp:
      if (in.vmode == VecMode::kScalarImm) return join({rd, rs1, imm});
      return join({rd, rs1, rs2});
    case Mnemonic::kPvInsert:
    case Mnemonic::kPvExtract:
    case Mnemonic::kPvExtractu:
      return join({rd, rs1, imm});
    case Mnemonic::kPExtract:
    case Mnemonic::kPExtractu:
    case Mnemonic::kPInsert:
    case Mnemonic::kPBclr:
    case Mnemonic::kPBset:
      return join({rd, rs1, std::to_string(in.len), std::to_string(in.off)});
    case Mnemonic::kPCnt:
    case Mnemonic::kPFf1:
    case Mnemonic::kPFl1:
    case Mnemonic::kPClb:
      return join({rd, rs1});
    default:
      return mn;
  }
}

}  // namespace

AsmResult parse(const std::string& text, uint32_t base_addr) {
  Parser p(base_addr);
  return p.run(text);
}

std::string print(const Program& p) {
  std::string out;
  // index -> label names (alphabetical for a stable form)
  std::multimap<int32_t, std::string> by_index;
  for (const auto& [name, idx] : p.labels) by_index.emplace(idx, name);
  bool nocompress_active = false;
  for (size_t i = 0; i <= p.instrs.size(); ++i) {
    auto range = by_index.equal_range(static_cast<int32_t>(i));
    for (auto it = range.first; it != range.second; ++it)
      out += it->second + ":\n";
    if (i == p.instrs.size()) break;
    const Instr& in = p.instrs[i];
    const bool want_nocompress = in.size == 4 && is_compressible(in);
    if (want_nocompress != nocompress_active) {
      out += want_nocompress ? ".nocompress\n" : ".compress\n";
      nocompress_active = want_nocompress;
    }
    out += "    " + print_instr(in) + "\n";
  }
  // Data image as .data runs.
  auto it = p.data.begin();
  while (it != p.data.end()) {
    uint32_t start = it->first;
    out += ".data " + std::to_string(start) + "\n";
    int on_line = 0;
    uint32_t expect = start;
    std::string line;
    while (it != p.data.end() && it->first == expect) {
      if (on_line == 0) line = ".byte";
      line += " " + std::to_string(it->second);
      if (++on_line == 16) {
        out += line + "\n";
        on_line = 0;
      }
      ++expect;
      ++it;
    }
    if (on_line > 0) out += line + "\n";
  }
  return out;
}

}  // namespace rvdsp
