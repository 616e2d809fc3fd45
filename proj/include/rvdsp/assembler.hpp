#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rvdsp/isa.hpp"

namespace rvdsp {

// An assembled program: instruction list, label map, initialized data image
// and the derived address layout. Instruction k starts at
// base_addr + sum of sizes of instructions 0..k-1.
struct Program {
  std::vector<Instr> instrs;
  std::map<std::string, int32_t> labels;  // name -> instruction index
  std::map<uint32_t, uint8_t> data;       // initialized data image, sparse
  int32_t entry = 0;
  uint32_t base_addr = 0;

  std::vector<uint32_t> addrs;  // addrs.size() == instrs.size() + 1
  std::unordered_map<uint32_t, int32_t> addr_to_index;

  uint32_t end_addr() const { return addrs.empty() ? base_addr : addrs.back(); }
  uint32_t addr_of(int32_t index) const {
    return addrs[static_cast<size_t>(index)];
  }
  // -1 when the address is not the start of an instruction.
  int32_t index_of(uint32_t addr) const {
    auto it = addr_to_index.find(addr);
    return it == addr_to_index.end() ? -1 : it->second;
  }

  // Recomputes addrs/addr_to_index from instruction sizes.
  void relayout();

  bool operator==(const Program& o) const {
    return instrs == o.instrs && labels == o.labels && data == o.data &&
           entry == o.entry && base_addr == o.base_addr;
  }
};

struct SourceError {
  int line = 0;  // 1-based
  std::string message;
};

struct AsmResult {
  Program program;
  std::vector<SourceError> errors;
  bool ok() const { return errors.empty(); }
};

// Parses assembly text. Labels are `name:`, comments start with '#',
// registers are xN or rN. Directives: .data ADDR [bytes...], .byte/.half/
// .word values..., .nocompress/.compress. See docs/assembly.md for the
// grammar. All operands are range-checked and every referenced label must
// resolve; errors carry 1-based line numbers.
AsmResult parse(const std::string& text, uint32_t base_addr = 0);

// Canonical text form; parse(print(p)) is structurally identical to p.
std::string print(const Program& p);

}  // namespace rvdsp
