#include "rvdsp/energy.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rvdsp {

std::string_view class_name(InstrClass c) {
  switch (c) {
    case InstrClass::kAlu:
      return "alu";
    case InstrClass::kMul:
      return "mul";
    case InstrClass::kMac:
      return "mac";
    case InstrClass::kDotp:
      return "dotp";
    case InstrClass::kShuffle:
      return "shuffle";
    case InstrClass::kLoad:
      return "load";
    case InstrClass::kStore:
      return "store";
    case InstrClass::kBranch:
      return "branch";
    case InstrClass::kJump:
      return "jump";
    case InstrClass::kDiv:
      return "div";
    case InstrClass::kHwloopSetup:
      return "hwloop_setup";
    case InstrClass::kCsr:
      return "csr";
    case InstrClass::kNopClass:
      return "nop";
    default:
      return "?";
  }
}

EnergyTable EnergyTable::defaults() {
  EnergyTable t;
  t.by_class(InstrClass::kNopClass) = 15;      // fetch-only floor
  t.by_class(InstrClass::kAlu) = 30;           // 3-4 ops for 90-120 pJ
  t.by_class(InstrClass::kMul) = 40;
  t.by_class(InstrClass::kMac) = 45;
  t.by_class(InstrClass::kDotp) = 48;
  t.by_class(InstrClass::kShuffle) = 50;       // measured anchor
  t.by_class(InstrClass::kLoad) = 20;          // core side; adders per access
  t.by_class(InstrClass::kStore) = 20;
  t.by_class(InstrClass::kBranch) = 25;
  t.by_class(InstrClass::kJump) = 25;
  t.by_class(InstrClass::kDiv) = 40;
  t.by_class(InstrClass::kHwloopSetup) = 25;
  t.by_class(InstrClass::kCsr) = 25;
  t.sram_access_pj = 25;
  t.scm_access_pj = 25 * 0.54;  // SCM reads 46% cheaper on average
  t.unaligned_access_pj = 30;   // aligned 45, unaligned 100 total
  t.idle_pj_per_cycle = 10;
  return t;
}

EnergyTable EnergyTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open energy table: " + path);
  EnergyTable t;
  bool scm_set = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ls(line);
    std::string key, eq;
    double value = 0;
    if (!(ls >> key)) continue;
    if (!(ls >> eq >> value) || eq != "=" || value < 0)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = nonnegative-value'");
    bool matched = false;
    for (int c = 0; c < kClassCount; ++c) {
      if (key == class_name(static_cast<InstrClass>(c))) {
        t.class_pj[static_cast<size_t>(c)] = value;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (key == "sram_access")
      t.sram_access_pj = value;
    else if (key == "scm_access") {
      t.scm_access_pj = value;
      scm_set = true;
    } else if (key == "unaligned_access")
      t.unaligned_access_pj = value;
    else if (key == "idle_per_cycle")
      t.idle_pj_per_cycle = value;
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown energy key '" + key + "'");
  }
  if (!scm_set && t.sram_access_pj >= 0) t.scm_access_pj = 0.54 * t.sram_access_pj;
  return t;
}

EnergyReport account(const ExecStats& stats, const EnergyTable& table) {
  EnergyReport r;
  for (int m = 0; m < kMnemonicCount; ++m) {
    const uint64_t count = stats.retired_by_mn[static_cast<size_t>(m)];
    if (count == 0) continue;
    const InstrClass c = class_of(static_cast<Mnemonic>(m));
    const double pj = table.by_class(c);
    if (pj < 0)
      throw std::runtime_error("energy table has no entry for class '" +
                               std::string(class_name(c)) + "'");
    r.by_class_pj[static_cast<size_t>(c)] += pj * static_cast<double>(count);
  }
  auto need = [&](double v, const char* key) {
    if (v < 0)
      throw std::runtime_error(std::string("energy table has no entry for '") +
                               key + "'");
    return v;
  };
  if (stats.sram_accesses)
    r.memory_pj += need(table.sram_access_pj, "sram_access") *
                   static_cast<double>(stats.sram_accesses);
  if (stats.scm_accesses)
    r.memory_pj += need(table.scm_access_pj, "scm_access") *
                   static_cast<double>(stats.scm_accesses);
  if (stats.unaligned_events)
    r.memory_pj += need(table.unaligned_access_pj, "unaligned_access") *
                   static_cast<double>(stats.unaligned_events);
  if (stats.stall_cycles())
    r.idle_pj = need(table.idle_pj_per_cycle, "idle_per_cycle") *
                static_cast<double>(stats.stall_cycles());
  for (double v : r.by_class_pj) r.total_pj += v;
  r.total_pj += r.memory_pj + r.idle_pj;
  return r;
}

}  // namespace rvdsp
