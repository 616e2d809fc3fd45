#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "rvdsp/pipeline.hpp"

namespace rvdsp {

// Per-instruction-class energy table in pJ, plus memory adders charged per
// TCDM access and an idle cost per stall cycle. Only the anchors quoted in
// the shipped default file are measurement-backed; everything else is a
// documented interpolation, and all results derived from this table are
// relative comparisons. Entries < 0 mean "missing" and make account() fail.
struct EnergyTable {
  std::array<double, kClassCount> class_pj;
  double sram_access_pj = -1;
  double scm_access_pj = -1;
  double unaligned_access_pj = -1;
  double idle_pj_per_cycle = -1;

  EnergyTable() { class_pj.fill(-1); }

  double& by_class(InstrClass c) { return class_pj[static_cast<size_t>(c)]; }
  double by_class(InstrClass c) const {
    return class_pj[static_cast<size_t>(c)];
  }

  static EnergyTable defaults();
  static EnergyTable from_file(const std::string& path);
};

std::string_view class_name(InstrClass c);

struct EnergyReport {
  double total_pj = 0;
  std::array<double, kClassCount> by_class_pj{};
  double memory_pj = 0;
  double idle_pj = 0;
};

// total = sum of class costs over retired instructions + memory adders per
// access + idle energy per stall cycle. Throws on a missing table entry for
// a class that actually retired, naming the class.
EnergyReport account(const ExecStats& stats, const EnergyTable& table);

}  // namespace rvdsp
