#include "rvdsp/report.hpp"

#include <json.hpp>

#include <sstream>

namespace rvdsp {

using ordered_json = nlohmann::ordered_json;

RunReport RunReport::from_cluster(const ClusterResult& cr,
                                  const EnergyTable& table) {
  RunReport r;
  r.cycles = cr.cycles;
  r.deadlock = cr.deadlock;
  for (const auto& c : cr.cores)
    r.cores.push_back(CoreReport{c.stats, c.contention, account(c.stats, table)});
  return r;
}

RunReport RunReport::from_single(const TimedResult& tr,
                                 const EnergyTable& table) {
  RunReport r;
  r.cycles = tr.stats.cycles;
  r.cores.push_back(
      CoreReport{tr.stats, ContentionStats{}, account(tr.stats, table)});
  return r;
}

namespace {

ordered_json stats_json(const CoreReport& c) {
  ordered_json j;
  j["cycles"] = c.stats.cycles;
  j["retired"] = c.stats.retired;
  j["retired_compressed"] = c.stats.retired16;
  j["ipc"] = c.stats.ipc();
  j["compressed_ratio"] = c.stats.compressed_ratio();
  j["loads"] = c.stats.loads;
  j["stores"] = c.stats.stores;
  ordered_json stalls;
  for (int i = 1; i < kStallReasonCount; ++i)
    stalls[std::string(stall_reason_name(static_cast<StallReason>(i)))] =
        c.stats.stall_by_reason[static_cast<size_t>(i)];
  j["stall_cycles"] = stalls;
  ordered_json classes;
  for (int k = 0; k < kClassCount; ++k) {
    uint64_t n = 0;
    for (int m = 0; m < kMnemonicCount; ++m)
      if (class_of(static_cast<Mnemonic>(m)) == static_cast<InstrClass>(k))
        n += c.stats.retired_by_mn[static_cast<size_t>(m)];
    if (n > 0) classes[std::string(class_name(static_cast<InstrClass>(k)))] = n;
  }
  j["retired_by_class"] = classes;
  ordered_json cont;
  cont["total_accesses"] = c.contention.total_accesses;
  cont["contended_accesses"] = c.contention.contended_accesses;
  cont["stall_cycles"] = c.contention.stall_cycles;
  cont["contended_pct"] = c.contention.contended_pct();
  j["contention"] = cont;
  ordered_json en;
  en["total_pj"] = c.energy.total_pj;
  en["memory_pj"] = c.energy.memory_pj;
  en["idle_pj"] = c.energy.idle_pj;
  ordered_json by_class;
  for (int k = 0; k < kClassCount; ++k)
    if (c.energy.by_class_pj[static_cast<size_t>(k)] > 0)
      by_class[std::string(class_name(static_cast<InstrClass>(k)))] =
          c.energy.by_class_pj[static_cast<size_t>(k)];
  en["by_class_pj"] = by_class;
  j["energy"] = en;
  j["halted_clean"] = c.stats.halted_clean;
  j["nonterminating"] = c.stats.nonterminating;
  j["trap"] = c.stats.trap_message;
  return j;
}

}  // namespace

std::string RunReport::to_json() const {
  ordered_json j;
  j["cycles"] = cycles;
  j["retired"] = retired();
  j["ipc"] = ipc();
  j["compressed_ratio"] = compressed_ratio();
  j["loads"] = loads();
  j["stores"] = stores();
  j["energy_pj"] = energy_pj();
  const ContentionStats cont = contention();
  j["contention"] = {{"total_accesses", cont.total_accesses},
                     {"contended_accesses", cont.contended_accesses},
                     {"stall_cycles", cont.stall_cycles},
                     {"contended_pct", cont.contended_pct()}};
  j["deadlock"] = deadlock;
  j["golden"] = golden;
  ordered_json per_core = ordered_json::array();
  for (const auto& c : cores) per_core.push_back(stats_json(c));
  j["cores"] = per_core;
  return j.dump(2) + "\n";
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "cycles            " << cycles << "\n";
  os << "retired           " << retired() << "\n";
  os << "ipc               " << ipc() << "\n";
  os << "compressed_ratio  " << compressed_ratio() << "\n";
  os << "loads/stores      " << loads() << "/" << stores() << "\n";
  const ContentionStats cont = contention();
  os << "contention        " << cont.contended_accesses << "/"
     << cont.total_accesses << " accesses (" << cont.contended_pct() << "%), "
     << cont.stall_cycles << " stall cycles\n";
  os << "energy_pj         " << energy_pj() << "\n";
  if (!golden.empty()) os << "golden            " << golden << "\n";
  if (deadlock) os << "DEADLOCK\n";
  for (size_t i = 0; i < cores.size(); ++i) {
    const auto& c = cores[i];
    os << "core " << i << ": cycles=" << c.stats.cycles
       << " retired=" << c.stats.retired << " ipc=" << c.stats.ipc();
    if (!c.stats.trap_message.empty())
      os << " TRAP: " << c.stats.trap_message;
    os << "\n";
  }
  return os.str();
}

}  // namespace rvdsp
