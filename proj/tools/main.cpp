// rvdsp: assembler + cycle-approximate simulator for a 32-bit RISC core with
// DSP extensions in a shared-memory cluster, plus the benchmark suite.
//
// Exit codes: 0 ok, 1 file/usage error, 2 parse error, 3 trap,
//             4 deadlock or budget exhaustion, 5 golden/band failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "rvdsp/assembler.hpp"
#include "rvdsp/bench.hpp"
#include "rvdsp/cluster.hpp"
#include "rvdsp/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFile = 1;
constexpr int kExitParse = 2;
constexpr int kExitTrap = 3;
constexpr int kExitDeadlock = 4;
constexpr int kExitFail = 5;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// "file@addr"; *.hex files hold whitespace-separated hex byte values with
// optional '@addr' cursor tokens and '#' comments, anything else is loaded
// as raw binary.
bool load_data_arg(const std::string& arg, rvdsp::MemorySystem& mem) {
  const size_t at = arg.rfind('@');
  if (at == std::string::npos) {
    std::cerr << "rvdsp: --data expects file@addr, got '" << arg << "'\n";
    return false;
  }
  const std::string path = arg.substr(0, at);
  const uint32_t base =
      static_cast<uint32_t>(std::stoul(arg.substr(at + 1), nullptr, 0));
  auto content = read_file(path);
  if (!content) {
    std::cerr << "rvdsp: cannot open data file '" << path << "'\n";
    return false;
  }
  uint32_t addr = base;
  auto put = [&](uint8_t byte) {
    if (!mem.in_range(addr, 1)) return false;
    mem.bytes[addr++] = byte;
    return true;
  };
  if (path.size() > 4 && path.substr(path.size() - 4) == ".hex") {
    std::istringstream lines(*content);
    std::string line;
    while (std::getline(lines, line)) {
      if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
      std::istringstream is(line);
      std::string tok;
      while (is >> tok) {
        if (tok[0] == '@') {
          addr = base + static_cast<uint32_t>(
                            std::stoul(tok.substr(1), nullptr, 16));
          continue;
        }
        const unsigned long v = std::stoul(tok, nullptr, 16);
        if (v > 0xFF || !put(static_cast<uint8_t>(v))) {
          std::cerr << "rvdsp: bad or out-of-range hex byte '" << tok << "'\n";
          return false;
        }
      }
    }
  } else {
    for (char c : *content)
      if (!put(static_cast<uint8_t>(c))) {
        std::cerr << "rvdsp: data file '" << path << "' exceeds memory\n";
        return false;
      }
  }
  return true;
}

int cmd_run(const std::vector<std::string>& asm_paths, uint32_t cores,
            const std::vector<std::string>& data_args,
            const std::string& timing_path, const std::string& energy_path,
            const std::string& json_path, const std::string& csv_path,
            uint64_t budget, uint32_t base_addr) {
  rvdsp::TimingConfig timing;
  rvdsp::EnergyTable energy = rvdsp::EnergyTable::defaults();
  try {
    if (!timing_path.empty())
      timing = rvdsp::TimingConfig::from_file(timing_path);
    if (!energy_path.empty())
      energy = rvdsp::EnergyTable::from_file(energy_path);
  } catch (const std::exception& e) {
    std::cerr << "rvdsp: " << e.what() << "\n";
    return kExitFile;
  }

  std::vector<rvdsp::Program> programs;
  for (const auto& path : asm_paths) {
    auto text = read_file(path);
    if (!text) {
      std::cerr << "rvdsp: cannot open '" << path << "'\n";
      return kExitFile;
    }
    rvdsp::AsmResult res = rvdsp::parse(*text, base_addr);
    if (!res.ok()) {
      for (const auto& e : res.errors)
        std::cerr << path << ":" << e.line << ": error: " << e.message << "\n";
      return kExitParse;
    }
    programs.push_back(std::move(res.program));
  }
  // One program replicates across cores; otherwise one per core.
  if (programs.size() == 1 && cores > 1)
    programs.resize(cores, programs[0]);
  if (programs.size() != cores) {
    std::cerr << "rvdsp: got " << programs.size() << " programs for " << cores
              << " cores\n";
    return kExitFile;
  }

  rvdsp::MemorySystem mem;
  for (const auto& p : programs)
    for (const auto& [addr, byte] : p.data)
      if (mem.in_range(addr, 1)) mem.bytes[addr] = byte;
  for (const auto& arg : data_args)
    if (!load_data_arg(arg, mem)) return kExitFile;

  rvdsp::ClusterConfig cc;
  cc.cores = cores;
  cc.max_cycles = budget;
  const rvdsp::ClusterResult cr =
      rvdsp::run_cluster(programs, mem, cc, timing);
  rvdsp::RunReport report = rvdsp::RunReport::from_cluster(cr, energy);

  std::cout << report.to_text();
  if (!json_path.empty()) {
    if (json_path == "-") {
      std::cout << report.to_json();
    } else {
      std::ofstream out(json_path, std::ios::binary);
      out << report.to_json();
    }
  }
  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "cycles,retired,ipc,compressed_ratio,loads,stores,energy_pj,"
           "contended_accesses,total_accesses\n";
    const rvdsp::ContentionStats cont = report.contention();
    csv << report.cycles << "," << report.retired() << "," << report.ipc()
        << "," << report.compressed_ratio() << "," << report.loads() << ","
        << report.stores() << "," << report.energy_pj() << ","
        << cont.contended_accesses << "," << cont.total_accesses << "\n";
    if (csv_path == "-") {
      std::cout << csv.str();
    } else {
      std::ofstream out(csv_path, std::ios::binary);
      out << csv.str();
    }
  }
  if (report.trapped()) return kExitTrap;
  if (!report.clean()) return kExitDeadlock;
  return kExitOk;
}

int cmd_print(const std::string& path) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "rvdsp: cannot open '" << path << "'\n";
    return kExitFile;
  }
  rvdsp::AsmResult res = rvdsp::parse(*text);
  if (!res.ok()) {
    for (const auto& e : res.errors)
      std::cerr << path << ":" << e.line << ": error: " << e.message << "\n";
    return kExitParse;
  }
  std::cout << rvdsp::print(res.program);
  return kExitOk;
}

int cmd_bench(const std::string& suite_name, const std::string& out_dir,
              uint64_t seed, const std::string& timing_path,
              const std::string& energy_path) {
  rvdsp::TimingConfig timing;
  rvdsp::EnergyTable energy = rvdsp::EnergyTable::defaults();
  std::vector<rvdsp::bench::KernelSpec> specs;
  try {
    if (!timing_path.empty())
      timing = rvdsp::TimingConfig::from_file(timing_path);
    if (!energy_path.empty())
      energy = rvdsp::EnergyTable::from_file(energy_path);
    specs = rvdsp::bench::suite(suite_name, seed);
  } catch (const std::exception& e) {
    std::cerr << "rvdsp: " << e.what() << "\n";
    return kExitFile;
  }

  std::vector<rvdsp::bench::BenchRow> rows;
  bool all_ok = true;
  for (const auto& spec : specs) {
    rvdsp::bench::BenchRow row = rvdsp::bench::run_kernel(spec, timing, energy);
    if (!row.error.empty()) {
      std::cerr << "rvdsp: " << spec.name() << ": " << row.error << "\n";
      all_ok = false;
    } else {
      std::cout << spec.name() << ": " << row.cycles << " cycles, ipc "
                << row.ipc << ", golden " << (row.golden_ok ? "pass" : "FAIL")
                << "\n";
    }
    all_ok = all_ok && row.golden_ok;
    rows.push_back(std::move(row));
  }

  std::ostringstream rows_csv;
  rows_csv << rvdsp::bench::BenchRow::csv_header() << "\n";
  for (const auto& r : rows) rows_csv << r.csv_row() << "\n";

  std::ostringstream cmp_csv;
  std::ostringstream summary;
  cmp_csv << rvdsp::bench::CompareRow::csv_header() << "\n";
  if (all_ok) {
    for (const auto& c : rvdsp::bench::compare(rows))
      cmp_csv << c.csv_row() << "\n";
    const auto bands = rvdsp::bench::acceptance_bands(rows);
    for (const auto& b : bands) {
      summary << (b.pass ? "[PASS] " : "[FAIL] ") << b.name << ": " << b.value;
      if (b.applicable) summary << " (band " << b.lo << " .. " << b.hi << ")";
      summary << "\n";
      all_ok = all_ok && (b.pass || !b.applicable);
    }
  }
  std::cout << summary.str();

  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    std::ofstream(out_dir + "/rows.csv", std::ios::binary) << rows_csv.str();
    std::ofstream(out_dir + "/compare.csv", std::ios::binary) << cmp_csv.str();
    std::ofstream(out_dir + "/summary.txt", std::ios::binary) << summary.str();
    // one data image per kernel/element combination, shared by all variants
    std::set<std::string> dumped;
    for (const auto& spec : specs) {
      const std::string key = std::string(rvdsp::bench::kernel_name(spec.kernel)) +
                              "_" + std::string(rvdsp::bench::elem_name(spec.elem));
      if (!dumped.insert(key).second) continue;
      rvdsp::bench::KernelSpec image_spec = spec;
      image_spec.variant = rvdsp::bench::Variant::kBaseline;
      image_spec.cores = 1;
      const rvdsp::bench::KernelBuild build = rvdsp::bench::generate(image_spec);
      std::ofstream(out_dir + "/" + key + ".hex", std::ios::binary)
          << rvdsp::bench::to_hex_dump(build.preload);
    }
  }
  return all_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rvdsp: DSP-extended RISC core simulator and benchmarks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "assemble and simulate a program");
  std::vector<std::string> asm_paths;
  uint32_t cores = 1;
  std::vector<std::string> data_args;
  std::string timing_path, energy_path, json_path, csv_path;
  uint64_t budget = 1'000'000'000;
  uint32_t base_addr = 0;
  run->add_option("program", asm_paths, "assembly file (one, or one per core)")
      ->required();
  run->add_option("--cores", cores, "number of cluster cores");
  run->add_option("--data", data_args, "preload file@addr (.hex or binary)");
  run->add_option("--timing", timing_path, "timing config file");
  run->add_option("--energy", energy_path, "energy table file");
  run->add_option("--json", json_path, "write JSON report (- for stdout)");
  run->add_option("--csv", csv_path, "write one-line CSV report (- for stdout)");
  run->add_option("--budget", budget, "cycle budget before giving up");
  run->add_option("--base", base_addr, "code base address");

  auto* pr = app.add_subcommand("print", "parse and print canonical form");
  std::string print_path;
  pr->add_option("program", print_path, "assembly file")->required();

  auto* be = app.add_subcommand("bench", "run a benchmark suite");
  std::string suite_name = "all", out_dir;
  uint64_t seed = 0;
  be->add_option("suite", suite_name,
                 "conv | matmul | fir | fixpoint | all");
  be->add_option("--out", out_dir, "output directory for CSV/summary");
  be->add_option("--seed", seed, "data seed");
  be->add_option("--timing", timing_path, "timing config file");
  be->add_option("--energy", energy_path, "energy table file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(asm_paths, cores, data_args, timing_path, energy_path,
                     json_path, csv_path, budget, base_addr);
    if (pr->parsed()) return cmd_print(print_path);
    if (be->parsed())
      return cmd_bench(suite_name, out_dir, seed, timing_path, energy_path);
  } catch (const std::exception& e) {
    std::cerr << "rvdsp: " << e.what() << "\n";
    return kExitFile;
  }
  return kExitOk;
}
