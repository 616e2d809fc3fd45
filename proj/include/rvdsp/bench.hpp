#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rvdsp/energy.hpp"
#include "rvdsp/report.hpp"

namespace rvdsp {
namespace bench {

enum class Kernel {
  kConv3x3,
  kConv5x5,
  kConv7x7,
  kMatmul,
  kFir,
  kVecaddClip,
  kMulqNorm
};

enum class ElemType : uint8_t { kI8, kI16 };
enum class Variant : uint8_t { kBaseline, kExt, kBuiltin };

std::string_view kernel_name(Kernel k);
std::string_view elem_name(ElemType e);
std::string_view variant_name(Variant v);
std::optional<Kernel> kernel_from_name(std::string_view s);

struct KernelSpec {
  Kernel kernel = Kernel::kConv3x3;
  ElemType elem = ElemType::kI8;
  Variant variant = Variant::kBaseline;
  uint32_t cores = 1;
  uint32_t dim = 0;  // 0 = kernel default (image 64, matmul 32, fir/vec n)
  uint64_t seed = 0;

  std::string name() const;
  uint32_t dim_or_default() const;
};

// Seed-derived test data, shared by the generator and the golden reference.
struct KernelInputs {
  std::vector<int32_t> a;     // image / A / x / first operand
  std::vector<int32_t> b;     // B (transposed) / second operand
  std::vector<int32_t> coef;  // convolution coefficients / fir taps
  uint32_t w = 0;             // image width == height, or vector length
  uint32_t k = 0;             // convolution kernel size / matmul K / taps
  int shift = 0;              // round-normalize amount
  int clip_bits = 0;          // saturation width, 0 = none
};

KernelInputs make_inputs(const KernelSpec& spec);

// Host-side exact-integer reference; independent of the simulator.
std::vector<uint8_t> golden_bytes(const KernelSpec& spec,
                                  const KernelInputs& in);

// Everything needed to run one kernel configuration in the cluster.
struct KernelBuild {
  std::vector<std::string> asm_texts;     // one per core
  std::map<uint32_t, uint8_t> preload;    // initial data image
  uint32_t out_addr = 0;
  uint32_t out_bytes = 0;
  uint64_t outputs = 0;                   // output elements, for per-output metrics
  std::vector<uint8_t> golden;
};

KernelBuild generate(const KernelSpec& spec);

struct BenchRow {
  KernelSpec spec;
  uint64_t cycles = 0;
  uint64_t retired = 0;
  uint64_t retired16 = 0;
  double ipc = 0;
  double compressed_ratio = 0;
  uint64_t loads = 0;
  uint64_t stores = 0;
  uint64_t outputs = 0;
  double cycles_per_output = 0;
  double ldst_per_output = 0;
  uint64_t sdotp_retired = 0;
  uint64_t mac_retired = 0;
  double energy_pj = 0;
  ContentionStats contention;
  bool golden_ok = false;
  std::string error;

  std::string csv_row() const;
  static std::string csv_header();
};

// Assembles, runs and golden-checks one kernel configuration.
BenchRow run_kernel(const KernelSpec& spec, const TimingConfig& timing,
                    const EnergyTable& energy);

// Per (kernel, elem, cores) comparison across variants, mirroring the
// reported speedup / energy-ratio / ld-st tables.
struct CompareRow {
  Kernel kernel;
  ElemType elem;
  uint32_t cores;
  double cycles_baseline = 0, cycles_ext = 0, cycles_builtin = 0;
  double speedup_ext = 0;          // baseline / ext
  double speedup_builtin = 0;      // baseline / builtin
  double energy_ratio_ext = 0;     // baseline / ext
  double energy_ratio_builtin = 0;
  double ldst_ratio_builtin = 0;   // ext ldst / builtin ldst
  double contended_pct_ext = 0;
  double contended_pct_builtin = 0;

  std::string csv_row() const;
  static std::string csv_header();
};

// Aborts (throws) when any participating row failed its golden check.
std::vector<CompareRow> compare(const std::vector<BenchRow>& rows);

// Named suites for the CLI: "conv", "matmul", "fir", "fixpoint", "all".
std::vector<KernelSpec> suite(std::string_view name, uint64_t seed);

// One pinned acceptance band evaluated over a set of bench rows. Bands whose
// rows are absent from the set are reported as not applicable.
struct BandCheck {
  std::string name;
  double value = 0;
  double lo = 0;
  double hi = 0;
  bool applicable = false;
  bool pass = false;
};

std::vector<BandCheck> acceptance_bands(const std::vector<BenchRow>& rows);

// Hex-dump form of a data image: '@addr' tokens set the cursor, then
// whitespace-separated hex bytes. Loadable through the CLI --data option.
std::string to_hex_dump(const std::map<uint32_t, uint8_t>& image);

// The single-core kernel set whose ext-over-baseline geometric mean is the
// headline extension-speedup figure.
std::vector<KernelSpec> speedup_suite(uint64_t seed);

}  // namespace bench
}  // namespace rvdsp
