#include "rvdsp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rvdsp/assembler.hpp"
#include "rvdsp/cluster.hpp"

namespace rvdsp {
namespace bench {

std::string_view kernel_name(Kernel k) {
  switch (k) {
    case Kernel::kConv3x3:
      return "conv3x3";
    case Kernel::kConv5x5:
      return "conv5x5";
    case Kernel::kConv7x7:
      return "conv7x7";
    case Kernel::kMatmul:
      return "matmul";
    case Kernel::kFir:
      return "fir";
    case Kernel::kVecaddClip:
      return "vecadd_clip";
    case Kernel::kMulqNorm:
      return "mulq_norm";
  }
  return "?";
}

std::string_view elem_name(ElemType e) {
  return e == ElemType::kI8 ? "i8" : "i16";
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kBaseline:
      return "baseline";
    case Variant::kExt:
      return "ext";
    case Variant::kBuiltin:
      return "builtin";
  }
  return "?";
}

std::optional<Kernel> kernel_from_name(std::string_view s) {
  for (Kernel k : {Kernel::kConv3x3, Kernel::kConv5x5, Kernel::kConv7x7,
                   Kernel::kMatmul, Kernel::kFir, Kernel::kVecaddClip,
                   Kernel::kMulqNorm})
    if (s == kernel_name(k)) return k;
  return std::nullopt;
}

std::string KernelSpec::name() const {
  std::ostringstream os;
  os << kernel_name(kernel) << "_" << elem_name(elem) << "_"
     << variant_name(variant) << "_" << cores << "c";
  return os.str();
}

uint32_t KernelSpec::dim_or_default() const {
  if (dim != 0) return dim;
  switch (kernel) {
    case Kernel::kConv3x3:
    case Kernel::kConv5x5:
    case Kernel::kConv7x7:
      return 64;
    case Kernel::kMatmul:
      return 32;
    case Kernel::kFir:
      return 256;
    case Kernel::kVecaddClip:
    case Kernel::kMulqNorm:
      return 1024;
  }
  return 64;
}

namespace {

int conv_k(Kernel k) {
  return k == Kernel::kConv3x3 ? 3 : (k == Kernel::kConv5x5 ? 5 : 7);
}

std::vector<int32_t> random_values(std::mt19937& rng, size_t n, int lo,
                                   int hi) {
  std::uniform_int_distribution<int32_t> d(lo, hi);
  std::vector<int32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Separable binomial approximations of a Gaussian, small enough to stay in
// 8-bit coefficient range; test parameters, not reported values.
std::vector<int32_t> gaussian_coef(int k, int* shift) {
  std::vector<int32_t> row;
  if (k == 3) {
    row = {1, 2, 1};
    *shift = 4;
  } else if (k == 5) {
    row = {1, 4, 6, 4, 1};
    *shift = 8;
  } else {
    row = {1, 2, 3, 4, 3, 2, 1};
    *shift = 8;
  }
  std::vector<int32_t> c(static_cast<size_t>(k) * static_cast<size_t>(k));
  for (int r = 0; r < k; ++r)
    for (int q = 0; q < k; ++q)
      c[static_cast<size_t>(r * k + q)] =
          row[static_cast<size_t>(r)] * row[static_cast<size_t>(q)];
  return c;
}

void store_le(std::vector<uint8_t>& out, size_t at, uint32_t v, int width) {
  for (int i = 0; i < width; ++i)
    out[at + static_cast<size_t>(i)] = static_cast<uint8_t>(v >> 8 * i);
}

int32_t round_normalize(int32_t acc, int shift) {
  const uint32_t sum = static_cast<uint32_t>(acc) +
                       (shift > 0 ? 1u << (shift - 1) : 0u);
  return static_cast<int32_t>(sum) >> shift;
}

int32_t clip_signed(int32_t x, int bits) {
  const int32_t hi = (1 << (bits - 1)) - 1;
  const int32_t lo = -(1 << (bits - 1));
  return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace

KernelInputs make_inputs(const KernelSpec& spec) {
  std::mt19937 rng(static_cast<uint32_t>(spec.seed * 0x9E3779B9ull + 12345));
  KernelInputs in;
  const uint32_t dim = spec.dim_or_default();
  const bool i8 = spec.elem == ElemType::kI8;
  switch (spec.kernel) {
    case Kernel::kConv3x3:
    case Kernel::kConv5x5:
    case Kernel::kConv7x7: {
      in.w = dim;
      in.k = static_cast<uint32_t>(conv_k(spec.kernel));
      in.a = random_values(rng, static_cast<size_t>(dim) * dim,
                           i8 ? -128 : -1024, i8 ? 127 : 1023);
      in.coef = gaussian_coef(static_cast<int>(in.k), &in.shift);
      in.clip_bits = i8 ? 8 : 16;
      break;
    }
    case Kernel::kMatmul: {
      in.w = dim;  // M == N == K
      in.k = dim;
      in.a = random_values(rng, static_cast<size_t>(dim) * dim,
                           i8 ? -128 : -1024, i8 ? 127 : 1023);
      in.b = random_values(rng, static_cast<size_t>(dim) * dim,
                           i8 ? -128 : -1024, i8 ? 127 : 1023);
      break;
    }
    case Kernel::kFir: {
      in.w = dim;  // outputs
      in.k = 16;   // taps
      in.shift = 6;
      in.a = random_values(rng, dim + in.k - 1, i8 ? -128 : -1024,
                           i8 ? 127 : 1023);
      in.coef = random_values(rng, in.k, -64, 63);
      break;
    }
    case Kernel::kVecaddClip: {
      in.w = dim;
      in.clip_bits = 12;
      in.a = random_values(rng, dim, -1536, 1535);
      in.b = random_values(rng, dim, -1536, 1535);
      break;
    }
    case Kernel::kMulqNorm: {
      in.w = dim;
      in.shift = 12;
      in.a = random_values(rng, dim, -2048, 2047);
      in.b = random_values(rng, dim, -2048, 2047);
      break;
    }
  }
  return in;
}

std::vector<uint8_t> golden_bytes(const KernelSpec& spec,
                                  const KernelInputs& in) {
  const int ew = spec.elem == ElemType::kI8 ? 1 : 2;
  std::vector<uint8_t> out;
  switch (spec.kernel) {
    case Kernel::kConv3x3:
    case Kernel::kConv5x5:
    case Kernel::kConv7x7: {
      const uint32_t w = in.w, k = in.k, ow = w - k + 1;
      out.resize(static_cast<size_t>(ow) * ow * static_cast<size_t>(ew));
      for (uint32_t r = 0; r < ow; ++r) {
        for (uint32_t c = 0; c < ow; ++c) {
          int64_t acc = 0;
          for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = 0; j < k; ++j)
              acc += static_cast<int64_t>(in.coef[i * k + j]) *
                     in.a[(r + i) * w + (c + j)];
          const int32_t wrapped = static_cast<int32_t>(
              static_cast<uint32_t>(static_cast<uint64_t>(acc)));
          const int32_t v =
              clip_signed(round_normalize(wrapped, in.shift), in.clip_bits);
          store_le(out, (static_cast<size_t>(r) * ow + c) * static_cast<size_t>(ew),
                   static_cast<uint32_t>(v), ew);
        }
      }
      return out;
    }
    case Kernel::kMatmul: {
      const uint32_t n = in.w;
      out.resize(static_cast<size_t>(n) * n * 4);
      for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
          uint32_t acc = 0;
          for (uint32_t q = 0; q < n; ++q)
            acc += static_cast<uint32_t>(in.a[i * n + q]) *
                   static_cast<uint32_t>(in.b[j * n + q]);
          store_le(out, (static_cast<size_t>(i) * n + j) * 4, acc, 4);
        }
      }
      return out;
    }
    case Kernel::kFir: {
      out.resize(static_cast<size_t>(in.w) * static_cast<size_t>(ew));
      for (uint32_t i = 0; i < in.w; ++i) {
        uint32_t acc = 0;
        for (uint32_t t = 0; t < in.k; ++t)
          acc += static_cast<uint32_t>(in.a[i + t]) *
                 static_cast<uint32_t>(in.coef[t]);
        const int32_t v = round_normalize(static_cast<int32_t>(acc), in.shift);
        store_le(out, static_cast<size_t>(i) * static_cast<size_t>(ew),
                 static_cast<uint32_t>(v), ew);
      }
      return out;
    }
    case Kernel::kVecaddClip: {
      out.resize(static_cast<size_t>(in.w) * 2);
      for (uint32_t i = 0; i < in.w; ++i) {
        const int32_t v = clip_signed(in.a[i] + in.b[i], in.clip_bits);
        store_le(out, static_cast<size_t>(i) * 2, static_cast<uint32_t>(v), 2);
      }
      return out;
    }
    case Kernel::kMulqNorm: {
      out.resize(static_cast<size_t>(in.w) * 2);
      for (uint32_t i = 0; i < in.w; ++i) {
        const int32_t v = round_normalize(in.a[i] * in.b[i], in.shift);
        store_le(out, static_cast<size_t>(i) * 2, static_cast<uint32_t>(v), 2);
      }
      return out;
    }
  }
  return out;
}

std::string BenchRow::csv_header() {
  return "kernel,elem,variant,cores,cycles,retired,ipc,compressed_ratio,"
         "loads,stores,outputs,cycles_per_output,ldst_per_output,"
         "sdotp_retired,mac_retired,energy_pj,contended_accesses,"
         "total_accesses,contended_pct,golden";
}

std::string BenchRow::csv_row() const {
  std::ostringstream os;
  os << kernel_name(spec.kernel) << "," << elem_name(spec.elem) << ","
     << variant_name(spec.variant) << "," << spec.cores << "," << cycles << ","
     << retired << "," << ipc << "," << compressed_ratio << "," << loads << ","
     << stores << "," << outputs << "," << cycles_per_output << ","
     << ldst_per_output << "," << sdotp_retired << "," << mac_retired << ","
     << energy_pj << "," << contention.contended_accesses << ","
     << contention.total_accesses << "," << contention.contended_pct() << ","
     << (golden_ok ? "pass" : "fail");
  return os.str();
}

BenchRow run_kernel(const KernelSpec& spec, const TimingConfig& timing,
                    const EnergyTable& energy) {
  BenchRow row;
  row.spec = spec;
  const KernelBuild build = generate(spec);
  row.outputs = build.outputs;

  std::vector<Program> programs;
  for (const auto& text : build.asm_texts) {
    AsmResult res = parse(text);
    if (!res.ok()) {
      std::ostringstream os;
      os << "kernel " << spec.name() << " failed to assemble:";
      for (const auto& e : res.errors)
        os << " [line " << e.line << "] " << e.message;
      row.error = os.str();
      return row;
    }
    programs.push_back(std::move(res.program));
  }

  MemorySystem mem;
  for (const auto& [addr, byte] : build.preload) mem.bytes[addr] = byte;

  ClusterConfig cc;
  cc.cores = spec.cores;
  const ClusterResult cr = run_cluster(programs, mem, cc, timing);
  const RunReport rep = RunReport::from_cluster(cr, energy);
  if (!rep.clean()) {
    row.error = "simulation did not finish cleanly";
    for (const auto& c : rep.cores)
      if (!c.stats.trap_message.empty()) row.error += ": " + c.stats.trap_message;
    return row;
  }

  row.cycles = rep.cycles;
  row.retired = rep.retired();
  row.retired16 = rep.retired16();
  row.ipc = rep.ipc();
  row.compressed_ratio = rep.compressed_ratio();
  row.loads = rep.loads();
  row.stores = rep.stores();
  row.cycles_per_output =
      row.outputs ? static_cast<double>(row.cycles) / static_cast<double>(row.outputs) : 0;
  row.ldst_per_output =
      row.outputs ? static_cast<double>(row.loads + row.stores) /
                        static_cast<double>(row.outputs)
                  : 0;
  for (const auto& c : rep.cores) {
    row.sdotp_retired +=
        c.stats.retired_by_mn[static_cast<size_t>(Mnemonic::kPvSdotp)];
    row.mac_retired +=
        c.stats.retired_by_mn[static_cast<size_t>(Mnemonic::kPMac)];
  }
  row.energy_pj = rep.energy_pj();
  row.contention = rep.contention();

  row.golden_ok = true;
  for (size_t i = 0; i < build.golden.size(); ++i) {
    if (mem.bytes[build.out_addr + i] != build.golden[i]) {
      row.golden_ok = false;
      std::ostringstream os;
      os << "golden mismatch at byte " << i << ": got "
         << static_cast<int>(mem.bytes[build.out_addr + i]) << ", want "
         << static_cast<int>(build.golden[i]);
      row.error = os.str();
      break;
    }
  }
  return row;
}

std::string CompareRow::csv_header() {
  return "kernel,elem,cores,cycles_baseline,cycles_ext,cycles_builtin,"
         "speedup_ext,speedup_builtin,energy_ratio_ext,energy_ratio_builtin,"
         "ldst_ratio_builtin,contended_pct_ext,contended_pct_builtin";
}

std::string CompareRow::csv_row() const {
  std::ostringstream os;
  os << kernel_name(kernel) << "," << elem_name(elem) << "," << cores << ","
     << cycles_baseline << "," << cycles_ext << "," << cycles_builtin << ","
     << speedup_ext << "," << speedup_builtin << "," << energy_ratio_ext << ","
     << energy_ratio_builtin << "," << ldst_ratio_builtin << ","
     << contended_pct_ext << "," << contended_pct_builtin;
  return os.str();
}

std::vector<CompareRow> compare(const std::vector<BenchRow>& rows) {
  for (const auto& r : rows)
    if (!r.golden_ok)
      throw std::runtime_error("compare: golden check failed for " +
                               r.spec.name() +
                               (r.error.empty() ? "" : ": " + r.error));
  std::vector<CompareRow> out;
  auto find = [&](Kernel k, ElemType e, uint32_t c, Variant v) -> const BenchRow* {
    for (const auto& r : rows)
      if (r.spec.kernel == k && r.spec.elem == e && r.spec.cores == c &&
          r.spec.variant == v)
        return &r;
    return nullptr;
  };
  for (const auto& r : rows) {
    if (r.spec.variant != Variant::kBaseline) continue;
    CompareRow cr;
    cr.kernel = r.spec.kernel;
    cr.elem = r.spec.elem;
    cr.cores = r.spec.cores;
    cr.cycles_baseline = static_cast<double>(r.cycles);
    const double base_e = r.energy_pj;
    if (const BenchRow* ext =
            find(cr.kernel, cr.elem, cr.cores, Variant::kExt)) {
      cr.cycles_ext = static_cast<double>(ext->cycles);
      cr.speedup_ext = cr.cycles_baseline / cr.cycles_ext;
      cr.energy_ratio_ext = base_e / ext->energy_pj;
      cr.contended_pct_ext = ext->contention.contended_pct();
      if (const BenchRow* bi =
              find(cr.kernel, cr.elem, cr.cores, Variant::kBuiltin)) {
        cr.cycles_builtin = static_cast<double>(bi->cycles);
        cr.speedup_builtin = cr.cycles_baseline / cr.cycles_builtin;
        cr.energy_ratio_builtin = base_e / bi->energy_pj;
        cr.contended_pct_builtin = bi->contention.contended_pct();
        const double bi_ldst = static_cast<double>(bi->loads + bi->stores);
        if (bi_ldst > 0)
          cr.ldst_ratio_builtin =
              static_cast<double>(ext->loads + ext->stores) / bi_ldst;
      }
    }
    out.push_back(cr);
  }
  return out;
}

std::vector<KernelSpec> suite(std::string_view name, uint64_t seed) {
  std::vector<KernelSpec> specs;
  auto add = [&](Kernel k, ElemType e, Variant v, uint32_t cores) {
    KernelSpec s;
    s.kernel = k;
    s.elem = e;
    s.variant = v;
    s.cores = cores;
    s.seed = seed;
    specs.push_back(s);
  };
  auto add_conv = [&] {
    for (Kernel k : {Kernel::kConv3x3, Kernel::kConv5x5, Kernel::kConv7x7})
      for (ElemType e : {ElemType::kI8, ElemType::kI16})
        for (Variant v : {Variant::kBaseline, Variant::kExt, Variant::kBuiltin})
          for (uint32_t c : {1u, 4u}) add(k, e, v, c);
  };
  auto add_matmul = [&] {
    for (Variant v : {Variant::kBaseline, Variant::kExt, Variant::kBuiltin})
      for (uint32_t c : {1u, 4u}) add(Kernel::kMatmul, ElemType::kI8, v, c);
  };
  auto add_fir = [&] {
    for (ElemType e : {ElemType::kI8, ElemType::kI16})
      for (Variant v : {Variant::kBaseline, Variant::kExt, Variant::kBuiltin})
        for (uint32_t c : {1u, 4u}) add(Kernel::kFir, e, v, c);
  };
  auto add_fixpoint = [&] {
    for (Kernel k : {Kernel::kVecaddClip, Kernel::kMulqNorm})
      for (Variant v : {Variant::kBaseline, Variant::kExt})
        for (uint32_t c : {1u, 4u}) add(k, ElemType::kI16, v, c);
  };
  if (name == "conv")
    add_conv();
  else if (name == "matmul")
    add_matmul();
  else if (name == "fir")
    add_fir();
  else if (name == "fixpoint")
    add_fixpoint();
  else if (name == "all") {
    add_conv();
    add_matmul();
    add_fir();
    add_fixpoint();
  } else {
    throw std::runtime_error("unknown suite '" + std::string(name) +
                             "' (conv, matmul, fir, fixpoint, all)");
  }
  return specs;
}

namespace {

const BenchRow* find_row(const std::vector<BenchRow>& rows, Kernel k,
                         ElemType e, Variant v, uint32_t cores) {
  for (const auto& r : rows)
    if (r.spec.kernel == k && r.spec.elem == e && r.spec.variant == v &&
        r.spec.cores == cores && r.golden_ok)
      return &r;
  return nullptr;
}

double geomean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += std::log(x);
  return std::exp(s / static_cast<double>(v.size()));
}

}  // namespace

std::vector<BandCheck> acceptance_bands(const std::vector<BenchRow>& rows) {
  std::vector<BandCheck> out;
  constexpr double kInf = 1e300;
  auto band = [&](const std::string& name, double lo, double hi) {
    BandCheck b;
    b.name = name;
    b.lo = lo;
    b.hi = hi;
    out.push_back(b);
    return out.size() - 1;
  };
  auto set = [&](size_t i, double value) {
    out[i].value = value;
    out[i].applicable = true;
    out[i].pass = value >= out[i].lo && value <= out[i].hi;
  };

  // Exact per-output instruction counts of the conv5x5 i8 inner products.
  {
    const size_t i = band("conv5x5 i8 builtin sdotp per output", 7, 7);
    if (const BenchRow* r = find_row(rows, Kernel::kConv5x5, ElemType::kI8,
                                     Variant::kBuiltin, 1))
      set(i, static_cast<double>(r->sdotp_retired) /
                 static_cast<double>(r->outputs));
    const size_t j = band("conv5x5 i8 ext mac per output", 25, 25);
    if (const BenchRow* r =
            find_row(rows, Kernel::kConv5x5, ElemType::kI8, Variant::kExt, 1))
      set(j, static_cast<double>(r->mac_retired) /
                 static_cast<double>(r->outputs));
  }

  // ld/st reduction of builtin over ext, conv 3x3 + 5x5 i8, 8.3x +-20%.
  {
    const size_t i = band("conv i8 ld/st ratio ext/builtin", 8.3 * 0.8, 8.3 * 1.2);
    const BenchRow* e3 =
        find_row(rows, Kernel::kConv3x3, ElemType::kI8, Variant::kExt, 1);
    const BenchRow* e5 =
        find_row(rows, Kernel::kConv5x5, ElemType::kI8, Variant::kExt, 1);
    const BenchRow* b3 =
        find_row(rows, Kernel::kConv3x3, ElemType::kI8, Variant::kBuiltin, 1);
    const BenchRow* b5 =
        find_row(rows, Kernel::kConv5x5, ElemType::kI8, Variant::kBuiltin, 1);
    if (e3 && e5 && b3 && b5)
      set(i, static_cast<double>(e3->loads + e3->stores + e5->loads +
                                 e5->stores) /
                 static_cast<double>(b3->loads + b3->stores + b5->loads +
                                     b5->stores));
  }

  // Multi-core scaling of the builtin convolution.
  {
    const size_t i = band("conv5x5 i8 builtin 4-core speedup", 3.5, kInf);
    const BenchRow* c1 =
        find_row(rows, Kernel::kConv5x5, ElemType::kI8, Variant::kBuiltin, 1);
    const BenchRow* c4 =
        find_row(rows, Kernel::kConv5x5, ElemType::kI8, Variant::kBuiltin, 4);
    if (c1 && c4)
      set(i, static_cast<double>(c1->cycles) / static_cast<double>(c4->cycles));
  }

  // Extension speedup bands.
  {
    const size_t i = band("ext/baseline speedup geomean", 1.20, 1.60);
    std::vector<double> ratios;
    bool complete = true;
    for (const auto& s : speedup_suite(0)) {
      if (s.variant != Variant::kBaseline) continue;
      const BenchRow* base =
          find_row(rows, s.kernel, s.elem, Variant::kBaseline, 1);
      const BenchRow* ext = find_row(rows, s.kernel, s.elem, Variant::kExt, 1);
      if (!base || !ext) {
        complete = false;
        break;
      }
      ratios.push_back(static_cast<double>(base->cycles) /
                       static_cast<double>(ext->cycles));
    }
    if (complete && !ratios.empty()) set(i, geomean(ratios));

    const size_t j = band("matmul i8 builtin speedup", 8, 13);
    const BenchRow* base =
        find_row(rows, Kernel::kMatmul, ElemType::kI8, Variant::kBaseline, 1);
    const BenchRow* bi =
        find_row(rows, Kernel::kMatmul, ElemType::kI8, Variant::kBuiltin, 1);
    if (base && bi)
      set(j, static_cast<double>(base->cycles) / static_cast<double>(bi->cycles));

    const size_t q = band("conv builtin speedup geomean", 2.0, 8.0);
    std::vector<double> conv_ratios;
    bool conv_complete = true;
    for (Kernel k : {Kernel::kConv3x3, Kernel::kConv5x5, Kernel::kConv7x7})
      for (ElemType e : {ElemType::kI8, ElemType::kI16}) {
        const BenchRow* b = find_row(rows, k, e, Variant::kBaseline, 1);
        const BenchRow* u = find_row(rows, k, e, Variant::kBuiltin, 1);
        if (!b || !u) {
          conv_complete = false;
        } else {
          conv_ratios.push_back(static_cast<double>(b->cycles) /
                                static_cast<double>(u->cycles));
        }
      }
    if (conv_complete && !conv_ratios.empty()) set(q, geomean(conv_ratios));
  }

  // Contention ordering on the 4-core convolutions.
  {
    ContentionStats ext_c, bi_c;
    bool have = false;
    for (Kernel k : {Kernel::kConv3x3, Kernel::kConv5x5, Kernel::kConv7x7})
      for (ElemType e : {ElemType::kI8, ElemType::kI16}) {
        const BenchRow* ex = find_row(rows, k, e, Variant::kExt, 4);
        const BenchRow* bi = find_row(rows, k, e, Variant::kBuiltin, 4);
        if (ex && bi) {
          ext_c += ex->contention;
          bi_c += bi->contention;
          have = true;
        }
      }
    const size_t i =
        band("4-core conv contended pct, ext minus builtin", 1e-9, kInf);
    const size_t j = band("4-core conv contention reduction", 10, kInf);
    if (have) {
      set(i, ext_c.contended_pct() - bi_c.contended_pct());
      if (bi_c.contended_accesses > 0)
        set(j, static_cast<double>(ext_c.contended_accesses) /
                   static_cast<double>(bi_c.contended_accesses));
    }
  }

  // Compressed-instruction ratios, aggregated over the whole baseline suite.
  {
    const size_t i = band("baseline suite compressed ratio", 0.20, 0.50);
    bool complete = true;
    for (const auto& s : speedup_suite(0))
      if (s.variant == Variant::kBaseline &&
          !find_row(rows, s.kernel, s.elem, Variant::kBaseline, 1))
        complete = false;
    uint64_t r16 = 0, r = 0;
    for (const auto& row : rows)
      if (row.spec.variant == Variant::kBaseline && row.spec.cores == 1 &&
          row.golden_ok) {
        r16 += row.retired16;
        r += row.retired;
      }
    if (complete && r > 0) set(i, static_cast<double>(r16) / static_cast<double>(r));

    const size_t j =
        band("compressed ratio margin, baseline minus builtin", 1e-9, kInf);
    double min_margin = kInf;
    bool have = false;
    for (Kernel k : {Kernel::kConv3x3, Kernel::kConv5x5, Kernel::kConv7x7,
                     Kernel::kMatmul, Kernel::kFir})
      for (ElemType e : {ElemType::kI8, ElemType::kI16}) {
        const BenchRow* base = find_row(rows, k, e, Variant::kBaseline, 1);
        const BenchRow* bi = find_row(rows, k, e, Variant::kBuiltin, 1);
        if (base && bi) {
          min_margin =
              std::min(min_margin, base->compressed_ratio - bi->compressed_ratio);
          have = true;
        }
      }
    if (have) set(j, min_margin);
  }

  // Energy ordering on the convolutions, default table.
  {
    const size_t i = band("conv energy margin, (baseline-ext)/baseline", 1e-9, 1);
    const size_t j = band("conv energy margin, (ext-builtin)/ext", 1e-9, 1);
    double m1 = 1e300, m2 = 1e300;
    bool have = false;
    for (Kernel k : {Kernel::kConv3x3, Kernel::kConv5x5, Kernel::kConv7x7})
      for (ElemType e : {ElemType::kI8, ElemType::kI16}) {
        const BenchRow* b = find_row(rows, k, e, Variant::kBaseline, 1);
        const BenchRow* x = find_row(rows, k, e, Variant::kExt, 1);
        const BenchRow* u = find_row(rows, k, e, Variant::kBuiltin, 1);
        if (b && x && u) {
          m1 = std::min(m1, (b->energy_pj - x->energy_pj) / b->energy_pj);
          m2 = std::min(m2, (x->energy_pj - u->energy_pj) / x->energy_pj);
          have = true;
        }
      }
    if (have) {
      set(i, m1);
      set(j, m2);
    }
  }

  return out;
}

std::string to_hex_dump(const std::map<uint32_t, uint8_t>& image) {
  std::ostringstream os;
  os << std::hex;
  uint32_t expect = UINT32_MAX;
  int on_line = 0;
  for (const auto& [addr, byte] : image) {
    if (addr != expect) {
      if (on_line) os << "\n";
      os << "@" << addr << "\n";
      on_line = 0;
    }
    os << static_cast<int>(byte) << (++on_line % 16 == 0 ? "\n" : " ");
    if (on_line % 16 == 0) on_line = 0;
    expect = addr + 1;
  }
  if (on_line) os << "\n";
  return os.str();
}

std::vector<KernelSpec> speedup_suite(uint64_t seed) {
  std::vector<KernelSpec> specs;
  auto add = [&](Kernel k, ElemType e) {
    for (Variant v : {Variant::kBaseline, Variant::kExt}) {
      KernelSpec s;
      s.kernel = k;
      s.elem = e;
      s.variant = v;
      s.seed = seed;
      specs.push_back(s);
    }
  };
  add(Kernel::kConv3x3, ElemType::kI8);
  add(Kernel::kConv3x3, ElemType::kI16);
  add(Kernel::kConv5x5, ElemType::kI8);
  add(Kernel::kConv5x5, ElemType::kI16);
  add(Kernel::kConv7x7, ElemType::kI8);
  add(Kernel::kConv7x7, ElemType::kI16);
  add(Kernel::kMatmul, ElemType::kI8);
  add(Kernel::kFir, ElemType::kI8);
  add(Kernel::kFir, ElemType::kI16);
  add(Kernel::kVecaddClip, ElemType::kI16);
  add(Kernel::kMulqNorm, ElemType::kI16);
  return specs;
}

}  // namespace bench
}  // namespace rvdsp
