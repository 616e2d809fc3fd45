#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "rvdsp/bench.hpp"
#include "rvdsp/cluster.hpp"

using namespace rvdsp;

namespace {

std::vector<Program> assemble_per_core(const std::vector<std::string>& texts) {
  std::vector<Program> out;
  for (const auto& t : texts) out.push_back(testutil::assemble(t));
  return out;
}

ClusterResult run(const std::vector<std::string>& texts,
                  MemorySystem& mem, uint64_t budget = 10'000'000) {
  ClusterConfig cc;
  cc.cores = static_cast<uint32_t>(texts.size());
  cc.max_cycles = budget;
  return run_cluster(assemble_per_core(texts), mem, cc, TimingConfig{});
}

}  // namespace

TEST_CASE("one-core cluster matches the single-core timed run") {
  const std::string text = R"(
    addi x10, x0, 512
    addi x7, x0, 40
    loop: p.lw x5, 4(x10!)
    add x6, x6, x5
    p.sw x6, 4(x10!)
    addi x7, x7, -1
    bne x7, x0, loop
  )";
  MemorySystem m1;
  ClusterResult cr = run({text}, m1);
  REQUIRE(cr.all_clean());

  auto [r, t] = testutil::run_timed_program(text);
  CHECK(cr.cycles == t.stats.cycles);
  CHECK(cr.cores[0].stats.retired == t.stats.retired);
  CHECK(cr.total_contention().contended_accesses == 0);
  CHECK(m1.bytes == r.mem.bytes);
}

TEST_CASE("distinct banks grant without stalls") {
  // each core hammers its own bank (word-interleaved mapping)
  std::vector<std::string> texts;
  for (int c = 0; c < 4; ++c) {
    texts.push_back("addi x10, x0, " + std::to_string(512 + 4 * c) + R"(
      addi x7, x0, 50
      loop: lw x5, 0(x10)
      addi x7, x7, -1
      bne x7, x0, loop
    )");
  }
  MemorySystem mem;
  ClusterResult cr = run(texts, mem);
  REQUIRE(cr.all_clean());
  CHECK(cr.total_contention().contended_accesses == 0);
  CHECK(cr.total_contention().stall_cycles == 0);
}

TEST_CASE("four cores on one bank serialize within four cycles") {
  std::vector<std::string> texts(4, R"(
    addi x10, x0, 512
    lw x5, 0(x10)
  )");
  MemorySystem mem;
  ClusterResult cr = run(texts, mem);
  REQUIRE(cr.all_clean());
  const ContentionStats total = cr.total_contention();
  CHECK(total.total_accesses == 4);
  CHECK(total.contended_accesses == 3);   // one winner per round
  CHECK(total.stall_cycles == 6);         // 3 + 2 + 1 lost rounds
  CHECK(cr.cycles == 5);                  // addi, then all served within 4
}

TEST_CASE("alternating odd/even banks never collide") {
  // two cores walking even and odd words respectively
  auto prog = [](int start) {
    return "addi x10, x0, " + std::to_string(512 + start) + R"(
      addi x7, x0, 64
      loop: p.lw x5, 8(x10!)
      addi x7, x7, -1
      bne x7, x0, loop
    )";
  };
  MemorySystem mem;
  ClusterResult cr = run({prog(0), prog(4)}, mem);
  REQUIRE(cr.all_clean());
  CHECK(cr.total_contention().contended_accesses == 0);
}

TEST_CASE("round-robin arbitration is fair under constant conflict") {
  std::vector<std::string> texts(4, R"(
    addi x10, x0, 512
    addi x7, x0, 100
    loop: lw x5, 0(x10)
    addi x7, x7, -1
    bne x7, x0, loop
  )");
  MemorySystem mem;
  ClusterResult cr = run(texts, mem);
  REQUIRE(cr.all_clean());
  // every core makes the same progress
  for (const auto& c : cr.cores)
    CHECK(c.stats.retired == cr.cores[0].stats.retired);
}

TEST_CASE("arbiter conservation: one grant per bank, grants+stalls=requests") {
  std::mt19937 gen(5);
  BankArbiter arb(8);
  for (int cycle = 0; cycle < 10'000; ++cycle) {
    std::vector<BankArbiter::Request> reqs;
    const uint32_t n = gen() % 5;
    for (uint32_t c = 0; c < n; ++c)
      reqs.push_back(BankArbiter::Request{c, static_cast<uint32_t>(gen() % 8)});
    const std::vector<bool> grants = arb.arbitrate(reqs);
    REQUIRE(grants.size() == reqs.size());
    std::array<int, 8> per_bank{};
    size_t granted = 0;
    for (size_t i = 0; i < reqs.size(); ++i) {
      if (grants[i]) {
        ++granted;
        ++per_bank[reqs[i].bank];
      }
    }
    for (int b = 0; b < 8; ++b) CHECK(per_bank[static_cast<size_t>(b)] <= 1);
    // every requested bank grants exactly one contender
    for (const auto& r : reqs) {
      bool bank_granted = false;
      for (size_t i = 0; i < reqs.size(); ++i)
        bank_granted |= grants[i] && reqs[i].bank == r.bank;
      CHECK(bank_granted);
    }
    CHECK(granted + (reqs.size() - granted) == reqs.size());
  }
}

TEST_CASE("cluster runs are deterministic") {
  bench::KernelSpec spec;
  spec.kernel = bench::Kernel::kConv5x5;
  spec.variant = bench::Variant::kExt;
  spec.cores = 4;
  spec.dim = 16;
  const bench::KernelBuild build = bench::generate(spec);
  auto once = [&] {
    MemorySystem mem;
    for (const auto& [a, b] : build.preload) mem.bytes[a] = b;
    ClusterConfig cc;
    cc.cores = 4;
    ClusterResult cr =
        run_cluster(assemble_per_core(build.asm_texts), mem, cc, TimingConfig{});
    REQUIRE(cr.all_clean());
    return std::tuple{cr.cycles, cr.total_contention().contended_accesses,
                      cr.total_contention().stall_cycles, mem.bytes};
  };
  CHECK(once() == once());
}

TEST_CASE("disjoint writes equal the sequential composition") {
  std::vector<std::string> texts;
  for (int c = 0; c < 4; ++c) {
    texts.push_back("addi x10, x0, " + std::to_string(1024 + 256 * c) + R"(
      addi x7, x0, 32
      addi x5, x0, )" + std::to_string(c + 1) + R"(
      loop: p.sw x5, 4(x10!)
      add x5, x5, x5
      addi x7, x7, -1
      bne x7, x0, loop
    )");
  }
  MemorySystem cluster_mem;
  ClusterResult cr = run(texts, cluster_mem);
  REQUIRE(cr.all_clean());

  MemorySystem seq_mem;
  for (const auto& t : texts) {
    Program p = testutil::assemble(t);
    CoreState core;
    core.reset(0);
    REQUIRE(run_untimed(core, seq_mem, p));
  }
  CHECK(cluster_mem.bytes == seq_mem.bytes);
}

TEST_CASE("barrier joins all cores") {
  // core 0 does extra work before arriving; others wait, then all read the
  // value core 0 published before the barrier
  std::vector<std::string> texts;
  for (int c = 0; c < 4; ++c) {
    std::string t = "addi x10, x0, 1536\n";
    if (c == 0) {
      t += "addi x7, x0, 200\n";
      t += "slow: addi x7, x7, -1\n";
      t += "bne x7, x0, slow\n";
      t += "addi x5, x0, 77\n";
      t += "sw x5, 0(x10)\n";
    }
    t += "lui x31, 0x7FFF0\n";
    t += "sw x0, 0(x31)\n";
    t += "lw x6, 0(x10)\n";
    t += "sw x6, " + std::to_string(4 + 4 * c) + "(x10)\n";
    texts.push_back(t);
  }
  MemorySystem mem;
  ClusterResult cr = run(texts, mem);
  REQUIRE(cr.all_clean());
  for (int c = 0; c < 4; ++c)
    CHECK(mem.load32(static_cast<uint32_t>(1536 + 4 + 4 * c)) == 77);
  // waiting cores idled: cycles comparable to the slow core
  CHECK(cr.cores[1].stats.cycles >= 600);
}

TEST_CASE("cycle budget exhaustion flags a deadlock") {
  std::vector<std::string> texts = {"loop: j loop\n", "nop\n"};
  MemorySystem mem;
  ClusterResult cr = run(texts, mem, 2000);
  CHECK(cr.deadlock);
  CHECK(!cr.all_clean());
}

TEST_CASE("strip-parallel convolution scales near ideally") {
  bench::KernelSpec one;
  one.kernel = bench::Kernel::kConv5x5;
  one.elem = bench::ElemType::kI8;
  one.variant = bench::Variant::kBuiltin;
  one.cores = 1;
  bench::KernelSpec four = one;
  four.cores = 4;
  const bench::BenchRow r1 =
      bench::run_kernel(one, TimingConfig{}, EnergyTable::defaults());
  const bench::BenchRow r4 =
      bench::run_kernel(four, TimingConfig{}, EnergyTable::defaults());
  REQUIRE(r1.golden_ok);
  REQUIRE(r4.golden_ok);
  const double speedup =
      static_cast<double>(r1.cycles) / static_cast<double>(r4.cycles);
  CHECK(speedup >= 3.5);
}
