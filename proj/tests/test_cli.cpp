#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

const std::string kBin = RVDSP_BIN;
const std::string kSrc = RVDSP_SOURCE_DIR;

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cmd(const std::string& args) {
  const std::string out_path =
      "/tmp/rvdsp_cli_out_" + std::to_string(::getpid()) + ".txt";
  const int rc =
      std::system((kBin + " " + args + " > " + out_path + " 2>&1").c_str());
  CmdResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out_path);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  std::filesystem::remove(out_path);
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

// Minimal structural validator for the subset of JSON Schema the shipped
// schema file uses: type, required, properties, items, $ref, definitions,
// additionalProperties.
class SchemaChecker {
 public:
  explicit SchemaChecker(json schema) : root_(std::move(schema)) {}

  bool check(const json& value) { return node(value, root_); }

 private:
  bool node(const json& value, const json& schema) {
    json sch = schema;
    if (sch.contains("$ref")) {
      const std::string ref = sch["$ref"];
      const std::string key = ref.substr(ref.rfind('/') + 1);
      sch = root_["definitions"][key];
    }
    if (sch.contains("type") && !type_ok(value, sch["type"])) return false;
    if (sch.contains("required")) {
      for (const auto& k : sch["required"])
        if (!value.contains(k.get<std::string>())) {
          MESSAGE("missing required key: ", k.get<std::string>());
          return false;
        }
    }
    if (sch.contains("properties")) {
      for (auto it = sch["properties"].begin(); it != sch["properties"].end();
           ++it)
        if (value.contains(it.key()) && !node(value[it.key()], it.value()))
          return false;
    }
    if (sch.contains("additionalProperties") &&
        sch["additionalProperties"].is_object()) {
      for (const auto& [k, v] : value.items()) {
        (void)k;
        if (!node(v, sch["additionalProperties"])) return false;
      }
    }
    if (sch.contains("items") && value.is_array()) {
      for (const auto& item : value)
        if (!node(item, sch["items"])) return false;
    }
    return true;
  }

  static bool type_ok(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    return true;
  }

  json root_;
};

}  // namespace

TEST_CASE("run reports ipc 1.0 for a straight nop block") {
  const std::string prog = write_temp("cli_nops.s", "nop\nnop\nnop\nnop\n");
  const std::string jpath = "/tmp/cli_nops.json";
  const CmdResult r = run_cmd("run " + prog + " --json " + jpath);
  CHECK(r.exit_code == 0);
  json rep = json::parse(std::ifstream(jpath));
  CHECK(rep["cycles"] == 4);
  CHECK(rep["ipc"] == 1.0);
  CHECK(rep["cores"].size() == 1);
}

TEST_CASE("parse errors exit with code 2 and a line number") {
  const std::string prog = write_temp("cli_bad.s", "nop\nbogus x1\n");
  const CmdResult r = run_cmd("run " + prog);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find(":2:") != std::string::npos);
}

TEST_CASE("traps exit with code 3") {
  const std::string prog = write_temp("cli_trap.s", R"(
    lui x10, 4096
    lw x5, 0(x10)
  )");
  const CmdResult r = run_cmd("run " + prog);
  CHECK(r.exit_code == 3);
}

TEST_CASE("budget exhaustion exits with code 4") {
  const std::string prog = write_temp("cli_spin.s", "loop: j loop\n");
  const CmdResult r = run_cmd("run " + prog + " --budget 1000");
  CHECK(r.exit_code == 4);
}

TEST_CASE("missing files exit with code 1") {
  CHECK(run_cmd("run /nonexistent/prog.s").exit_code == 1);
}

TEST_CASE("multi-core run produces per-core sections") {
  const std::string prog = write_temp("cli_mc.s", R"(
    lui x31, 0x7FFF0
    sw x0, 0(x31)
  )");
  const std::string jpath = "/tmp/cli_mc.json";
  const CmdResult r =
      run_cmd("run " + prog + " --cores 4 --json " + jpath);
  CHECK(r.exit_code == 0);
  json rep = json::parse(std::ifstream(jpath));
  CHECK(rep["cores"].size() == 4);
}

TEST_CASE("JSON reports validate against the shipped schema") {
  const std::string prog = write_temp("cli_schema.s", R"(
    addi x10, x0, 257
    lw x5, 0(x10)
    add x6, x5, x5
    pv.add.b x7, x6, x6
    sw x7, 0(x10)
  )");
  const std::string jpath = "/tmp/cli_schema.json";
  REQUIRE(run_cmd("run " + prog + " --cores 2 --json " + jpath).exit_code == 0);
  json rep = json::parse(std::ifstream(jpath));
  json schema = json::parse(std::ifstream(kSrc + "/docs/report.schema.json"));
  SchemaChecker checker(schema);
  CHECK(checker.check(rep));
}

TEST_CASE("identical runs produce byte-identical JSON") {
  const std::string prog = write_temp("cli_repro.s", R"(
    addi x10, x0, 512
    addi x7, x0, 9
    loop: p.sw x7, 4(x10!)
    addi x7, x7, -1
    bne x7, x0, loop
  )");
  const std::string j1 = "/tmp/cli_repro1.json", j2 = "/tmp/cli_repro2.json";
  REQUIRE(run_cmd("run " + prog + " --cores 2 --json " + j1).exit_code == 0);
  REQUIRE(run_cmd("run " + prog + " --cores 2 --json " + j2).exit_code == 0);
  std::ostringstream s1, s2;
  s1 << std::ifstream(j1).rdbuf();
  s2 << std::ifstream(j2).rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(!s1.str().empty());
}

TEST_CASE("print emits the canonical form") {
  const std::string prog = write_temp("cli_print.s", "endL: sw x4, 0(x12)\n");
  const CmdResult r = run_cmd("print " + prog);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "endL:\n    sw x4, 0(x12)\n");
}

TEST_CASE("data preload from hex and binary files") {
  const std::string hex =
      write_temp("cli_data.hex", "# comment\nde ad be ef\n@10\n12 34\n");
  const std::string prog = write_temp("cli_data.s", R"(
    addi x10, x0, 512
    lw x5, 0(x10)
    lh x6, 16(x10)
    lui x11, 1
    sw x5, 0(x11)
    sh x6, 4(x11)
  )");
  const std::string jpath = "/tmp/cli_data.json";
  const CmdResult r = run_cmd("run " + prog + " --data " + hex + "@0x200" +
                              " --json " + jpath);
  CHECK(r.exit_code == 0);
  json rep = json::parse(std::ifstream(jpath));
  CHECK(rep["loads"] == 2);
  CHECK(rep["stores"] == 2);
}

TEST_CASE("run emits a one-line CSV report") {
  const std::string prog = write_temp("cli_csv.s", "nop\nnop\n");
  const CmdResult r = run_cmd("run " + prog + " --csv -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cycles,retired,ipc") != std::string::npos);
  CHECK(r.out.find("\n2,2,1,") != std::string::npos);
}

TEST_CASE("bench subcommand writes table files and a summary") {
  const std::string dir = "/tmp/rvdsp_cli_bench";
  std::filesystem::remove_all(dir);
  const CmdResult r = run_cmd("bench fixpoint --out " + dir);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("golden pass") != std::string::npos);
  std::ifstream rows(dir + "/rows.csv");
  REQUIRE(rows.good());
  std::string header;
  std::getline(rows, header);
  CHECK(header.find("kernel,elem,variant,cores,cycles") == 0);
  int lines = 0;
  for (std::string line; std::getline(rows, line);) ++lines;
  CHECK(lines == 8);  // 2 kernels x 2 variants x {1,4} cores
  CHECK(std::filesystem::exists(dir + "/compare.csv"));
  CHECK(std::filesystem::exists(dir + "/summary.txt"));
  CHECK(std::filesystem::exists(dir + "/vecadd_clip_i16.hex"));
  CHECK(std::filesystem::exists(dir + "/mulq_norm_i16.hex"));
}

TEST_CASE("unknown bench suite is a usage error") {
  CHECK(run_cmd("bench nosuchsuite").exit_code == 1);
}
