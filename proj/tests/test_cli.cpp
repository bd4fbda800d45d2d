#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "bfa/io.hpp"

#ifndef BFA_CLI_BIN
#error "BFA_CLI_BIN must point at the built CLI binary"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(BFA_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("fuse subcommand", "[cli]") {
  auto r = run_cli("fuse --group su2 --a 1 --b 1 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = bfa::Json::parse(r.out);
  CHECK(j["decomposition"]["pi_0"] == 1);
  CHECK(j["decomposition"]["pi_1"] == 1);
  CHECK(j["decomposition"]["pi_2"] == 1);
  CHECK(j["decomposition"].size() == 3);
}

TEST_CASE("amen-constant subcommand", "[cli]") {
  auto r = run_cli("amen-constant --group s3 --weight omega_a --a 1 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = bfa::Json::parse(r.out);
  CHECK(j["constant"].get<double>() == 3.0);
}

TEST_CASE("check-weight exit codes", "[cli]") {
  CHECK(run_cli("check-weight --group su2 --weight omega_a --a 1 --trunc 8").exit_code == 0);

  // An explicit table that breaks the inequality exits 1 and reports it.
  bfa::Json bad;
  bad["family"] = "table";
  bad["table"] = {{"chi_0", 0.5}};
  bad["default"] = 1.0;
  bad["delta"] = 0.5;
  std::string path = "/tmp/bfa_test_bad_weight.json";
  std::ofstream(path) << bad.dump();
  auto r = run_cli("check-weight --group torus --weight " + path + " --trunc 5 --format json");
  CHECK(r.exit_code == 1);
  auto j = bfa::Json::parse(r.out);
  CHECK(j["report"]["violations"].size() >= 1);

  // Malformed descriptors exit 2.
  std::ofstream(path) << "{\"family\": \"nope\"}";
  CHECK(run_cli("check-weight --group su2 --weight " + path).exit_code == 2);
  CHECK(run_cli("check-weight --group nosuchgroup").exit_code == 2);
  CHECK(run_cli("fuse --group su2 --a x --b 0").exit_code == 2);
}

TEST_CASE("emitted weight descriptors reproduce reports byte-for-byte", "[cli]") {
  auto first = run_cli("check-weight --group su2 --weight omega_a --a 1.5 --trunc 6 --format json");
  REQUIRE(first.exit_code == 0);
  auto j = bfa::Json::parse(first.out);
  std::string path = "/tmp/bfa_test_weight_roundtrip.json";
  std::ofstream(path) << j["weight"].dump();
  auto second = run_cli("check-weight --group su2 --weight " + path + " --trunc 6 --format json");
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);

  // Same for a symmetrized descriptor fed back through symmetrize's output.
  auto sym = run_cli("symmetrize --group su2 --weight sigma_a --a 2 --format json");
  REQUIRE(sym.exit_code == 0);
  auto js = bfa::Json::parse(sym.out);
  std::ofstream(path) << js["weight"].dump();
  auto again = run_cli("check-weight --group su2 --weight " + path + " --trunc 6 --format json");
  CHECK(again.exit_code == 0);
}

TEST_CASE("custom character tables round-trip through reports", "[cli]") {
  // Feed a table, extract the emitted descriptor, re-feed it: identical bytes.
  std::string path = "/tmp/bfa_test_table.json";
  std::ofstream(path) << bfa::table_to_json(bfa::CharacterTable::s3()).dump();
  auto first = run_cli("amen-constant --group " + path + " --weight omega_a --a 1 --format json");
  REQUIRE(first.exit_code == 0);
  auto j = bfa::Json::parse(first.out);
  CHECK(j["group"] == "custom");
  CHECK(j["constant"].get<double>() == 3.0);
  std::string path2 = "/tmp/bfa_test_table_refed.json";
  std::ofstream(path2) << j["group_table"].dump();
  auto second = run_cli("amen-constant --group " + path2 + " --weight omega_a --a 1 --format json");
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);

  auto fuse1 = run_cli("fuse --group " + path + " --a 2 --b 2 --format json");
  REQUIRE(fuse1.exit_code == 0);
  auto jf = bfa::Json::parse(fuse1.out);
  CHECK(jf["decomposition"]["irrep_2"] == 1);
  CHECK(jf["decomposition"].size() == 3);
}

TEST_CASE("scan reports carry the documented JSON fields", "[cli]") {
  auto r = run_cli("arens-scan --group su2 --weight omega_a --a 1 --trunc 25 --tail-start 10 "
                   "--format json");
  REQUIRE(r.exit_code == 0);  // closed-form limit 1/25 is under the threshold
  auto j = bfa::Json::parse(r.out)["report"];
  for (const char* key :
       {"theta", "row_tail_sup", "col_tail_sup", "verdict", "closed_form_limits"})
    CHECK(j.contains(key));
  CHECK(j["theta"].size() == 25);
  CHECK(j["theta"][0].size() == 25);
  CHECK(j["verdict"] == "sufficient-condition-met");
}

TEST_CASE("arens-scan exit reflects the verdict", "[cli]") {
  CHECK(run_cli("arens-scan --group su2 --weight omega_a --a 1 --trunc 50 --tail-start 25 "
                "--threshold 0.05 --format json")
            .exit_code == 0);
  CHECK(run_cli("arens-scan --group su2 --weight trivial --trunc 50 --tail-start 25 "
                "--threshold 0.05")
            .exit_code == 1);
}

TEST_CASE("line-check subcommand", "[cli]") {
  CHECK(run_cli("line-check --weight tau_a --a 1 --grid -10:0.5:10").exit_code == 0);
  bfa::Json sample;
  sample["grid"] = bfa::Json::array({-1.0, 0.0, 1.0});
  sample["values"] = bfa::Json::array({1.0, 0.5, 1.0});
  sample["delta"] = 0.5;
  std::string path = "/tmp/bfa_test_line.json";
  std::ofstream(path) << sample.dump();
  auto r = run_cli("line-check --weight " + path + " --grid -1:0.5:1 --format json");
  CHECK(r.exit_code == 1);
}

TEST_CASE("catalog and other commands emit deterministic reports", "[cli]") {
  auto a = run_cli("catalog --format json");
  auto b = run_cli("catalog --format json");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto scan1 = run_cli("arens-scan --group s3xs3 --weight omega_a --a 1 --trunc 9 "
                       "--tail-start 3 --format json");
  auto scan2 = run_cli("arens-scan --group s3xs3 --weight omega_a --a 1 --trunc 9 "
                       "--tail-start 3 --format json");
  CHECK(scan1.out == scan2.out);

  CHECK(run_cli("restrict --group su2 --weight omega_a --a 1 --format json").exit_code == 0);
  CHECK(run_cli("restrict --group s3 --subgroup z3 --weight omega_a --a 1 --format json")
            .exit_code == 0);
  CHECK(run_cli("point-deriv --group su2 --weight omega_a --a 0.5 --pi pi_1/2 --N 100 "
                "--format json")
            .exit_code == 0);
  CHECK(run_cli("product-amen --group s3 --a-seq 2^-i --max-terms 50 --format json")
            .exit_code == 0);
  CHECK(run_cli("norm --group s3 --weight omega_a --a 1 --delta-e --format json").exit_code ==
        0);
}

TEST_CASE("norm accepts function and coefficient files", "[cli]") {
  auto model = bfa::MatrixModel::s3();
  auto f = model.delta_e();
  std::string fpath = "/tmp/bfa_test_function.json";
  std::ofstream(fpath) << bfa::function_to_json("s3", f).dump();
  auto via_function =
      run_cli("norm --group s3 --weight omega_a --a 1 --function " + fpath + " --format json");
  REQUIRE(via_function.exit_code == 0);
  CHECK(bfa::Json::parse(via_function.out)["value"].get<double>() ==
        bfa::round12(10.0 / 6.0));

  std::string cpath = "/tmp/bfa_test_coeffs.json";
  std::ofstream(cpath) << bfa::coefficients_to_json(bfa::transform(model, f)).dump();
  auto via_coeffs =
      run_cli("norm --group s3 --weight omega_a --a 1 --coeffs " + cpath + " --format json");
  REQUIRE(via_coeffs.exit_code == 0);
  CHECK(std::abs(bfa::Json::parse(via_coeffs.out)["value"].get<double>() - 10.0 / 6.0) < 1e-10);
}
