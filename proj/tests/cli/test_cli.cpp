// End-to-end tests of the radialps binary: exit codes, file output,
// determinism, and format parity.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out =
      fs::temp_directory_path() / ("radialps_stdout_" +
                                   std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(RADIALPS_BIN) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  fs::remove(out);
  return {WEXITSTATUS(status), buffer.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      row.push_back(std::strtod(line.substr(pos, comma - pos).c_str(), nullptr));
      pos = comma + 1;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("solve: log potential to stdout") {
  const RunResult r = run_cli("solve --potential log --ell 0 --states 1");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][0] == 0);                              // ell
  CHECK(rows[0][1] == 0);                              // n
  CHECK(std::fabs(rows[0][2] - 1.04433226) < 1e-7);    // energy
  CHECK(rows[0][4] == 0);                              // node_count
}

TEST_CASE("solve: sqrt-potential ladder layout matches the golden table") {
  const RunResult r = run_cli(
      "solve --potential powerlaw:A=1,nu=0.5 --convention hbar2m1 "
      "--ell 0 --ell 1 --ell 2 --ell 3 --ell 4 --ell 5 --states 6");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 36);
  for (int i = 0; i < 36; ++i) {
    CHECK(rows[i][0] == i / 6);  // ell ascending, six records each
    CHECK(rows[i][1] == i % 6);
  }
  CHECK(std::fabs(rows[0][2] - 1.83339360) < 1e-7);   // (l=0, n=0)
  CHECK(std::fabs(rows[30][2] - 3.44244561) < 1e-7);  // (l=5, n=0)
}

TEST_CASE("invalid potential: exit 2 and no output file") {
  const fs::path out = fs::temp_directory_path() / "radialps_invalid.csv";
  fs::remove(out);
  const RunResult r =
      run_cli("solve --potential nosuch:x=1 --out " + out.string());
  CHECK(r.exit_code == 2);
  CHECK(!fs::exists(out));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("solve").exit_code == 2);  // missing --potential
  CHECK(run_cli("solve --potential log --no-such-flag 1").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("expect --potential log --k -2 --grid-n 60").exit_code == 2);
  CHECK(run_cli("density --potential log --sel-ell 1 --sel-n 0 --grid-n 60")
            .exit_code == 2);
}

TEST_CASE("numerical failure exits 3") {
  // ln(r-1) is NaN over most of the grid
  const RunResult r = run_cli("solve --potential expr:ln(r-1) --grid-n 60");
  CHECK(r.exit_code == 3);
}

TEST_CASE("unwritable output path exits 4") {
  const RunResult r = run_cli(
      "solve --potential log --grid-n 60 --rmax 40 --alpha 2 "
      "--out /nonexistent-dir/out.csv");
  CHECK(r.exit_code == 4);
}

TEST_CASE("byte-identical reruns and csv/json parity") {
  const fs::path base = fs::temp_directory_path();
  const fs::path csv1 = base / "radialps_p1.csv";
  const fs::path csv2 = base / "radialps_p2.csv";
  const fs::path json1 = base / "radialps_p1.json";
  const std::string common =
      "solve --potential morse --convention au --grid-n 120 --rmax 50 "
      "--alpha 0.5 --states 4 ";
  CHECK(run_cli(common + "--out " + csv1.string()).exit_code == 0);
  CHECK(run_cli(common + "--out " + csv2.string()).exit_code == 0);
  CHECK(run_cli(common + "--format json --out " + json1.string()).exit_code ==
        0);

  const std::string text1 = slurp(csv1);
  CHECK(text1 == slurp(csv2));
  CHECK(!text1.empty());

  const auto rows = parse_csv(text1);
  const auto j = nlohmann::json::parse(slurp(json1));
  CHECK(j["config"]["convention"] == "au");
  REQUIRE(j["records"].size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i][2] == j["records"][i]["energy"].get<double>());
  }
  fs::remove(csv1);
  fs::remove(csv2);
  fs::remove(json1);
}

TEST_CASE("scan emits stability digits") {
  const RunResult r = run_cli(
      "scan --potential morse --states 4 --alpha 0.5 "
      "--scan-rmax 50 --scan-rmax 200 --grid-n 300");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 8);
  // n = 3 rows disagree between the boxes; the digit count reflects it
  double stable_n3 = 99, stable_n0 = -1;
  for (const auto& row : rows) {
    if (row[4] == 3) stable_n3 = row[6];
    if (row[4] == 0) stable_n0 = row[6];
  }
  CHECK(stable_n3 <= 3);
  CHECK(stable_n0 >= 10);
}

TEST_CASE("density with resampling and json structure") {
  const RunResult r = run_cli(
      "density --potential log --sel-ell 0 --sel-n 1 --states 2 "
      "--resample 40 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["records"].size() == 301);
  CHECK(j["resampled"].size() == 40);
  CHECK(j["n"] == 1);

  double integral_check = 0.0;
  for (const auto& rec : j["records"]) {
    CHECK(rec["density"].get<double>() >= 0.0);
    integral_check += rec["density"].get<double>();
  }
  CHECK(integral_check > 0.0);
}

TEST_CASE("expect reproduces the hydrogen-like textbook values") {
  const RunResult r = run_cli(
      "expect --potential powerlaw:A=1,nu=-1 --convention au --k -1 --k 1");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 2);
  CHECK(std::fabs(rows[0][3] - 1.0) < 1e-8);  // <r^-1>
  CHECK(std::fabs(rows[1][3] - 1.5) < 1e-8);  // <r>
}
