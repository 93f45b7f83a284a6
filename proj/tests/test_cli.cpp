#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <eulerstab/cli.hpp>
#include <eulerstab/families.hpp>

using namespace eulerstab;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "eulerstab_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen writes the recurrence polynomial as text") {
  fs::path out = test_dir() / "a3.txt";
  int code = run_cli({"gen", "--family", "A", "--n", "3", "--method", "rec",
                      "--out", out.string(), "--cache-dir",
                      (test_dir() / "cache").string()});
  CHECK(code == 0);
  std::string text = slurp(out);
  REQUIRE(!text.empty());
  CHECK(text.back() == '\n');
  CHECK(MPoly::from_text(text.substr(0, text.size() - 1)) == rec_a(3));
}

TEST_CASE("gen json output parses back to the same polynomial") {
  fs::path out = test_dir() / "b2.json";
  int code = run_cli({"gen", "--family", "B", "--n", "2", "--q", "sym",
                      "--method", "rec", "--format", "json", "--out",
                      out.string(), "--cache-dir",
                      (test_dir() / "cache").string()});
  CHECK(code == 0);
  CHECK(MPoly::from_json_string(slurp(out)) ==
        rec_g(2, 2, QMode::SingleSymbolic));
}

TEST_CASE("gen with both methods cross-checks and caches byte-identically") {
  fs::path cache = test_dir() / "cache_both";
  fs::path out1 = test_dir() / "c2_first.txt";
  fs::path out2 = test_dir() / "c2_second.txt";
  auto args = [&](const fs::path& out) {
    return std::vector<std::string>{
        "gen",  "--family", "affC",       "--n",        "2",
        "--method", "both", "--out",      out.string(), "--cache-dir",
        cache.string()};
  };
  CHECK(run_cli(args(out1)) == 0);
  CHECK(run_cli(args(out2)) == 0);
  CHECK(slurp(out1) == slurp(out2));
  // The cache directory holds exactly one artifact for this request.
  int files = 0;
  for (const auto& e : fs::directory_iterator(cache)) {
    ++files;
    CHECK(e.path().filename().string().find("affC") != std::string::npos);
  }
  CHECK(files == 1);
}

TEST_CASE("gen refuses a recurrence for enumeration-only families") {
  fs::path out = test_dir() / "d3.txt";
  CHECK(run_cli({"gen", "--family", "D", "--n", "3", "--method", "rec",
                 "--out", out.string(), "--cache-dir",
                 (test_dir() / "cache").string()}) == 2);
  // Brute force works and writes the enumerated polynomial.
  CHECK(run_cli({"gen", "--family", "D", "--n", "3", "--method", "brute",
                 "--out", out.string(), "--cache-dir",
                 (test_dir() / "cache").string()}) == 0);
  std::string text = slurp(out);
  REQUIRE(!text.empty());
  CHECK(MPoly::from_text(text.substr(0, text.size() - 1)) ==
        brute_force({Family::D, 3, 2, QMode::None, 0}));
}

TEST_CASE("verify emits a json report and a success exit code") {
  fs::path out = test_dir() / "motzkin.json";
  int code = run_cli({"verify", "motzkin", "--max-n", "3", "--format", "json",
                      "--out", out.string()});
  CHECK(code == 0);
  auto doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc.is_array());
  CHECK(!doc.empty());
  for (const auto& row : doc) {
    CHECK(row.contains("check"));
    CHECK(row.contains("status"));
    CHECK(row.contains("severity"));
    if (row["severity"] == "asserted") CHECK(row["ok"] == true);
  }
}

TEST_CASE("verify text report ends with a summary line") {
  fs::path out = test_dir() / "identities.txt";
  int code = run_cli({"verify", "identities", "--max-n", "3", "--out",
                      out.string()});
  CHECK(code == 0);
  std::string text = slurp(out);
  CHECK(text.find("PASS identity.b_at_q_minus_one") != std::string::npos);
  CHECK(text.find("OK: ") != std::string::npos);
}

TEST_CASE("export reproduces the reference artifacts") {
  fs::path appendix = test_dir() / "appendix.txt";
  CHECK(run_cli({"export", "--what", "appendix", "--out",
                 appendix.string()}) == 0);
  std::string lines = slurp(appendix);
  int count = 0;
  std::istringstream ss(lines);
  for (std::string line; std::getline(ss, line);)
    if (line.find(" = ") != std::string::npos) ++count;
  CHECK(count == 13);

  fs::path table = test_dir() / "table1.csv";
  CHECK(run_cli({"export", "--what", "table1", "--out", table.string()}) == 0);
  std::istringstream ts(slurp(table));
  int rows = 0;
  for (std::string line; std::getline(ts, line);) ++rows;
  CHECK(rows == 25);  // header plus the 24 rank three elements

  fs::path d3 = test_dir() / "d3star.json";
  CHECK(run_cli({"export", "--what", "d3star", "--out", d3.string()}) == 0);
  auto doc = nlohmann::json::parse(slurp(d3));
  CHECK(doc["exactZero"] == true);
  CHECK(doc.contains("halfPlaneZero"));
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli({"frobnicate"}) == 2);
  CHECK(run_cli({"gen", "--family", "A"}) == 2);            // missing --n
  CHECK(run_cli({"gen", "--family", "Z", "--n", "2"}) == 2);
  CHECK(run_cli({"verify", "nonsense"}) == 2);
  CHECK(run_cli({"export", "--what", "nothing"}) == 2);
  CHECK(run_cli({"--help"}) == 0);
}
