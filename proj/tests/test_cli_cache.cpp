#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("KIRILLOV_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  fs::path tmp = fs::temp_directory_path() / "cli_out.txt";
  std::string cmd = cli_path() + " " + args + " > " + tmp.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

}  // namespace

TEST_CASE("kn emits the canonical envelope", "[cli]") {
  auto r = run("kn --n 3 --w \"(2,3)\" --lambda 1,1,0");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["command"] == "kn");
  CHECK(j["inputs"]["n"] == 3);
  CHECK(j["version"] == "1.0.0");
  CHECK(j.contains("elapsed_ms"));
  // the worked example groups into four x-monomials
  std::set<std::vector<int>> xexps;
  for (const auto& t : j["result"]["terms"]) {
    auto e = t["exps"].get<std::vector<int>>();
    xexps.insert(std::vector<int>(e.begin() + 3, e.end()));
    CHECK(t["coeff"].get<std::string>().find('-') == std::string::npos);
  }
  CHECK(xexps.size() == 4);
}

TEST_CASE("lattice count matches the published state count", "[cli]") {
  auto r = run("lattice --n 3 --w1 \"s1 s2\" --w2 s2 --mu 3,1,1 --N 6 --count-only");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["result"]["count"] == 3);
}

TEST_CASE("operator and lattice agree through the CLI", "[cli]") {
  auto a = run("kn --n 3 --w 231 --lambda 1,0,0");
  auto b = run("lattice --n 3 --w1 231 --w2 321 --mu 3,1,0 --N 3");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(json::parse(a.stdout_text)["result"] ==
        json::parse(b.stdout_text)["result"]["partition_function"]);
}

TEST_CASE("verification suites pass and report case counts", "[cli]") {
  for (std::string which : {"rrr", "degenerate", "braid", "hecke"}) {
    auto r = run("verify " + which);
    INFO("suite " << which);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["pass"] == true);
    CHECK(j["report"]["cases_checked"].get<long>() > 0);
    CHECK(j["report"]["failures"].empty());
  }
}

TEST_CASE("positivity scan finds the two negative permutations", "[cli]") {
  auto r = run("scan positivity --n 4 --mode symbolic");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["report"]["negatives"] == 2);
  std::vector<std::vector<int>> neg;
  for (const auto& row : j["report"]["rows"])
    if (!row["nonneg"]) neg.push_back(row["w"].get<std::vector<int>>());
  CHECK(neg == std::vector<std::vector<int>>{{3, 4, 2, 1}, {4, 3, 1, 2}});
}

TEST_CASE("cache serves repeated calls byte-identically", "[cli]") {
  fs::path dir = fs::temp_directory_path() / "kirillov_cache_test";
  fs::remove_all(dir);
  std::string common = "dz --n 3 --w 321 --cache-dir " + dir.string();
  auto first = run(common);
  REQUIRE(first.exit_code == 0);
  REQUIRE(fs::exists(dir));
  size_t entries = std::distance(fs::directory_iterator(dir), {});
  CHECK(entries == 1);
  auto second = run(common);
  CHECK(second.stdout_text == first.stdout_text);

  SECTION("different inputs get different entries") {
    auto other = run("dz --n 3 --w 312 --cache-dir " + dir.string());
    REQUIRE(other.exit_code == 0);
    CHECK(std::distance(fs::directory_iterator(dir), {}) == 2);
    CHECK(other.stdout_text != first.stdout_text);
  }

  SECTION("corrupt entries are recomputed and overwritten") {
    for (const auto& e : fs::directory_iterator(dir))
      std::ofstream(e.path()) << "not json";
    auto healed = run(common);
    REQUIRE(healed.exit_code == 0);
    CHECK(healed.stdout_text == first.stdout_text);
  }

  SECTION("--no-cache bypasses the store") {
    fs::remove_all(dir);
    auto r = run(common + " --no-cache");
    REQUIRE(r.exit_code == 0);
    CHECK_FALSE(fs::exists(dir));
  }
  fs::remove_all(dir);
}

TEST_CASE("cache directory can come from the environment", "[cli]") {
  fs::path dir = fs::temp_directory_path() / "kirillov_cache_env";
  fs::remove_all(dir);
  std::string cmd = "KIRILLOV_CACHE_DIR=" + dir.string() + " " + cli_path() +
                    " dz --n 2 --w 21 > /dev/null 2>&1";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(std::distance(fs::directory_iterator(dir), {}) == 1);
  fs::remove_all(dir);
}

TEST_CASE("invalid input exits with status two", "[cli]") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("kn --n 3").exit_code == 2);                       // missing --w
  CHECK(run("kn --n 3 --w 44").exit_code == 2);                // not a permutation
  CHECK(run("kn --n 3 --w \"s1 s2\" --format cycles").exit_code == 2);
  CHECK(run("scan positivity --n 3 --mode bogus").exit_code == 2);
  CHECK(run("lattice --n 3 --w1 321 --w2 321 --mu 3,1,1 --N 1").exit_code == 2);
}

TEST_CASE("--out writes the response to a file", "[cli]") {
  fs::path file = fs::temp_directory_path() / "cli_out_file.json";
  fs::remove(file);
  auto r = run("key --zeta 1,2,2,1 --out " + file.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_text.empty());
  std::ifstream in(file);
  json j;
  in >> j;
  CHECK(j["command"] == "key");
  bool has_negative = false;
  for (const auto& t : j["result"]["terms"])
    has_negative = has_negative ||
                   t["coeff"].get<std::string>().find('-') != std::string::npos;
  CHECK(has_negative);
  fs::remove(file);
}
