#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hsq/transfer.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("hsq-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run census(const std::string& args) {
  static int seq = 0;
  fs::path out = work_dir() / ("out" + std::to_string(seq++) + ".txt");
  std::string cmd = std::string(CENSUS_BIN) + " " + args + " > " + out.string() + " 2>/dev/null";
  Run r;
  int rc = std::system(cmd.c_str());
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("count prints the decimal count") {
  CHECK(census("count --topology tri-triangle --n 10").out == "542420394\n");
  CHECK(census("count --topology grid --m 1 --n 1").out == "2\n");
  CHECK(census("count --topology grid --m 3 --n 3 --backend crt").out == "63\n");
  CHECK(census("count --topology cylinder --m 1 --n 9").out == "1\n");
}

TEST_CASE("bad flags are rejected") {
  CHECK(census("count --topology grid --m 2 --n 2 --frobnicate").status != 0);
  CHECK(census("count --topology moebius --m 2 --n 2").status != 0);
  CHECK(census("count --topology tri-triangle --m 3 --n 3").status != 0);
  CHECK(census("frobnicate").status != 0);
  CHECK(census("chart no-such-chart --max-m 3").status != 0);
}

TEST_CASE("capacity failures exit nonzero and name the resource") {
  Run r = census("count --topology grid --m 60 --n 60");
  CHECK(r.status == 1);
}

TEST_CASE("table csv has a header and the spot values") {
  Run r = census("table --topology grid --max-m 2 --max-n 2");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("m,n,count\n", 0) == 0);
  CHECK(r.out.find("2,2,7\n") != std::string::npos);
}

TEST_CASE("cylinder m=1 table rows are all 1") {
  Run r = census("table --topology cylinder --max-m 1 --max-n 6");
  for (int n = 1; n <= 6; ++n)
    CHECK(r.out.find("1," + std::to_string(n) + ",1\n") != std::string::npos);
}

TEST_CASE("tri-triangle b-file is indexed by n") {
  Run r = census("table --topology tri-triangle --max-n 6 --format bfile --offset 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("6 3318\n") != std::string::npos);
  CHECK(r.out.rfind("1 2\n", 0) == 0);
  Run shifted = census("table --topology tri-triangle --max-n 6 --format bfile --offset 0");
  CHECK(shifted.out.rfind("0 2\n", 0) == 0);
}

TEST_CASE("b-file round-trips through antidiagonal order") {
  const int max_m = 4, max_n = 5;
  Run r = census("table --topology grid --max-m 4 --max-n 5 --format bfile --offset 1");
  REQUIRE(r.status == 0);
  // re-derive (m,n) from the index order and compare against the engine
  hsq::Engine engine;
  std::istringstream in(r.out);
  std::string line;
  long expect_index = 1;
  int seen = 0;
  std::vector<std::pair<int, int>> order;
  for (int d = 2; d <= max_m + max_n; ++d)
    for (int m = 1; m <= max_m && m < d; ++m)
      if (d - m >= 1 && d - m <= max_n) order.push_back({m, d - m});
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long index;
    std::string value;
    ls >> index >> value;
    REQUIRE(index == expect_index);
    auto [m, n] = order[size_t(index - 1)];
    CHECK(engine.count(hsq::GridInstance(hsq::Topology::PlaneGrid, m, n)).get_str() == value);
    ++expect_index;
    ++seen;
  }
  CHECK(seen == int(order.size()));
}

TEST_CASE("sequence label lands in a b-file comment") {
  Run r = census("table --topology tri-triangle --max-n 4 --format bfile --sequence-label A027740");
  CHECK(r.out.rfind("# A027740\n", 0) == 0);
}

TEST_CASE("runs are deterministic and thread-count independent") {
  std::string args = "table --topology twisted --max-m 6 --max-n 12";
  Run a = census(args + " --threads 1");
  Run b = census(args + " --threads 2");
  Run c = census(args + " --threads 1");
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  std::string cargs = "constants --family plane --max-m 8 --max-n 32 --digits 25";
  Run ca = census(cargs + " --threads 1");
  Run cb = census(cargs + " --threads 2");
  CHECK(ca.out == cb.out);
  CHECK(!ca.out.empty());
}

TEST_CASE("cache file is written, reused, and rejected when corrupt") {
  fs::path cache = work_dir() / "cache.tsv";
  fs::remove(cache);
  Run first = census("count --topology grid --m 4 --n 6 --cache " + cache.string());
  REQUIRE(first.status == 0);
  std::string stored = slurp(cache);
  CHECK(stored.find("grid\t4\t6\t") != std::string::npos);

  Run reused = census("count --topology grid --m 4 --n 6 --cache " + cache.string());
  CHECK(reused.out == first.out);
  CHECK(slurp(cache) == stored);  // no duplicate append on a pure hit

  std::ofstream(cache, std::ios::app) << "grid\t4\t6\t999\n";
  Run corrupt = census("count --topology grid --m 4 --n 6 --cache " + cache.string());
  CHECK(corrupt.status == 2);
}

TEST_CASE("strip subcommand reports brackets") {
  Run r = census("strip --topology cylinder --m 2 --max-n 48 --digits 25");
  CHECK(r.status == 0);
  CHECK(r.out.find("strip.f.lower = 0.440686793509771512616") != std::string::npos);
  CHECK(r.out.find("strip.f.digits_agreed = 25") != std::string::npos);
}

TEST_CASE("chart output carries a header row") {
  Run r = census("chart strip-f --topology grid --max-m 3 --max-n 32 --digits 20");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("m,lower,upper\n", 0) == 0);
  Run r2 = census("chart f-vs-n-ratio --topology grid --ratio 1 --max-n 4 --digits 20");
  CHECK(r2.out.rfind("n,f,f_minus\n", 0) == 0);
  // f(4,4) = ln(1234)/16
  CHECK(r2.out.find("4,0.4448760127790833") != std::string::npos);
  Run r3 = census("chart f-vs-n-ratio --topology grid --ratio 1 --max-n 1 --digits 20");
  CHECK(r3.status == 0);  // single data row
  int rows = 0;
  for (char ch : r3.out)
    if (ch == '\n') ++rows;
  CHECK(rows == 2);  // header + one row
}

TEST_CASE("verify exits zero on a small cap") {
  Run r = census("verify --cap 10");
  CHECK(r.status == 0);
  CHECK(r.out.find("verify grid:") != std::string::npos);
}
