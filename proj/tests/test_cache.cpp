#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hsq/cache.hpp"
#include "hsq/errors.hpp"
#include "hsq/transfer.hpp"

using namespace hsq;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("hsq-cache-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const char* name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("cache round-trips through its file") {
  TempDir tmp;
  std::string path = tmp.file("counts.tsv");
  {
    CountCache cache(path);
    cache.store({Topology::PlaneGrid, 2, 3}, 17);
    cache.store(GridInstance::triangle(6), 3318);
  }
  CountCache reloaded(path);
  CHECK(reloaded.size() == 2);
  CHECK(*reloaded.lookup({Topology::PlaneGrid, 2, 3}) == 17);
  CHECK(*reloaded.lookup(GridInstance::triangle(6)) == 3318);
  CHECK(!reloaded.lookup({Topology::PlaneGrid, 9, 9}));
}

TEST_CASE("tri-triangle records store n in both dimension columns") {
  TempDir tmp;
  std::string path = tmp.file("tri.tsv");
  {
    CountCache cache(path);
    cache.store(GridInstance::triangle(5), 384);
  }
  std::ifstream in(path);
  std::string line, found;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') found = line;
  CHECK(found == "tri-triangle\t5\t5\t384");
}

TEST_CASE("lines are order-independent and agreeing duplicates are fine") {
  TempDir tmp;
  std::string path = tmp.file("dup.tsv");
  std::ofstream(path) << "grid\t2\t2\t7\ngrid\t1\t1\t2\ngrid\t2\t2\t7\n";
  CountCache cache(path);
  CHECK(cache.size() == 2);
}

TEST_CASE("disagreeing duplicate is an integrity error") {
  TempDir tmp;
  std::string path = tmp.file("bad.tsv");
  std::ofstream(path) << "grid\t2\t2\t7\ngrid\t2\t2\t8\n";
  CHECK_THROWS_AS(CountCache{path}, IntegrityError);
}

TEST_CASE("malformed lines are rejected") {
  TempDir tmp;
  for (const char* bad : {"grid\t2\t2", "grid\t2\t2\tseven", "blob\t2\t2\t7", "grid\t0\t2\t7",
                          "grid\t2\t2\t7\textra", "tri-triangle\t2\t3\t4"}) {
    std::string path = tmp.file("line.tsv");
    std::ofstream(path) << bad << "\n";
    CHECK_THROWS_AS(CountCache{path}, IntegrityError);
  }
}

TEST_CASE("a pure cache hit is returned without recomputation") {
  TempDir tmp;
  std::string path = tmp.file("hit.tsv");
  std::ofstream(path) << "grid\t2\t2\t9\n";  // wrong on purpose; never recomputed
  CountCache cache(path);
  Engine engine({}, &cache);
  CHECK(engine.count({Topology::PlaneGrid, 2, 2}) == 9);
}

TEST_CASE("a computed count contradicting the cache is fatal") {
  TempDir tmp;
  std::string path = tmp.file("conflict.tsv");
  // (2,2) stored wrong, (2,1) missing: the column sweep recomputes both
  // and the store of the fresh value must trip the integrity check.
  std::ofstream(path) << "grid\t2\t2\t9\n";
  CountCache cache(path);
  Engine engine({}, &cache);
  CHECK_THROWS_AS(engine.column_counts(Topology::PlaneGrid, 2, 2), IntegrityError);
}

TEST_CASE("engine fills and reuses the cache") {
  TempDir tmp;
  std::string path = tmp.file("fill.tsv");
  {
    CountCache cache(path);
    Engine engine({}, &cache);
    engine.column_counts(Topology::PlaneGrid, 3, 10);
    CHECK(cache.size() == 10);
  }
  CountCache cache(path);
  CHECK(*cache.lookup({Topology::PlaneGrid, 3, 10}) ==
        Engine().count({Topology::PlaneGrid, 3, 10}));
}
