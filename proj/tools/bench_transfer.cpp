// Compares the serial reference transfer against the optimized engine,
// single-threaded and with all cores. Counts must agree; timings differ.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hsq/reference.hpp"
#include "hsq/transfer.hpp"

using namespace hsq;

namespace {

double run(const std::function<ExactCount()>& f, ExactCount* out) {
  auto t0 = std::chrono::steady_clock::now();
  *out = f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 14;
  std::vector<GridInstance> cases = {
      GridInstance(Topology::PlaneGrid, scale, 120),
      GridInstance(Topology::TriParallelogram, scale, 120),
      GridInstance::triangle(scale + 6),
      GridInstance(Topology::Cylinder, scale, 80),
      GridInstance(Topology::TwistedCylinder, scale, 80),
  };
  const int cores = omp_get_max_threads();
  printf("%-22s %14s %12s %12s %12s\n", "instance", "digits", "ref(s)", "engine1(s)",
         ("engine" + std::to_string(cores) + "(s)").c_str());
  for (const auto& inst : cases) {
    ExactCount a, b, c;
    double t_ref = run([&] { return reference_count(inst); }, &a);
    omp_set_num_threads(1);
    double t_one = run([&] { Engine e; return e.count(inst); }, &b);
    omp_set_num_threads(cores);
    double t_all = run([&] { Engine e; return e.count(inst); }, &c);
    bool ok = a == b && b == c;
    printf("%-22s %14zu %12.3f %12.3f %12.3f %s\n", inst.str().c_str(),
           mpz_sizeinbase(a.get_mpz_t(), 10), t_ref, t_one, t_all, ok ? "" : "MISMATCH");
    if (!ok) return 1;
  }
  return 0;
}
