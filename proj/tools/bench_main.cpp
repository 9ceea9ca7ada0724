// Compares the serial reference driver against the OpenMP driver on the
// hot kernels: convex-roof restart batches, assistance maximization, and the
// family scan. Both drivers share the restart body and merge results with a
// deterministic comparator, so values must agree bitwise; this tool verifies
// that while timing the two paths.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "entkit/catalog.hpp"
#include "entkit/measures.hpp"
#include "entkit/monogamy.hpp"
#include "entkit/tensor.hpp"

using namespace entkit;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

struct BenchResult {
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  bool identical = true;
};

template <typename F>
BenchResult bench(F&& run) {  // run(exec) -> double value
  BenchResult r;
  auto t0 = clock_type::now();
  const double v_serial = run(Exec::serial);
  r.serial_ms = ms_since(t0);
  t0 = clock_type::now();
  const double v_parallel = run(Exec::parallel);
  r.parallel_ms = ms_since(t0);
  r.identical = v_serial == v_parallel;
  return r;
}

void report(const char* name, const BenchResult& r) {
  std::printf("%-34s serial %8.1f ms   openmp %8.1f ms   speedup %.2fx   %s\n", name,
              r.serial_ms, r.parallel_ms, r.serial_ms / std::max(r.parallel_ms, 1e-9),
              r.identical ? "values identical" : "VALUES DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both paths run serially\n");
#endif

  // Two-qutrit convex roof (rank-3 support, the theorem2 workload).
  const PureState anti = states::antisymmetric_qutrit();
  const DensityMatrix r01 = partial_trace(anti, {0, 1});
  report("roof 3x3 (antisymmetric pair)", bench([&](Exec e) {
           RoofOptions o(99);
           o.restarts = 128;
           o.exec = e;
           return convex_roof_concurrence(r01, Partition({0}, {1}), o).value;
         }));

  // Random two-qubit roof batch (the oracle-equivalence workload).
  report("roof 2x2 batch (32 states)", bench([&](Exec e) {
           double acc = 0.0;
           for (int i = 0; i < 32; ++i) {
             const DensityMatrix rho =
                 states::random_density(DimProfile({2, 2}), 1 + i % 4, 50 + i);
             RoofOptions o(1234 + i);
             o.exec = e;
             acc += convex_roof_concurrence(rho, Partition({0}, {1}), o).value;
           }
           return acc;
         }));

  // Assistance maximization on a 2x3 reduction.
  const PureState ex = states::state_223();
  const DensityMatrix rho_ac = partial_trace(ex, {0, 2});
  report("assistance 2x3 (223 reduction)", bench([&](Exec e) {
           RoofOptions o(7);
           o.restarts = 256;
           o.exec = e;
           return concurrence_assistance(rho_ac, Partition({0}, {1}), o).value;
         }));

  // Mixed four-party roof, small budget (the theorem4 lhs workload).
  const DensityMatrix fam = states::family_2223(0.8);
  report("roof 4-party 24-dim (8 restarts)", bench([&](Exec e) {
           RoofOptions o(3);
           o.restarts = 8;
           o.max_sweeps = 40;
           o.exec = e;
           return convex_roof_four_party(fam, o).value;
         }));

  return 0;
}
