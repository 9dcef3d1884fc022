// Timing comparison of the serial reference kernels against their OpenMP
// counterparts. Each row re-checks that both produce identical results.

#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "ge/enumerate.hpp"
#include "ge/walk.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

struct Row {
  std::string name;
  double serial_s = 0;
  double parallel_s = 0;
  bool equal = false;
};

template <typename F>
double timed(F &&fn) {
  const double start = now_seconds();
  fn();
  return now_seconds() - start;
}

} // namespace

int main() {
  std::vector<Row> rows;

  {
    Row row{"monte carlo hits (n=3, len=20, 1e6 samples)", 0, 0, false};
    std::uint64_t serial = 0, parallel = 0;
    row.serial_s = timed([&] { serial = ge::count_kernel_hits_serial(3, 20, 1'000'000, 42); });
    row.parallel_s =
        timed([&] { parallel = ge::count_kernel_hits_parallel(3, 20, 1'000'000, 42); });
    row.equal = serial == parallel;
    rows.push_back(row);
  }

  {
    Row row{"Fbar range sweep over S_8", 0, 0, false};
    std::uint64_t serial = 0, parallel = 0;
    row.serial_s = timed([&] { serial = ge::fbar_range_violations(8, false); });
    row.parallel_s = timed([&] { parallel = ge::fbar_range_violations(8, true); });
    row.equal = serial == parallel;
    rows.push_back(row);
  }

  {
    Row row{"ge image ball (n=3, radius 10)", 0, 0, false};
    std::vector<ge::GeElement> serial, parallel;
    row.serial_s = timed([&] { serial = ge::ge_image_ball(3, 10, false); });
    row.parallel_s = timed([&] { parallel = ge::ge_image_ball(3, 10, true); });
    row.equal = serial == parallel;
    rows.push_back(row);
  }

  {
    Row row{"sge image ball (n=3, radius 8)", 0, 0, false};
    std::vector<ge::SgeElement> serial, parallel;
    row.serial_s = timed([&] { serial = ge::sge_image_ball(3, 8, false); });
    row.parallel_s = timed([&] { parallel = ge::sge_image_ball(3, 8, true); });
    row.equal = serial == parallel;
    rows.push_back(row);
  }

  {
    Row row{"walk convolution (n=3, N=16)", 0, 0, false};
    std::vector<std::uint64_t> serial, parallel;
    row.serial_s = timed([&] { serial = ge::exact_kernel_counts(3, 16, 4'000'000, false); });
    row.parallel_s = timed([&] { parallel = ge::exact_kernel_counts(3, 16, 4'000'000, true); });
    row.equal = serial == parallel;
    rows.push_back(row);
  }

  std::printf("%-46s %10s %10s %8s %6s\n", "kernel", "serial[s]", "openmp[s]", "speedup",
              "equal");
  bool all_equal = true;
  for (const Row &row : rows) {
    std::printf("%-46s %10.3f %10.3f %8.2f %6s\n", row.name.c_str(), row.serial_s,
                row.parallel_s, row.serial_s / (row.parallel_s > 0 ? row.parallel_s : 1e-9),
                row.equal ? "yes" : "NO");
    all_equal = all_equal && row.equal;
  }
  return all_equal ? 0 : 1;
}
