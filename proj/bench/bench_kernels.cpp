// bench_kernels.cpp — timing of parallel vs serial operator assembly.
// SPDX-License-Identifier: MIT
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsph/spectral.hpp"

namespace {

using namespace qsph;
using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int rep = 0; rep < reps; ++rep) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const long two_lambda = argc > 1 ? std::stol(argv[1]) : 35;
  const int reps = argc > 2 ? std::stoi(argv[2]) : 5;
  const double q = 0.5;

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: unavailable (serial build)\n");
#endif

  const TruncatedHilbert h(HalfInt::from_twice(two_lambda), q);
  std::printf("lambda = %ld/2, dim = %ld, q = %.2f, best of %d reps\n\n", two_lambda, h.dim(), q,
              reps);
  std::printf("%-28s %12s %12s %9s %10s\n", "element", "parallel ms", "serial ms", "speedup",
              "max |diff|");

  const std::vector<std::string> exprs = {
      "bc", "q^-1 ab", "(q^-1 ab + bc + cd)^2", "bc bc bc",
  };
  for (const std::string& txt : exprs) {
    const NumericElem x = to_numeric(parse_element(txt), h.ring());
    Eigen::MatrixXd mp, ms;
    const double tp = time_ms([&] { mp = left_mult(h, x); }, reps);
    const double ts = time_ms([&] { ms = left_mult_serial(h, x); }, reps);
    const double diff = (mp - ms).cwiseAbs().maxCoeff();
    std::printf("%-28s %12.3f %12.3f %8.2fx %10.2e\n", txt.c_str(), tp, ts, ts / tp, diff);
    if (diff != 0.0) {
      std::printf("parallel and serial assemblies disagree!\n");
      return 1;
    }
  }
  return 0;
}
