// Compares the convolution kernels on series-multiplication workloads of the
// size this library actually runs (dense rational coefficients).
#include <chrono>
#include <cstdio>
#include <vector>

#include "qmod/kernel.hpp"
#include "qmod/qforms.hpp"

using namespace qmod;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const kernel::Coeffs& a, const kernel::Coeffs& b, std::size_t out,
               kernel::Coeffs (*fn)(const kernel::Coeffs&, const kernel::Coeffs&,
                                    std::size_t),
               int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    auto c = fn(a, b, out);
    auto t1 = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
    if (c.size() != out) std::abort();
  }
  return best;
}

kernel::Coeffs eta_power_coeffs(long n, long e) {
  // realistic integer-heavy workload
  LaurentSeries u = series_pow_rational(qforms::eta_unit(1, n), Rational(e));
  kernel::Coeffs c;
  for (long i = 0; i < n; ++i) c.push_back(u.coeff(i));
  return c;
}

kernel::Coeffs harmonic_coeffs(long n) {
  // denominator-heavy workload
  kernel::Coeffs c;
  for (long i = 0; i < n; ++i) c.push_back(Rational(1, i + 1));
  return c;
}

void run(const char* label, const kernel::Coeffs& a, const kernel::Coeffs& b) {
  const std::size_t full = a.size() + b.size() - 1;
  const int reps = a.size() <= 256 ? 5 : 3;
  double serial = time_ms(a, b, full, kernel::convolve_serial, reps);
  double kara = time_ms(a, b, full, kernel::convolve_karatsuba, reps);
  double par = time_ms(a, b, full, kernel::convolve_parallel, reps);
  std::printf("%-28s n=%-5zu serial %9.3f ms   karatsuba %9.3f ms   omp %9.3f ms\n",
              label, a.size(), serial, kara, par);
}

}  // namespace

int main() {
  std::printf("convolution kernels, best-of-n wall times\n");
  for (long n : {64L, 128L, 256L, 512L}) {
    run("eta^24 coefficients", eta_power_coeffs(n, 24), eta_power_coeffs(n, -24));
    run("harmonic denominators", harmonic_coeffs(n), harmonic_coeffs(n));
  }
  return 0;
}
