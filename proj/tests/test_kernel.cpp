#include "doctest.h"
#include "qmod/kernel.hpp"
#include "test_util.hpp"

using namespace qmod;
using testutil::Rng;

namespace {
kernel::Coeffs rand_coeffs(Rng& rng, std::size_t n) {
  kernel::Coeffs c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(testutil::rand_rational(rng));
  return c;
}
}  // namespace

TEST_CASE("all kernels agree with the serial reference") {
  Rng rng(7);
  for (std::size_t n : {1ul, 2ul, 7ul, 33ul, 65ul, 130ul}) {
    kernel::Coeffs a = rand_coeffs(rng, n);
    kernel::Coeffs b = rand_coeffs(rng, n + 3);
    const std::size_t full = a.size() + b.size() - 1;
    for (std::size_t out : {full, full / 2, std::size_t{1}}) {
      auto ref = kernel::convolve_serial(a, b, out);
      CHECK(kernel::convolve_karatsuba(a, b, out) == ref);
      CHECK(kernel::convolve_parallel(a, b, out) == ref);
      CHECK(kernel::convolve(a, b, out) == ref);
    }
  }
}

TEST_CASE("kernel edge cases") {
  kernel::Coeffs empty;
  kernel::Coeffs one = {Rational(3)};
  CHECK(kernel::convolve(empty, one, 5).empty());
  CHECK(kernel::convolve(one, one, 5) == kernel::Coeffs{Rational(9)});
  // truncation never exceeds the full product length
  kernel::Coeffs a = {Rational(1), Rational(2)};
  CHECK(kernel::convolve(a, a, 100).size() == 3);
}
