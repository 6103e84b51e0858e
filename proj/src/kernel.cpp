#include "qmod/kernel.hpp"

#include <algorithm>
#include <cstddef>

namespace qmod::kernel {

namespace {

std::size_t full_len(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return 0;
  return a.size() + b.size() - 1;
}

// Karatsuba on equal-length halves; falls back to schoolbook below the
// threshold.  Works on full products only.
Coeffs karatsuba_full(const Coeffs& a, const Coeffs& b) {
  const std::size_t n = a.size(), m = b.size();
  if (n == 0 || m == 0) return {};
  if (std::min(n, m) <= kKaratsubaThreshold)
    return convolve_serial(a, b, n + m - 1);

  const std::size_t h = std::max(n, m) / 2;
  auto lo = [&](const Coeffs& c) {
    return Coeffs(c.begin(), c.begin() + std::min(h, c.size()));
  };
  auto hi = [&](const Coeffs& c) {
    return c.size() > h ? Coeffs(c.begin() + h, c.end()) : Coeffs{};
  };
  Coeffs a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);

  Coeffs z0 = karatsuba_full(a0, b0);
  Coeffs z2 = karatsuba_full(a1, b1);

  auto plus = [](const Coeffs& x, const Coeffs& y) {
    Coeffs r(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
    return r;
  };
  Coeffs z1 = karatsuba_full(plus(a0, a1), plus(b0, b1));
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  Coeffs out(n + m - 1);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
  return out;
}

}  // namespace

Coeffs convolve_serial(const Coeffs& a, const Coeffs& b, std::size_t out_len) {
  out_len = std::min(out_len, full_len(a, b));
  Coeffs out(out_len);
  Rational t;
  for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
    if (a[i].is_zero()) continue;
    const std::size_t jmax = std::min(b.size(), out_len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b[j].is_zero()) continue;
      t = a[i];
      t *= b[j];
      out[i + j] += t;
    }
  }
  return out;
}

Coeffs convolve_karatsuba(const Coeffs& a, const Coeffs& b, std::size_t out_len) {
  Coeffs out = karatsuba_full(a, b);
  if (out_len < out.size()) out.resize(out_len);
  return out;
}

Coeffs convolve_parallel(const Coeffs& a, const Coeffs& b, std::size_t out_len) {
  out_len = std::min(out_len, full_len(a, b));
  Coeffs out(out_len);
#if defined(QMOD_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < static_cast<long>(out_len); ++k) {
    const std::size_t uk = static_cast<std::size_t>(k);
    Rational acc, t;
    const std::size_t ilo = uk >= b.size() ? uk - b.size() + 1 : 0;
    const std::size_t ihi = std::min(a.size() - 1, uk);
    for (std::size_t i = ilo; i <= ihi; ++i) {
      if (a[i].is_zero() || b[uk - i].is_zero()) continue;
      t = a[i];
      t *= b[uk - i];
      acc += t;
    }
    out[uk] = std::move(acc);
  }
  return out;
#else
  return convolve_serial(a, b, out_len);
#endif
}

Coeffs convolve(const Coeffs& a, const Coeffs& b, std::size_t out_len) {
  const std::size_t fl = full_len(a, b);
  out_len = std::min(out_len, fl);
  if (out_len == 0) return {};
  const std::size_t work = std::min(a.size(), out_len) * std::min(b.size(), out_len);
#if defined(QMOD_HAVE_OPENMP)
  if (work >= kParallelWorkThreshold) return convolve_parallel(a, b, out_len);
#endif
  if (out_len == fl && std::min(a.size(), b.size()) > kKaratsubaThreshold)
    return convolve_karatsuba(a, b, out_len);
  return convolve_serial(a, b, out_len);
}

}  // namespace qmod::kernel
