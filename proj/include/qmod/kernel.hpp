#pragma once

#include <cstddef>
#include <vector>

#include "qmod/rational.hpp"

namespace qmod::kernel {

using Coeffs = std::vector<Rational>;

/// Dense truncated convolution: out[k] = sum_i a[i]*b[k-i] for k < out_len.
/// out_len may be at most a.size()+b.size()-1; pass that value for the full
/// product.  All kernels compute the identical result; they differ only in
/// how the work is scheduled.

/// Serial schoolbook loop.  This is the reference everything else is tested
/// against.
Coeffs convolve_serial(const Coeffs& a, const Coeffs& b, std::size_t out_len);

/// Serial Karatsuba, used for full products above the degree threshold.
Coeffs convolve_karatsuba(const Coeffs& a, const Coeffs& b, std::size_t out_len);

/// OpenMP kernel: output coefficients are independent, so the k-loop is a
/// parallel for.  Falls back to the serial loop when built without OpenMP.
Coeffs convolve_parallel(const Coeffs& a, const Coeffs& b, std::size_t out_len);

/// Production entry point: picks a kernel from the problem size.
Coeffs convolve(const Coeffs& a, const Coeffs& b, std::size_t out_len);

/// Degree above which full products switch away from schoolbook.
constexpr std::size_t kKaratsubaThreshold = 64;
/// Coefficient-multiplication count above which the OpenMP kernel is used.
constexpr std::size_t kParallelWorkThreshold = 16384;

}  // namespace qmod::kernel
