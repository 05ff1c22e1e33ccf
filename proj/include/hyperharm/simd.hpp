#pragma once
// Data-parallel inner-loop kernels with runtime-dispatched AVX2 variants.
//
// Summation order is fixed per kernel level: the scalar kernels reduce in
// ascending index order with Kahan compensation; the AVX2 kernels keep two
// interleaved compensated lanes (index mod 2), combine lane 0 then lane 1,
// then fold the scalar tail. Either way a given binary on a given machine
// reproduces bit-identical results regardless of caller thread count.

#include <cstddef>
#include <span>

#include "hyperharm/numerics.hpp"

namespace hh::simd {

enum class Level { Scalar, Avx2 };

// Resolved once per process: HYPERHARM_SIMD={auto,scalar,avx2} plus a CPUID
// check. force_level() overrides (tests).
Level active_level();
const char* level_name();
void force_level(Level level);

// sum_i a[i] * b[i]
Complex cdotu(std::span<const Complex> a, std::span<const Complex> b);
// out[i] = a[i] * b[i]
void cmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out);
// out[i] = w[i] * f[i], real weights
void scale_cr(std::span<const double> w, std::span<const Complex> f, std::span<Complex> out);

namespace detail {
Complex cdotu_scalar(const Complex* a, const Complex* b, std::size_t n);
void cmul_scalar(const Complex* a, const Complex* b, Complex* out, std::size_t n);
Complex cdotu_avx2(const Complex* a, const Complex* b, std::size_t n);
void cmul_avx2(const Complex* a, const Complex* b, Complex* out, std::size_t n);
bool avx2_available();
}  // namespace detail

}  // namespace hh::simd
