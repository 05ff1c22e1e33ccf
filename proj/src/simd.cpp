#include "hyperharm/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace hh::simd {

namespace detail {

Complex cdotu_scalar(const Complex* a, const Complex* b, std::size_t n) {
  num::KahanCSum acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(a[i] * b[i]);
  return acc.value();
}

void cmul_scalar(const Complex* a, const Complex* b, Complex* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#ifndef HH_HAVE_AVX2_TU
Complex cdotu_avx2(const Complex* a, const Complex* b, std::size_t n) {
  return cdotu_scalar(a, b, n);
}
void cmul_avx2(const Complex* a, const Complex* b, Complex* out, std::size_t n) {
  cmul_scalar(a, b, out, n);
}
#endif

}  // namespace detail

namespace {

std::atomic<int> g_level{-1};  // -1 unresolved

Level resolve() {
  const char* env = std::getenv("HYPERHARM_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return Level::Scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!detail::avx2_available()) throw StateError("HYPERHARM_SIMD=avx2 but CPU lacks AVX2+FMA");
      return Level::Avx2;
    }
  }
  return detail::avx2_available() ? Level::Avx2 : Level::Scalar;
}

Level level() {
  int v = g_level.load(std::memory_order_acquire);
  if (v < 0) {
    Level l = resolve();
    g_level.store(static_cast<int>(l), std::memory_order_release);
    return l;
  }
  return static_cast<Level>(v);
}

}  // namespace

Level active_level() { return level(); }

void force_level(Level l) { g_level.store(static_cast<int>(l), std::memory_order_release); }

const char* level_name() { return level() == Level::Avx2 ? "avx2" : "scalar"; }

Complex cdotu(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DomainError("cdotu: length mismatch");
  if (level() == Level::Avx2) return detail::cdotu_avx2(a.data(), b.data(), a.size());
  return detail::cdotu_scalar(a.data(), b.data(), a.size());
}

void cmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out) {
  if (a.size() != b.size() || a.size() != out.size()) throw DomainError("cmul: length mismatch");
  if (level() == Level::Avx2) {
    detail::cmul_avx2(a.data(), b.data(), out.data(), a.size());
    return;
  }
  detail::cmul_scalar(a.data(), b.data(), out.data(), a.size());
}

void scale_cr(std::span<const double> w, std::span<const Complex> f, std::span<Complex> out) {
  if (w.size() != f.size() || w.size() != out.size()) throw DomainError("scale_cr: length mismatch");
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] * f[i];
}

}  // namespace hh::simd
