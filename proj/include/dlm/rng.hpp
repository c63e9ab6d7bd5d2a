#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace dlm {

// splitmix64 finalizer; good avalanche, used to derive independent
// sub-streams from (master seed, index...) tuples.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t seed_combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b + 0x632be59bd9b4e019ULL));
}

inline std::uint64_t seed_combine(std::uint64_t a, std::uint64_t b,
                                  std::uint64_t c) {
  return seed_combine(seed_combine(a, b), c);
}

using Rng = std::mt19937_64;

// Circularly-symmetric complex Gaussian with E|w|^2 = 1.
inline std::complex<double> complex_gaussian(Rng& rng) {
  static constexpr double kHalfSqrt2 = 0.70710678118654752440;
  std::normal_distribution<double> n(0.0, 1.0);
  double re = n(rng);
  double im = n(rng);
  return {re * kHalfSqrt2, im * kHalfSqrt2};
}

inline std::complex<double> unit_phase(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * 3.14159265358979323846);
  double phi = u(rng);
  return {std::cos(phi), std::sin(phi)};
}

}  // namespace dlm
