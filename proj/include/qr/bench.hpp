#pragma once

#include <cstdint>

namespace qr {

// Default RNG seed for reproducible benchmark tables; override per run.
inline constexpr std::uint64_t kDefaultBenchSeed = 0x9e3779b97f4a7c15ull;

struct BenchResult {
  int bits;
  std::uint64_t samples;
  std::uint64_t seed;
  double jacobi_ns;  // mean ns per jacobi(a, p)
  double euler_ns;   // mean ns per Euler-criterion (a/p)
  double speedup;    // euler_ns / jacobi_ns
};

// Times jacobi against the Euler-criterion baseline on `samples` seeded
// random pairs (a, p) with p a prime of exactly `bits` bits. bits must be
// 31 or 63; samples must be >= 1.
BenchResult run_bench(int bits, std::uint64_t samples, std::uint64_t seed = kDefaultBenchSeed);

}  // namespace qr
