#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "teissier/ideal.hpp"
#include "teissier/io.hpp"

namespace teissier {

struct SweepOptions {
  std::uint64_t seed = 1;
  int count = 50;
  int dim = 2;
  Exp max_exp = 5;
  int threads = 0;  // 0: TEISSIER_THREADS env, else hardware concurrency
};

struct SweepResult {
  Json report;
  bool ok = false;
};

/// Deterministic m-primary ideal: all axis pure powers plus up to dim extra
/// mixed generators, drawn from the engine in a fixed order. mt19937_64 is
/// bit-exact across platforms, so reports are reproducible from the seed.
MonomialIdeal random_m_primary(std::mt19937_64& rng, int dim, Exp max_exp);

/// Runs every registered property over `count` seeded ideal pairs. The
/// report is byte-identical for a fixed seed regardless of thread count.
SweepResult run_sweep(const SweepOptions& opts);

}  // namespace teissier
