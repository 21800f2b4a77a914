#pragma once

#include <cstdint>

#include "jflc/matrix.hpp"

namespace jflc {

/// xoshiro256++ generator with splitmix64 seeding. Self-contained so streams
/// are bit-reproducible across platforms and standard library versions.
/// Substreams for (experiment seed, sweep, trial, algorithm) are derived with
/// derive(); derived streams are statistically independent of the parent.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Derives an independent stream keyed by this generator's seed and the tags.
    Rng derive(std::uint64_t tag0, std::uint64_t tag1 = 0, std::uint64_t tag2 = 0) const;

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer in [0, n).
    int uniform_int(int n);
    /// Standard normal via Box-Muller.
    double normal();

    Matrix gaussian_matrix(int rows, int cols);
    Matrix uniform_matrix(int rows, int cols, double lo = 0.0, double hi = 1.0);
    /// Column-stochastic matrix with Dirichlet(1) columns.
    Matrix dirichlet_columns(int rows, int cols);

    /// Fisher-Yates permutation of 0..n-1.
    std::vector<int> permutation(int n);

  private:
    std::uint64_t seed_key_;
    std::uint64_t s_[4];
};

} // namespace jflc
