#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "clfrd/distributions.hpp"

namespace clfrd {

/// SplitMix64 finalizer applied to a ^ golden-ratio-scrambled b. Used to
/// derive independent seeds for (cell, replication) keys.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

/// Reproducible uniform stream keyed by (seed, stream_index). Two streams with
/// the same key produce identical sequences; distinct keys are decorrelated by
/// hashing before the Mersenne Twister is seeded. Not thread-safe: give each
/// worker its own stream.
class SeededStream {
 public:
  SeededStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  /// Uniform on [0, 1) with 53 random bits; never returns 1.
  double uniform();
  /// Standard exponential.
  double exponential();
  /// Poisson(mean). Inversion for mean <= 10, PTRS (Hormann 1993) above.
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

/// n draws of quantile(p, u), u uniform on [0, 1). Throws DomainError for n == 0.
std::vector<double> sample_inverse(const ClfrdParams& p, std::size_t n, SeededStream& stream);

/// n draws of min(X_1..X_N) with N - 1 ~ Poisson(lambda), X_j ~ LFR(alpha, beta).
std::vector<double> sample_compound(const ClfrdParams& p, std::size_t n, SeededStream& stream);

/// Inverse-transform draws from any model.
std::vector<double> sample_baseline(const LifetimeModel& model, std::size_t n,
                                    SeededStream& stream);

}  // namespace clfrd
