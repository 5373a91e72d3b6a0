#include "clfrd/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clfrd/error.hpp"
#include "clfrd/special_functions.hpp"

namespace clfrd {

namespace {

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require_count(std::size_t n) {
  if (n == 0) throw DomainError("sample size must be >= 1");
}

double lfr_from_exponential(double alpha, double beta, double e) {
  return 2.0 * e / (alpha + std::sqrt(alpha * alpha + 2.0 * beta * e));
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept {
  return splitmix64(a ^ splitmix64(b + 0x632be59bd9b4e019ULL));
}

SeededStream::SeededStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
  const std::uint64_t k0 = mix_seed(seed, stream_index);
  const std::uint64_t k1 = splitmix64(k0);
  std::seed_seq seq{static_cast<std::uint32_t>(k0), static_cast<std::uint32_t>(k0 >> 32),
                    static_cast<std::uint32_t>(k1), static_cast<std::uint32_t>(k1 >> 32)};
  engine_.seed(seq);
}

double SeededStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededStream::exponential() { return -std::log1p(-uniform()); }

std::uint64_t SeededStream::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) throw DomainError("poisson mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean <= 10.0) {
    double u = uniform();
    double prob = std::exp(-mean);
    double cum = prob;
    std::uint64_t k = 0;
    while (u >= cum) {
      ++k;
      prob *= mean / static_cast<double>(k);
      cum += prob;
      if (prob < 1e-300 && cum <= u) {
        // rounding left a gap below u; restart from a fresh uniform
        u = uniform();
        k = 0;
        prob = std::exp(-mean);
        cum = prob;
      }
    }
    return k;
  }
  // PTRS: transformed rejection with squeeze
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = uniform() - 0.5;
    const double v = uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mean + k * loglam - ln_gamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

std::vector<double> sample_inverse(const ClfrdParams& p, std::size_t n, SeededStream& stream) {
  require_count(n);
  std::vector<double> out(n);
  for (auto& v : out) v = quantile(p, stream.uniform());
  return out;
}

std::vector<double> sample_compound(const ClfrdParams& p, std::size_t n, SeededStream& stream) {
  require_count(n);
  std::vector<double> out(n);
  for (auto& v : out) {
    const std::uint64_t count = 1 + stream.poisson(p.lambda());
    // the LFR map is increasing, so the minimum lifetime comes from the
    // minimum exponential
    double e_min = std::numeric_limits<double>::infinity();
    for (std::uint64_t j = 0; j < count; ++j) e_min = std::min(e_min, stream.exponential());
    v = lfr_from_exponential(p.alpha(), p.beta(), e_min);
  }
  return out;
}

std::vector<double> sample_baseline(const LifetimeModel& model, std::size_t n,
                                    SeededStream& stream) {
  require_count(n);
  std::vector<double> out(n);
  for (auto& v : out) v = model.quantile(stream.uniform());
  return out;
}

}  // namespace clfrd
