#include "pass/noise_stream.hpp"

#include <array>
#include <cmath>

namespace pass {

namespace {

std::mt19937_64 seeded_engine(const StreamKey& key) {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(key.master_seed), hi(key.master_seed), key.domain,
                    lo(key.unit),        hi(key.unit),        lo(key.trial),
                    hi(key.trial),       lo(key.pa),          hi(key.pa)};
  return std::mt19937_64(seq);
}

}  // namespace

NoiseStream::NoiseStream(const StreamKey& key) : engine_(seeded_engine(key)) {}

double NoiseStream::gaussian(double stddev) { return stddev * normal_(engine_); }

std::complex<double> NoiseStream::complex_gaussian(double variance) {
  const double s = std::sqrt(variance / 2.0);
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {s * re, s * im};
}

}  // namespace pass
