#pragma once

#include <cstdint>

namespace pawbar {

/// SplitMix64 generator. The whole state is one 64-bit word, advanced by the
/// golden-ratio increment 0x9E3779B97F4A7C15 and finalised with the
/// Stafford "mix13" constants 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB.
/// The sequence is identical on every platform and language that implements
/// the same constants, which makes traces bit-reproducible.
struct RngState {
  std::uint64_t state = 0;

  friend bool operator==(const RngState&, const RngState&) = default;
};

inline std::uint64_t next_u64(RngState& rng) noexcept {
  rng.state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = rng.state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double next_uniform(RngState& rng) noexcept {
  return static_cast<double>(next_u64(rng) >> 11) * 0x1.0p-53;
}

/// Standard normal draw (Box-Muller, cosine branch only; two uniforms per draw).
double next_normal(RngState& rng) noexcept;

}  // namespace pawbar
