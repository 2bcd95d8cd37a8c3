#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cloudbench/natural.hpp"

namespace cloudbench {

/// SplitMix64 stream. Identical seeds give byte-identical streams on every
/// platform.
///
/// NOT cryptographically secure. Every random choice in the library (keys,
/// nonces, primality bases, workloads) flows from this generator so that
/// benchmark runs are reproducible from a single seed.
///
/// Single owner: copy it to fork the stream, never share one across threads.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Fills `out` with the stream, each 64-bit output emitted little-endian.
  /// A trailing partial word consumes a full output.
  void fill(std::span<std::uint8_t> out);
  std::vector<std::uint8_t> bytes(std::size_t count);

  /// Uniform value with at most `bits` bits.
  Natural random_bits(std::size_t bits);
  /// Uniform value in [0, bound). Throws DomainError for bound = 0.
  Natural below(const Natural& bound);
  /// Uniform value in [low, high]. Throws DomainError for low > high.
  Natural in_range(const Natural& low, const Natural& high);

  std::uint64_t state() const { return state_; }

private:
  std::uint64_t state_;
};

}  // namespace cloudbench
