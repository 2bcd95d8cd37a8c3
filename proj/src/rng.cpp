#include "cloudbench/rng.hpp"

#include <algorithm>

#include "cloudbench/error.hpp"

namespace cloudbench {

std::uint64_t SeededRng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void SeededRng::fill(std::span<std::uint8_t> out) {
  std::size_t pos = 0;
  while (pos < out.size()) {
    std::uint64_t word = next_u64();
    const std::size_t take = std::min<std::size_t>(8, out.size() - pos);
    for (std::size_t i = 0; i < take; ++i) {
      out[pos + i] = static_cast<std::uint8_t>(word & 0xFF);
      word >>= 8;
    }
    pos += take;
  }
}

std::vector<std::uint8_t> SeededRng::bytes(std::size_t count) {
  std::vector<std::uint8_t> out(count);
  fill(out);
  return out;
}

Natural SeededRng::random_bits(std::size_t bits) {
  if (bits == 0) return Natural{};
  auto raw = bytes((bits + 7) / 8);
  const std::size_t excess = raw.size() * 8 - bits;
  raw.front() &= static_cast<std::uint8_t>(0xFFu >> excess);
  return Natural::from_bytes(raw);
}

Natural SeededRng::below(const Natural& bound) {
  if (bound.is_zero()) throw DomainError("random bound must be positive");
  const std::size_t bits = bound.bit_length();
  for (;;) {
    Natural candidate = random_bits(bits);
    if (candidate < bound) return candidate;
  }
}

Natural SeededRng::in_range(const Natural& low, const Natural& high) {
  if (low > high) throw DomainError("empty random range");
  return low + below(high - low + 1);
}

}  // namespace cloudbench
