#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cloudbench {

enum class HashAlgorithm { Md5, Sha1 };

/// Digest length in bytes: 16 for MD5, 20 for SHA-1.
constexpr std::size_t digest_size(HashAlgorithm algorithm) {
  return algorithm == HashAlgorithm::Md5 ? 16 : 20;
}

struct Digest {
  HashAlgorithm algorithm;
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend bool operator==(const Digest&, const Digest&) = default;
};

/// Streaming Merkle-Damgard state over 64-byte blocks.
///
/// Holds at most one partial block between updates. Calling update() or
/// finalize() after finalize() throws StateError.
class HashState {
public:
  explicit HashState(HashAlgorithm algorithm);

  void update(std::span<const std::uint8_t> chunk);
  void update(std::string_view chunk);
  Digest finalize();

  HashAlgorithm algorithm() const { return algorithm_; }
  bool finalized() const { return finalized_; }
  std::size_t buffered() const { return buffered_; }

private:
  void compress(const std::uint8_t* block);

  HashAlgorithm algorithm_;
  std::array<std::uint32_t, 5> chain_{};
  std::array<std::uint8_t, 64> buffer_{};
  std::size_t buffered_ = 0;
  std::uint64_t total_bytes_ = 0;
  bool finalized_ = false;
};

Digest md5(std::span<const std::uint8_t> message);
Digest md5(std::string_view message);
Digest sha1(std::span<const std::uint8_t> message);
Digest sha1(std::string_view message);
Digest hash(HashAlgorithm algorithm, std::span<const std::uint8_t> message);

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Throws DomainError on odd length or a non-hex character.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace cloudbench
