#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace cloudbench {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline constexpr std::size_t kAesBlockSize = 16;
inline constexpr std::size_t kDesBlockSize = 8;

/// AES-128 key with its 11 expanded round keys.
class AesKey128 {
public:
  /// Throws DomainError unless `key` is exactly 16 bytes.
  explicit AesKey128(ByteView key);

  const std::array<std::uint8_t, 16>& key_bytes() const { return key_; }
  const std::array<std::array<std::uint8_t, 16>, 11>& round_keys() const { return round_keys_; }

private:
  std::array<std::uint8_t, 16> key_{};
  std::array<std::array<std::uint8_t, 16>, 11> round_keys_{};
};

/// DES key: 8 input bytes (parity bits ignored), 16 48-bit subkeys.
class DesKey {
public:
  /// Throws DomainError unless `key` is exactly 8 bytes.
  explicit DesKey(ByteView key);

  const std::array<std::uint8_t, 8>& key_bytes() const { return key_; }
  const std::array<std::uint64_t, 16>& subkeys() const { return subkeys_; }

private:
  std::array<std::uint8_t, 8> key_{};
  std::array<std::uint64_t, 16> subkeys_{};
};

// Block operations throw DomainError on a wrong block length.
std::array<std::uint8_t, 16> aes_encrypt_block(const AesKey128& key, ByteView block);
std::array<std::uint8_t, 16> aes_decrypt_block(const AesKey128& key, ByteView block);
std::array<std::uint8_t, 8> des_encrypt_block(const DesKey& key, ByteView block);
std::array<std::uint8_t, 8> des_decrypt_block(const DesKey& key, ByteView block);

using BlockCipherKey = std::variant<AesKey128, DesKey>;

std::size_t block_size(const BlockCipherKey& key);

struct CbcCiphertext {
  Bytes iv;
  Bytes body;  // nonempty multiple of the block size
};

/// PKCS#7 pad (always at least one byte), then CBC-chain from `iv`.
/// Throws DomainError when `iv` is not exactly one block.
CbcCiphertext cbc_encrypt(const BlockCipherKey& key, ByteView iv, ByteView plaintext);

/// Inverse of cbc_encrypt. Throws DomainError for a misaligned or empty body
/// or a wrong-length iv, PaddingError for malformed padding.
Bytes cbc_decrypt(const BlockCipherKey& key, const CbcCiphertext& ct);

}  // namespace cloudbench
