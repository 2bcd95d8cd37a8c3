#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cloudbench/blockcipher.hpp"
#include "cloudbench/natural.hpp"
#include "cloudbench/rng.hpp"

namespace cloudbench {

// Textbook (unpadded) RSA and ElGamal over chunked byte strings. Each chunk
// holds chunk_len = bits/8 - 1 plaintext bytes read big-endian, so every
// chunk value is below the modulus.

inline constexpr unsigned kRsaPublicExponent = 65537;

struct RsaPublicKey {
  Natural n;
  Natural e;
  std::size_t bits = 0;
};

struct RsaKeyPair {
  Natural n;
  Natural e;
  Natural d;
  std::size_t bits = 0;

  RsaPublicKey public_key() const { return {n, e, bits}; }
  friend bool operator==(const RsaKeyPair&, const RsaKeyPair&) = default;
};

struct ElGamalGroup {
  Natural p;  // safe prime
  Natural g;  // generator of the order-(p-1)/2 subgroup
  std::size_t bits = 0;
  friend bool operator==(const ElGamalGroup&, const ElGamalGroup&) = default;
};

struct ElGamalPublicKey {
  Natural p;
  Natural g;
  Natural y;
  std::size_t bits = 0;
};

struct ElGamalKeyPair {
  Natural p;
  Natural g;
  Natural x;
  Natural y;
  std::size_t bits = 0;

  ElGamalPublicKey public_key() const { return {p, g, y, bits}; }
  ElGamalGroup group() const { return {p, g, bits}; }
  friend bool operator==(const ElGamalKeyPair&, const ElGamalKeyPair&) = default;
};

enum class PubkeyScheme { Rsa, ElGamal };

/// Chunked public-key ciphertext. RSA stores one value per chunk; ElGamal
/// stores the pairs flattened as c1, c2, c1, c2, ...
struct BlockCiphertext {
  PubkeyScheme scheme = PubkeyScheme::Rsa;
  std::vector<Natural> blocks;
  std::size_t chunk_len = 0;
  std::size_t last_len = 0;

  std::size_t chunk_count() const {
    return scheme == PubkeyScheme::Rsa ? blocks.size() : blocks.size() / 2;
  }
  friend bool operator==(const BlockCiphertext&, const BlockCiphertext&) = default;
};

/// Plaintext bytes per chunk for a modulus of `bits` bits.
constexpr std::size_t chunk_length(std::size_t bits) { return bits / 8 - 1; }

/// Fresh primes p, q of bits/2 each; q is regenerated until n has exactly
/// `bits` bits. Throws DomainError unless bits is even and >= 64.
RsaKeyPair rsa_keygen(std::size_t bits, SeededRng& rng);
BlockCiphertext rsa_encrypt(const RsaPublicKey& key, ByteView plaintext);
Bytes rsa_decrypt(const RsaKeyPair& key, const BlockCiphertext& ct);

/// Safe prime p of `bits` bits and g = h^2 mod p != 1.
ElGamalGroup elgamal_generate_group(std::size_t bits, SeededRng& rng);

/// Standard MODP safe-prime group (generator 2) for 1024, 1536, 2048, 3072
/// and 4096 bits; nullopt for other sizes.
std::optional<ElGamalGroup> elgamal_well_known_group(std::size_t bits);

/// Draws x in [2, p-2] and y = g^x mod p. Without `group`, a fresh group is
/// generated first. Throws DomainError for bits < 64 or a group whose size
/// differs from `bits`.
ElGamalKeyPair elgamal_keygen(std::size_t bits, SeededRng& rng,
                              const std::optional<ElGamalGroup>& group = std::nullopt);
BlockCiphertext elgamal_encrypt(const ElGamalPublicKey& key, ByteView plaintext, SeededRng& rng);
Bytes elgamal_decrypt(const ElGamalKeyPair& key, const BlockCiphertext& ct);

}  // namespace cloudbench
