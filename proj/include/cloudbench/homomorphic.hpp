#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "cloudbench/natural.hpp"
#include "cloudbench/rng.hpp"

namespace cloudbench {

/// SHA-1 of the big-endian bytes of a key's modulus n. Ciphertexts carry it
/// so that mixing keys is detected.
using KeyFingerprint = std::array<std::uint8_t, 20>;

KeyFingerprint fingerprint_of(const Natural& modulus);

// ---------------------------------------------------------------- Paillier

struct PaillierPublicKey {
  Natural n;
  Natural n_sq;
  Natural g;  // n + 1
  std::size_t bits = 0;
  KeyFingerprint fingerprint{};
};

struct PaillierKeyPair {
  Natural n;
  Natural n_sq;
  Natural g;
  Natural lambda;  // lcm(p-1, q-1)
  Natural mu;      // L(g^lambda mod n^2)^-1 mod n
  std::size_t bits = 0;
  KeyFingerprint fingerprint{};

  PaillierPublicKey public_key() const { return {n, n_sq, g, bits, fingerprint}; }
  friend bool operator==(const PaillierKeyPair&, const PaillierKeyPair&) = default;
};

struct PaillierCiphertext {
  Natural value;  // < n^2
  KeyFingerprint key_fingerprint{};
  friend bool operator==(const PaillierCiphertext&, const PaillierCiphertext&) = default;
};

/// Primes of bits/2 each, retried until gcd(n, (p-1)(q-1)) = 1.
/// Throws DomainError unless bits is even and >= 16.
PaillierKeyPair paillier_keygen(std::size_t bits, SeededRng& rng);
/// Builds the key from given primes. Throws DomainError if p = q or
/// gcd(pq, (p-1)(q-1)) != 1.
PaillierKeyPair paillier_keypair_from_primes(const Natural& p, const Natural& q);

/// c = g^m * u^n mod n^2 with a fresh unit u. Throws MessageTooLargeError for m >= n.
PaillierCiphertext paillier_encrypt(const PaillierPublicKey& key, const Natural& m, SeededRng& rng);
/// Same with a caller-chosen nonce u; throws DomainError unless u is a unit in [1, n-1].
PaillierCiphertext paillier_encrypt_with_nonce(const PaillierPublicKey& key, const Natural& m, const Natural& u);
/// m = L(c^lambda mod n^2) * mu mod n. Throws KeyMismatchError for another key's ciphertext.
Natural paillier_decrypt(const PaillierKeyPair& key, const PaillierCiphertext& c);
/// Decrypts to (m1 + m2) mod n.
PaillierCiphertext paillier_add(const PaillierPublicKey& key, const PaillierCiphertext& a,
                                const PaillierCiphertext& b);
/// Decrypts to k*m mod n.
PaillierCiphertext paillier_scalar_mul(const PaillierPublicKey& key, const PaillierCiphertext& c,
                                       const Natural& k);

// ---------------------------------------------------------------- Benaloh

inline constexpr std::uint64_t kDefaultBenalohBlockSize = 257;

struct BenalohPublicKey {
  Natural r;  // message-space modulus (prime)
  Natural n;
  Natural y;
  std::size_t bits = 0;
  KeyFingerprint fingerprint{};
};

struct BenalohKeyPair {
  Natural r;
  Natural n;
  Natural y;
  Natural phi;  // (p-1)(q-1)
  Natural x;    // y^(phi/r) mod n
  std::size_t bits = 0;
  KeyFingerprint fingerprint{};

  BenalohPublicKey public_key() const { return {r, n, y, bits, fingerprint}; }
  friend bool operator==(const BenalohKeyPair&, const BenalohKeyPair&) = default;
};

struct BenalohCiphertext {
  Natural value;  // < n
  KeyFingerprint key_fingerprint{};
  friend bool operator==(const BenalohCiphertext&, const BenalohCiphertext&) = default;
};

/// Searches p with r | p-1 and gcd(r, (p-1)/r) = 1, q with gcd(r, q-1) = 1,
/// both of bits/2 bits, and y with y^(phi/r) != 1 mod n.
/// Throws UnsupportedParameterError unless r is an odd prime, DomainError
/// for bits < 16 or an r too large for the prime size.
BenalohKeyPair benaloh_keygen(const Natural& r, std::size_t bits, SeededRng& rng);
/// Builds the key from given parameters; `y` is searched from 2 upward when
/// absent. Throws DomainError when an invariant does not hold.
BenalohKeyPair benaloh_keypair_from_primes(const Natural& r, const Natural& p, const Natural& q,
                                           const std::optional<Natural>& y = std::nullopt);

/// c = y^m * u^r mod n with a fresh unit u. Throws MessageTooLargeError for m >= r.
BenalohCiphertext benaloh_encrypt(const BenalohPublicKey& key, const Natural& m, SeededRng& rng);
BenalohCiphertext benaloh_encrypt_with_nonce(const BenalohPublicKey& key, const Natural& m, const Natural& u);
/// The unique m in [0, r) with x^m = c^(phi/r) mod n, found by baby-step
/// giant-step. Throws DecryptionError when none exists, KeyMismatchError for
/// another key's ciphertext.
Natural benaloh_decrypt(const BenalohKeyPair& key, const BenalohCiphertext& c);
/// Decrypts to (m1 + m2) mod r.
BenalohCiphertext benaloh_add(const BenalohPublicKey& key, const BenalohCiphertext& a,
                              const BenalohCiphertext& b);

}  // namespace cloudbench
