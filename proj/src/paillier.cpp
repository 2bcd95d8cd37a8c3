#include "cloudbench/digest.hpp"
#include "cloudbench/error.hpp"
#include "cloudbench/homomorphic.hpp"
#include "cloudbench/numtheory.hpp"

namespace cloudbench {

namespace {

void check_fingerprint(const KeyFingerprint& expected, const KeyFingerprint& actual, const char* what) {
  if (expected != actual) throw KeyMismatchError(std::string(what) + ": ciphertext belongs to a different key");
}

// L(u) = (u - 1) / n, exact for u = 1 (mod n).
Natural paillier_l(const Natural& u, const Natural& n) { return (u - 1) / n; }

Natural random_unit(const Natural& n, SeededRng& rng) {
  for (;;) {
    Natural u = rng.in_range(1, n - 1);
    if (gcd(u, n) == 1) return u;
  }
}

}  // namespace

KeyFingerprint fingerprint_of(const Natural& modulus) {
  const auto digest = sha1(modulus.to_bytes());
  KeyFingerprint out{};
  std::copy(digest.bytes.begin(), digest.bytes.end(), out.begin());
  return out;
}

PaillierKeyPair paillier_keypair_from_primes(const Natural& p, const Natural& q) {
  if (p == q) throw DomainError("paillier: p and q must differ");
  if (p < 3 || q < 3) throw DomainError("paillier: primes must be odd");
  const Natural n = p * q;
  const Natural p1 = p - 1;
  const Natural q1 = q - 1;
  if (gcd(n, p1 * q1) != 1) throw DomainError("paillier: gcd(n, (p-1)(q-1)) != 1");

  PaillierKeyPair key;
  key.n = n;
  key.n_sq = n * n;
  key.g = n + 1;
  key.lambda = lcm(p1, q1);
  key.mu = mod_inverse(paillier_l(mod_pow(key.g, key.lambda, key.n_sq), n), n);
  key.bits = n.bit_length();
  key.fingerprint = fingerprint_of(n);
  return key;
}

PaillierKeyPair paillier_keygen(std::size_t bits, SeededRng& rng) {
  if (bits < 16 || bits % 2 != 0) throw DomainError("paillier_keygen: bits must be even and >= 16");
  const std::size_t half = bits / 2;
  for (;;) {
    const Natural p = gen_prime(half, rng);
    const Natural q = gen_prime(half, rng);
    if (p == q || (p * q).bit_length() != bits) continue;
    if (gcd(p * q, (p - 1) * (q - 1)) != 1) continue;
    auto key = paillier_keypair_from_primes(p, q);
    key.bits = bits;
    return key;
  }
}

PaillierCiphertext paillier_encrypt_with_nonce(const PaillierPublicKey& key, const Natural& m, const Natural& u) {
  if (m >= key.n) throw MessageTooLargeError("paillier: message must be < n");
  if (u.is_zero() || u >= key.n || gcd(u, key.n) != 1) throw DomainError("paillier: nonce must be a unit below n");
  const Natural c = (mod_pow(key.g, m, key.n_sq) * mod_pow(u, key.n, key.n_sq)) % key.n_sq;
  return PaillierCiphertext{c, key.fingerprint};
}

PaillierCiphertext paillier_encrypt(const PaillierPublicKey& key, const Natural& m, SeededRng& rng) {
  if (m >= key.n) throw MessageTooLargeError("paillier: message must be < n");
  return paillier_encrypt_with_nonce(key, m, random_unit(key.n, rng));
}

Natural paillier_decrypt(const PaillierKeyPair& key, const PaillierCiphertext& c) {
  check_fingerprint(key.fingerprint, c.key_fingerprint, "paillier_decrypt");
  if (c.value >= key.n_sq) throw DomainError("paillier_decrypt: ciphertext >= n^2");
  const Natural u = mod_pow(c.value, key.lambda, key.n_sq);
  if (u.is_zero()) throw DecryptionError("paillier_decrypt: ciphertext is not a unit");
  return (paillier_l(u, key.n) * key.mu) % key.n;
}

PaillierCiphertext paillier_add(const PaillierPublicKey& key, const PaillierCiphertext& a,
                                const PaillierCiphertext& b) {
  check_fingerprint(key.fingerprint, a.key_fingerprint, "paillier_add");
  check_fingerprint(key.fingerprint, b.key_fingerprint, "paillier_add");
  return PaillierCiphertext{(a.value * b.value) % key.n_sq, key.fingerprint};
}

PaillierCiphertext paillier_scalar_mul(const PaillierPublicKey& key, const PaillierCiphertext& c,
                                       const Natural& k) {
  check_fingerprint(key.fingerprint, c.key_fingerprint, "paillier_scalar_mul");
  return PaillierCiphertext{mod_pow(c.value, k, key.n_sq), key.fingerprint};
}

}  // namespace cloudbench
