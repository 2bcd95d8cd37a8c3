#include "cloudbench/error.hpp"
#include "cloudbench/homomorphic.hpp"
#include "cloudbench/numtheory.hpp"

namespace cloudbench {

namespace {

void check_block_size(const Natural& r) {
  if (r < 3 || !r.is_odd() || !is_probable_prime(r, kKeygenPrimalityRounds)) {
    throw UnsupportedParameterError("benaloh: r must be an odd prime, got " + r.to_decimal());
  }
}

void check_fingerprint(const KeyFingerprint& expected, const KeyFingerprint& actual, const char* what) {
  if (expected != actual) throw KeyMismatchError(std::string(what) + ": ciphertext belongs to a different key");
}

bool is_valid_base(const Natural& y, const Natural& n, const Natural& phi_over_r) {
  return !y.is_zero() && y < n && gcd(y, n) == 1 && mod_pow(y, phi_over_r, n) != 1;
}

BenalohKeyPair assemble(const Natural& r, const Natural& p, const Natural& q, Natural y) {
  BenalohKeyPair key;
  key.r = r;
  key.n = p * q;
  key.phi = (p - 1) * (q - 1);
  key.x = mod_pow(y, key.phi / r, key.n);
  key.y = std::move(y);
  key.bits = key.n.bit_length();
  key.fingerprint = fingerprint_of(key.n);
  return key;
}

// p = r*k + 1 with exactly `bits` bits and r not dividing k.
Natural search_p(const Natural& r, std::size_t bits, SeededRng& rng) {
  const Natural low = Natural(1) << (bits - 1);
  const Natural high = (Natural(1) << bits) - 1;
  const Natural k_low = (low - 1 + r - 1) / r;
  const Natural k_high = (high - 1) / r;
  if (k_low > k_high) throw DomainError("benaloh: r too large for " + std::to_string(bits) + "-bit primes");
  for (;;) {
    Natural k = rng.in_range(k_low, k_high);
    if (k.is_odd()) {
      // r is odd, so k must be even for p to be odd.
      if (k < k_high) {
        k += 1;
      } else {
        k -= 1;
      }
    }
    if (k < k_low || (k % r).is_zero()) continue;
    Natural p = r * k + 1;
    if (is_probable_prime(p, kKeygenPrimalityRounds, rng)) return p;
  }
}

}  // namespace

BenalohKeyPair benaloh_keypair_from_primes(const Natural& r, const Natural& p, const Natural& q,
                                           const std::optional<Natural>& y) {
  check_block_size(r);
  if (p == q) throw DomainError("benaloh: p and q must differ");
  if (!is_probable_prime(p, kKeygenPrimalityRounds) || !is_probable_prime(q, kKeygenPrimalityRounds)) {
    throw DomainError("benaloh: p and q must be prime");
  }
  const Natural p1 = p - 1;
  const Natural q1 = q - 1;
  if (!(p1 % r).is_zero()) throw DomainError("benaloh: r must divide p-1");
  if (gcd(r, p1 / r) != 1) throw DomainError("benaloh: gcd(r, (p-1)/r) != 1");
  if (gcd(r, q1) != 1) throw DomainError("benaloh: gcd(r, q-1) != 1");

  const Natural n = p * q;
  const Natural phi_over_r = p1 * q1 / r;
  if (y) {
    if (!is_valid_base(*y, n, phi_over_r)) throw DomainError("benaloh: y^(phi/r) = 1 or y not a unit");
    return assemble(r, p, q, *y);
  }
  for (Natural candidate = 2; candidate < n; candidate += 1) {
    if (is_valid_base(candidate, n, phi_over_r)) return assemble(r, p, q, candidate);
  }
  throw DomainError("benaloh: no valid y");
}

BenalohKeyPair benaloh_keygen(const Natural& r, std::size_t bits, SeededRng& rng) {
  check_block_size(r);
  if (bits < 16 || bits % 2 != 0) throw DomainError("benaloh_keygen: bits must be even and >= 16");
  const std::size_t half = bits / 2;
  const Natural p = search_p(r, half, rng);
  Natural q;
  do {
    q = gen_prime(half, rng);
  } while (q == p || (q - 1) % r == 0 || (p * q).bit_length() != bits);

  const Natural n = p * q;
  const Natural phi_over_r = (p - 1) * (q - 1) / r;
  for (;;) {
    Natural y = rng.in_range(2, n - 1);
    if (is_valid_base(y, n, phi_over_r)) {
      auto key = assemble(r, p, q, std::move(y));
      key.bits = bits;
      return key;
    }
  }
}

BenalohCiphertext benaloh_encrypt_with_nonce(const BenalohPublicKey& key, const Natural& m, const Natural& u) {
  if (m >= key.r) throw MessageTooLargeError("benaloh: message must be < r");
  if (u.is_zero() || u >= key.n || gcd(u, key.n) != 1) throw DomainError("benaloh: nonce must be a unit below n");
  const Natural c = (mod_pow(key.y, m, key.n) * mod_pow(u, key.r, key.n)) % key.n;
  return BenalohCiphertext{c, key.fingerprint};
}

BenalohCiphertext benaloh_encrypt(const BenalohPublicKey& key, const Natural& m, SeededRng& rng) {
  if (m >= key.r) throw MessageTooLargeError("benaloh: message must be < r");
  for (;;) {
    Natural u = rng.in_range(1, key.n - 1);
    if (gcd(u, key.n) == 1) return benaloh_encrypt_with_nonce(key, m, u);
  }
}

Natural benaloh_decrypt(const BenalohKeyPair& key, const BenalohCiphertext& c) {
  check_fingerprint(key.fingerprint, c.key_fingerprint, "benaloh_decrypt");
  if (c.value >= key.n) throw DomainError("benaloh_decrypt: ciphertext >= n");
  const Natural a = mod_pow(c.value, key.phi / key.r, key.n);
  try {
    return discrete_log_bsgs(key.x, a, key.n, key.r.to_u64());
  } catch (const NotFoundError&) {
    throw DecryptionError("benaloh_decrypt: ciphertext does not decrypt under this key");
  }
}

BenalohCiphertext benaloh_add(const BenalohPublicKey& key, const BenalohCiphertext& a, const BenalohCiphertext& b) {
  check_fingerprint(key.fingerprint, a.key_fingerprint, "benaloh_add");
  check_fingerprint(key.fingerprint, b.key_fingerprint, "benaloh_add");
  return BenalohCiphertext{(a.value * b.value) % key.n, key.fingerprint};
}

}  // namespace cloudbench
