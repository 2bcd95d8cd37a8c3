#include "chunking.hpp"
#include "cloudbench/numtheory.hpp"
#include "cloudbench/pubkey.hpp"

namespace cloudbench {

ElGamalGroup elgamal_generate_group(std::size_t bits, SeededRng& rng) {
  if (bits < 64) throw DomainError("elgamal: bits must be >= 64");
  const Natural p = gen_safe_prime(bits, rng);
  // Squares generate the quadratic-residue subgroup of prime order (p-1)/2.
  for (;;) {
    const Natural h = rng.in_range(2, p - 2);
    Natural g = (h * h) % p;
    if (g != 1) return ElGamalGroup{p, std::move(g), bits};
  }
}

ElGamalKeyPair elgamal_keygen(std::size_t bits, SeededRng& rng, const std::optional<ElGamalGroup>& group) {
  if (bits < 64) throw DomainError("elgamal_keygen: bits must be >= 64");
  if (group && (group->bits != bits || group->p.bit_length() != bits)) {
    throw DomainError("elgamal_keygen: cached group is not " + std::to_string(bits) + " bits");
  }
  const ElGamalGroup params = group ? *group : elgamal_generate_group(bits, rng);
  Natural x = rng.in_range(2, params.p - 2);
  Natural y = mod_pow(params.g, x, params.p);
  return ElGamalKeyPair{params.p, params.g, std::move(x), std::move(y), bits};
}

BlockCiphertext elgamal_encrypt(const ElGamalPublicKey& key, ByteView plaintext, SeededRng& rng) {
  const std::size_t chunk_len = chunk_length(key.bits);
  auto chunks = detail::split_chunks(plaintext, chunk_len);
  BlockCiphertext ct{PubkeyScheme::ElGamal, {}, chunk_len, chunks.last_len};
  ct.blocks.reserve(2 * chunks.values.size());
  const Natural k_high = key.p - 2;
  for (const auto& m : chunks.values) {
    const Natural k = rng.in_range(2, k_high);
    ct.blocks.push_back(mod_pow(key.g, k, key.p));
    ct.blocks.push_back((m * mod_pow(key.y, k, key.p)) % key.p);
  }
  return ct;
}

Bytes elgamal_decrypt(const ElGamalKeyPair& key, const BlockCiphertext& ct) {
  if (ct.scheme != PubkeyScheme::ElGamal) throw DomainError("elgamal_decrypt: ciphertext is not ElGamal");
  if (ct.blocks.size() % 2 != 0) throw DomainError("elgamal_decrypt: odd number of components");
  if (ct.chunk_len != chunk_length(key.bits)) throw DomainError("elgamal_decrypt: chunk length does not match key");
  const std::size_t chunks = ct.blocks.size() / 2;
  detail::check_chunk_shape(chunks, ct.chunk_len, ct.last_len);

  Bytes out;
  out.reserve((chunks - 1) * ct.chunk_len + ct.last_len);
  for (std::size_t i = 0; i < chunks; ++i) {
    const Natural& c1 = ct.blocks[2 * i];
    const Natural& c2 = ct.blocks[2 * i + 1];
    if (c1 >= key.p || c2 >= key.p) throw DomainError("elgamal_decrypt: component of chunk " + std::to_string(i) + " >= p");
    const Natural shared = mod_pow(c1, key.x, key.p);
    const Natural m = (c2 * mod_inverse(shared, key.p)) % key.p;
    detail::append_chunk(out, m, i + 1 == chunks ? ct.last_len : ct.chunk_len);
  }
  return out;
}

}  // namespace cloudbench
