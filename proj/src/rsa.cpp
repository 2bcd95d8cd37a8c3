#include "chunking.hpp"
#include "cloudbench/numtheory.hpp"
#include "cloudbench/pubkey.hpp"

namespace cloudbench {

RsaKeyPair rsa_keygen(std::size_t bits, SeededRng& rng) {
  if (bits < 64 || bits % 2 != 0) throw DomainError("rsa_keygen: bits must be even and >= 64");
  const std::size_t half = bits / 2;
  for (;;) {
    const Natural p = gen_prime(half, rng);
    Natural q;
    Natural n;
    do {
      q = gen_prime(half, rng);
      n = p * q;
    } while (q == p || n.bit_length() != bits);

    const Natural phi = (p - 1) * (q - 1);
    // e = 65537 unless it shares a factor with phi; then the next odd candidate.
    Natural e(kRsaPublicExponent);
    while (e < phi && gcd(e, phi) != 1) e += 2;
    if (e >= phi) continue;
    return RsaKeyPair{n, e, mod_inverse(e, phi), bits};
  }
}

BlockCiphertext rsa_encrypt(const RsaPublicKey& key, ByteView plaintext) {
  const std::size_t chunk_len = chunk_length(key.bits);
  auto chunks = detail::split_chunks(plaintext, chunk_len);
  BlockCiphertext ct{PubkeyScheme::Rsa, {}, chunk_len, chunks.last_len};
  ct.blocks.reserve(chunks.values.size());
  for (const auto& m : chunks.values) ct.blocks.push_back(mod_pow(m, key.e, key.n));
  return ct;
}

Bytes rsa_decrypt(const RsaKeyPair& key, const BlockCiphertext& ct) {
  if (ct.scheme != PubkeyScheme::Rsa) throw DomainError("rsa_decrypt: ciphertext is not RSA");
  if (ct.chunk_len != chunk_length(key.bits)) throw DomainError("rsa_decrypt: chunk length does not match key");
  detail::check_chunk_shape(ct.blocks.size(), ct.chunk_len, ct.last_len);

  Bytes out;
  out.reserve((ct.blocks.size() - 1) * ct.chunk_len + ct.last_len);
  for (std::size_t i = 0; i < ct.blocks.size(); ++i) {
    if (ct.blocks[i] >= key.n) throw DomainError("rsa_decrypt: block " + std::to_string(i) + " >= n");
    const bool last = i + 1 == ct.blocks.size();
    detail::append_chunk(out, mod_pow(ct.blocks[i], key.d, key.n), last ? ct.last_len : ct.chunk_len);
  }
  return out;
}

}  // namespace cloudbench
