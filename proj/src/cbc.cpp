#include <string>

#include "cloudbench/blockcipher.hpp"
#include "cloudbench/error.hpp"

namespace cloudbench {

namespace {

struct Encryptor {
  std::uint8_t* block;
  void operator()(const AesKey128& k) const {
    const auto out = aes_encrypt_block(k, ByteView(block, kAesBlockSize));
    std::copy(out.begin(), out.end(), block);
  }
  void operator()(const DesKey& k) const {
    const auto out = des_encrypt_block(k, ByteView(block, kDesBlockSize));
    std::copy(out.begin(), out.end(), block);
  }
};

struct Decryptor {
  std::uint8_t* block;
  void operator()(const AesKey128& k) const {
    const auto out = aes_decrypt_block(k, ByteView(block, kAesBlockSize));
    std::copy(out.begin(), out.end(), block);
  }
  void operator()(const DesKey& k) const {
    const auto out = des_decrypt_block(k, ByteView(block, kDesBlockSize));
    std::copy(out.begin(), out.end(), block);
  }
};

void check_iv(std::size_t iv_size, std::size_t bs) {
  if (iv_size != bs) {
    throw DomainError("CBC iv must be " + std::to_string(bs) + " bytes, got " + std::to_string(iv_size));
  }
}

}  // namespace

std::size_t block_size(const BlockCipherKey& key) {
  return std::holds_alternative<AesKey128>(key) ? kAesBlockSize : kDesBlockSize;
}

CbcCiphertext cbc_encrypt(const BlockCipherKey& key, ByteView iv, ByteView plaintext) {
  const std::size_t bs = block_size(key);
  check_iv(iv.size(), bs);

  const std::size_t pad = bs - plaintext.size() % bs;
  CbcCiphertext ct;
  ct.iv.assign(iv.begin(), iv.end());
  ct.body.reserve(plaintext.size() + pad);
  ct.body.assign(plaintext.begin(), plaintext.end());
  ct.body.insert(ct.body.end(), pad, static_cast<std::uint8_t>(pad));

  const std::uint8_t* prev = ct.iv.data();
  for (std::size_t off = 0; off < ct.body.size(); off += bs) {
    std::uint8_t* block = ct.body.data() + off;
    for (std::size_t i = 0; i < bs; ++i) block[i] ^= prev[i];
    std::visit(Encryptor{block}, key);
    prev = block;
  }
  return ct;
}

Bytes cbc_decrypt(const BlockCipherKey& key, const CbcCiphertext& ct) {
  const std::size_t bs = block_size(key);
  check_iv(ct.iv.size(), bs);
  if (ct.body.empty() || ct.body.size() % bs != 0) {
    throw DomainError("CBC body length " + std::to_string(ct.body.size()) +
                      " is not a positive multiple of " + std::to_string(bs));
  }

  Bytes out = ct.body;
  // Walk backwards so each block can still XOR with the untouched previous ciphertext block.
  for (std::size_t off = out.size(); off > 0;) {
    off -= bs;
    std::uint8_t* block = out.data() + off;
    std::visit(Decryptor{block}, key);
    const std::uint8_t* prev = off == 0 ? ct.iv.data() : ct.body.data() + off - bs;
    for (std::size_t i = 0; i < bs; ++i) block[i] ^= prev[i];
  }

  const std::uint8_t pad = out.back();
  if (pad == 0 || pad > bs) throw PaddingError("invalid PKCS#7 pad value " + std::to_string(pad));
  for (std::size_t i = out.size() - pad; i < out.size(); ++i) {
    if (out[i] != pad) throw PaddingError("inconsistent PKCS#7 padding");
  }
  out.resize(out.size() - pad);
  return out;
}

}  // namespace cloudbench
