// AES-128 (FIPS-197), byte-oriented.

#include <string>

#include "cloudbench/blockcipher.hpp"
#include "cloudbench/error.hpp"

namespace cloudbench {

namespace {

using Block = std::array<std::uint8_t, 16>;

constexpr std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1B : 0x00));
}

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t product = 0;
  while (b != 0) {
    if (b & 1) product ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return product;
}

constexpr std::uint8_t rotl8(std::uint8_t x, int s) {
  return static_cast<std::uint8_t>((x << s) | (x >> (8 - s)));
}

// S-box from the multiplicative inverse in GF(2^8) followed by the affine map.
constexpr std::array<std::uint8_t, 256> kSbox = [] {
  std::array<std::uint8_t, 256> box{};
  for (int x = 0; x < 256; ++x) {
    std::uint8_t inv = 0;
    if (x != 0) {
      for (int y = 1; y < 256; ++y) {
        if (gf_mul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) == 1) {
          inv = static_cast<std::uint8_t>(y);
          break;
        }
      }
    }
    box[x] = static_cast<std::uint8_t>(inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^ rotl8(inv, 3) ^
                                       rotl8(inv, 4) ^ 0x63);
  }
  return box;
}();

constexpr std::array<std::uint8_t, 256> kInvSbox = [] {
  std::array<std::uint8_t, 256> box{};
  for (int x = 0; x < 256; ++x) box[kSbox[x]] = static_cast<std::uint8_t>(x);
  return box;
}();

static_assert(kSbox[0x00] == 0x63 && kSbox[0x53] == 0xED && kSbox[0xFF] == 0x16);

void add_round_key(Block& s, const Block& rk) {
  for (std::size_t i = 0; i < 16; ++i) s[i] ^= rk[i];
}

void sub_bytes(Block& s) {
  for (auto& b : s) b = kSbox[b];
}

void inv_sub_bytes(Block& s) {
  for (auto& b : s) b = kInvSbox[b];
}

// State is column-major: s[4*c + r].
void shift_rows(Block& s) {
  Block t = s;
  for (int r = 1; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) s[4 * c + r] = t[4 * ((c + r) % 4) + r];
  }
}

void inv_shift_rows(Block& s) {
  Block t = s;
  for (int r = 1; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) s[4 * ((c + r) % 4) + r] = t[4 * c + r];
  }
}

void mix_columns(Block& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    const std::uint8_t all = a0 ^ a1 ^ a2 ^ a3;
    col[0] ^= all ^ xtime(a0 ^ a1);
    col[1] ^= all ^ xtime(a1 ^ a2);
    col[2] ^= all ^ xtime(a2 ^ a3);
    col[3] ^= all ^ xtime(a3 ^ a0);
  }
}

void inv_mix_columns(Block& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = gf_mul(a0, 14) ^ gf_mul(a1, 11) ^ gf_mul(a2, 13) ^ gf_mul(a3, 9);
    col[1] = gf_mul(a0, 9) ^ gf_mul(a1, 14) ^ gf_mul(a2, 11) ^ gf_mul(a3, 13);
    col[2] = gf_mul(a0, 13) ^ gf_mul(a1, 9) ^ gf_mul(a2, 14) ^ gf_mul(a3, 11);
    col[3] = gf_mul(a0, 11) ^ gf_mul(a1, 13) ^ gf_mul(a2, 9) ^ gf_mul(a3, 14);
  }
}

Block load_block(ByteView block) {
  if (block.size() != kAesBlockSize) {
    throw DomainError("AES block must be 16 bytes, got " + std::to_string(block.size()));
  }
  Block s;
  std::copy(block.begin(), block.end(), s.begin());
  return s;
}

}  // namespace

AesKey128::AesKey128(ByteView key) {
  if (key.size() != 16) throw DomainError("AES-128 key must be 16 bytes, got " + std::to_string(key.size()));
  std::copy(key.begin(), key.end(), key_.begin());

  std::array<std::uint8_t, 176> w{};
  std::copy(key.begin(), key.end(), w.begin());
  std::uint8_t rcon = 0x01;
  for (std::size_t i = 16; i < w.size(); i += 4) {
    std::array<std::uint8_t, 4> t = {w[i - 4], w[i - 3], w[i - 2], w[i - 1]};
    if (i % 16 == 0) {
      // RotWord, SubWord, Rcon.
      t = {static_cast<std::uint8_t>(kSbox[t[1]] ^ rcon), kSbox[t[2]], kSbox[t[3]], kSbox[t[0]]};
      rcon = xtime(rcon);
    }
    for (std::size_t j = 0; j < 4; ++j) w[i + j] = w[i - 16 + j] ^ t[j];
  }
  for (std::size_t r = 0; r < 11; ++r) {
    std::copy(w.begin() + 16 * r, w.begin() + 16 * (r + 1), round_keys_[r].begin());
  }
}

std::array<std::uint8_t, 16> aes_encrypt_block(const AesKey128& key, ByteView block) {
  Block s = load_block(block);
  const auto& rk = key.round_keys();
  add_round_key(s, rk[0]);
  for (std::size_t round = 1; round < 10; ++round) {
    sub_bytes(s);
    shift_rows(s);
    mix_columns(s);
    add_round_key(s, rk[round]);
  }
  sub_bytes(s);
  shift_rows(s);
  add_round_key(s, rk[10]);
  return s;
}

std::array<std::uint8_t, 16> aes_decrypt_block(const AesKey128& key, ByteView block) {
  Block s = load_block(block);
  const auto& rk = key.round_keys();
  add_round_key(s, rk[10]);
  for (std::size_t round = 9; round >= 1; --round) {
    inv_shift_rows(s);
    inv_sub_bytes(s);
    add_round_key(s, rk[round]);
    inv_mix_columns(s);
  }
  inv_shift_rows(s);
  inv_sub_bytes(s);
  add_round_key(s, rk[0]);
  return s;
}

}  // namespace cloudbench
