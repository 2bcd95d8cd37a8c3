// MD5 (RFC 1321) and SHA-1 (FIPS 180-4) behind one streaming state.

#include "cloudbench/digest.hpp"

#include <algorithm>
#include <bit>

#include "cloudbench/error.hpp"

namespace cloudbench {

namespace {

constexpr std::array<std::uint32_t, 64> kMd5K = {
    0xd76aa478, 0xe8c7b756, 0x242070db, 0xc1bdceee, 0xf57c0faf, 0x4787c62a, 0xa8304613, 0xfd469501,
    0x698098d8, 0x8b44f7af, 0xffff5bb1, 0x895cd7be, 0x6b901122, 0xfd987193, 0xa679438e, 0x49b40821,
    0xf61e2562, 0xc040b340, 0x265e5a51, 0xe9b6c7aa, 0xd62f105d, 0x02441453, 0xd8a1e681, 0xe7d3fbc8,
    0x21e1cde6, 0xc33707d6, 0xf4d50d87, 0x455a14ed, 0xa9e3e905, 0xfcefa3f8, 0x676f02d9, 0x8d2a4c8a,
    0xfffa3942, 0x8771f681, 0x6d9d6122, 0xfde5380c, 0xa4beea44, 0x4bdecfa9, 0xf6bb4b60, 0xbebfbc70,
    0x289b7ec6, 0xeaa127fa, 0xd4ef3085, 0x04881d05, 0xd9d4d039, 0xe6db99e5, 0x1fa27cf8, 0xc4ac5665,
    0xf4292244, 0x432aff97, 0xab9423a7, 0xfc93a039, 0x655b59c3, 0x8f0ccc92, 0xffeff47d, 0x85845dd1,
    0x6fa87e4f, 0xfe2ce6e0, 0xa3014314, 0x4e0811a1, 0xf7537e82, 0xbd3af235, 0x2ad7d2bb, 0xeb86d391};

constexpr std::array<int, 64> kMd5Shift = {
    7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
    5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20,
    4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
    6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21};

void md5_compress(std::array<std::uint32_t, 5>& h, const std::uint8_t* block) {
  std::uint32_t m[16];
  for (int i = 0; i < 16; ++i) {
    m[i] = static_cast<std::uint32_t>(block[4 * i]) | (static_cast<std::uint32_t>(block[4 * i + 1]) << 8) |
           (static_cast<std::uint32_t>(block[4 * i + 2]) << 16) |
           (static_cast<std::uint32_t>(block[4 * i + 3]) << 24);
  }
  std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3];
  for (int i = 0; i < 64; ++i) {
    std::uint32_t f;
    int g;
    if (i < 16) {
      f = (b & c) | (~b & d);
      g = i;
    } else if (i < 32) {
      f = (d & b) | (~d & c);
      g = (5 * i + 1) % 16;
    } else if (i < 48) {
      f = b ^ c ^ d;
      g = (3 * i + 5) % 16;
    } else {
      f = c ^ (b | ~d);
      g = (7 * i) % 16;
    }
    const std::uint32_t rotated = std::rotl(a + f + kMd5K[i] + m[g], kMd5Shift[i]);
    a = d;
    d = c;
    c = b;
    b = b + rotated;
  }
  h[0] += a;
  h[1] += b;
  h[2] += c;
  h[3] += d;
}

void sha1_compress(std::array<std::uint32_t, 5>& h, const std::uint8_t* block) {
  std::uint32_t w[80];
  for (int i = 0; i < 16; ++i) {
    w[i] = (static_cast<std::uint32_t>(block[4 * i]) << 24) | (static_cast<std::uint32_t>(block[4 * i + 1]) << 16) |
           (static_cast<std::uint32_t>(block[4 * i + 2]) << 8) | static_cast<std::uint32_t>(block[4 * i + 3]);
  }
  for (int i = 16; i < 80; ++i) w[i] = std::rotl(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);

  std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
  for (int i = 0; i < 80; ++i) {
    std::uint32_t f, k;
    if (i < 20) {
      f = (b & c) | (~b & d);
      k = 0x5A827999;
    } else if (i < 40) {
      f = b ^ c ^ d;
      k = 0x6ED9EBA1;
    } else if (i < 60) {
      f = (b & c) | (b & d) | (c & d);
      k = 0x8F1BBCDC;
    } else {
      f = b ^ c ^ d;
      k = 0xCA62C1D6;
    }
    const std::uint32_t t = std::rotl(a, 5) + f + e + k + w[i];
    e = d;
    d = c;
    c = std::rotl(b, 30);
    b = a;
    a = t;
  }
  h[0] += a;
  h[1] += b;
  h[2] += c;
  h[3] += d;
  h[4] += e;
}

}  // namespace

std::string Digest::hex() const { return to_hex(bytes); }

HashState::HashState(HashAlgorithm algorithm) : algorithm_(algorithm) {
  if (algorithm_ == HashAlgorithm::Md5) {
    chain_ = {0x67452301, 0xefcdab89, 0x98badcfe, 0x10325476, 0};
  } else {
    chain_ = {0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0};
  }
}

void HashState::compress(const std::uint8_t* block) {
  if (algorithm_ == HashAlgorithm::Md5) {
    md5_compress(chain_, block);
  } else {
    sha1_compress(chain_, block);
  }
}

void HashState::update(std::span<const std::uint8_t> chunk) {
  if (finalized_) throw StateError("hash state already finalized");
  total_bytes_ += chunk.size();
  std::size_t pos = 0;
  if (buffered_ > 0) {
    const std::size_t take = std::min(chunk.size(), buffer_.size() - buffered_);
    std::copy_n(chunk.begin(), take, buffer_.begin() + buffered_);
    buffered_ += take;
    pos = take;
    if (buffered_ < buffer_.size()) return;
    compress(buffer_.data());
    buffered_ = 0;
  }
  for (; pos + 64 <= chunk.size(); pos += 64) compress(chunk.data() + pos);
  std::copy(chunk.begin() + pos, chunk.end(), buffer_.begin());
  buffered_ = chunk.size() - pos;
}

void HashState::update(std::string_view chunk) {
  update(std::span(reinterpret_cast<const std::uint8_t*>(chunk.data()), chunk.size()));
}

Digest HashState::finalize() {
  if (finalized_) throw StateError("hash state already finalized");
  const std::uint64_t bit_length = total_bytes_ * 8;
  const bool little_endian = algorithm_ == HashAlgorithm::Md5;

  std::array<std::uint8_t, 128> tail{};
  std::copy_n(buffer_.begin(), buffered_, tail.begin());
  tail[buffered_] = 0x80;
  const std::size_t tail_len = buffered_ < 56 ? 64 : 128;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto byte = static_cast<std::uint8_t>(bit_length >> (8 * i));
    tail[little_endian ? tail_len - 8 + i : tail_len - 1 - i] = byte;
  }
  for (std::size_t off = 0; off < tail_len; off += 64) compress(tail.data() + off);
  finalized_ = true;
  buffered_ = 0;

  Digest out{algorithm_, {}};
  const std::size_t words = digest_size(algorithm_) / 4;
  for (std::size_t w = 0; w < words; ++w) {
    for (std::size_t i = 0; i < 4; ++i) {
      const int shift = little_endian ? static_cast<int>(8 * i) : static_cast<int>(24 - 8 * i);
      out.bytes.push_back(static_cast<std::uint8_t>(chain_[w] >> shift));
    }
  }
  return out;
}

Digest hash(HashAlgorithm algorithm, std::span<const std::uint8_t> message) {
  HashState state(algorithm);
  state.update(message);
  return state.finalize();
}

Digest md5(std::span<const std::uint8_t> message) { return hash(HashAlgorithm::Md5, message); }

Digest md5(std::string_view message) {
  HashState state(HashAlgorithm::Md5);
  state.update(message);
  return state.finalize();
}

Digest sha1(std::span<const std::uint8_t> message) { return hash(HashAlgorithm::Sha1, message); }

Digest sha1(std::string_view message) {
  HashState state(HashAlgorithm::Sha1);
  state.update(message);
  return state.finalize();
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0F]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw DomainError("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw DomainError(std::string("invalid hex character '") + c + "'");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace cloudbench
