#pragma once

#include <string>
#include <vector>

#include "cloudbench/blockcipher.hpp"
#include "cloudbench/error.hpp"
#include "cloudbench/natural.hpp"

namespace cloudbench::detail {

struct Chunks {
  std::vector<Natural> values;
  std::size_t last_len = 0;
};

inline Chunks split_chunks(ByteView plaintext, std::size_t chunk_len) {
  if (plaintext.empty()) throw DomainError("plaintext must be nonempty");
  if (chunk_len == 0) throw DomainError("key too small for chunking");
  Chunks out;
  for (std::size_t off = 0; off < plaintext.size(); off += chunk_len) {
    const std::size_t len = std::min(chunk_len, plaintext.size() - off);
    out.values.push_back(Natural::from_bytes(plaintext.subspan(off, len)));
    out.last_len = len;
  }
  return out;
}

inline void check_chunk_shape(std::size_t chunks, std::size_t chunk_len, std::size_t last_len) {
  if (chunks == 0) throw DomainError("ciphertext has no blocks");
  if (last_len < 1 || last_len > chunk_len) {
    throw DomainError("last_len " + std::to_string(last_len) + " outside [1, " + std::to_string(chunk_len) + "]");
  }
}

/// Appends `value` as exactly `width` big-endian bytes.
inline void append_chunk(Bytes& out, const Natural& value, std::size_t width) {
  const auto bytes = value.to_bytes(width);
  out.insert(out.end(), bytes.begin(), bytes.end());
}

}  // namespace cloudbench::detail
