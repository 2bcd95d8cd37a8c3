#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cloudbench {

/// Arbitrary-precision nonnegative integer.
///
/// Every operation that would produce a negative value (a - b with b > a)
/// throws DomainError instead, so a Natural is never negative. Division and
/// remainder by zero also throw DomainError.
class Natural {
public:
  Natural() = default;
  Natural(std::uint64_t value);  // NOLINT(google-explicit-constructor)
  /// Throws DomainError for a negative value.
  explicit Natural(mpz_class value);

  static Natural from_hex(std::string_view hex);
  static Natural from_decimal(std::string_view digits);
  /// Big-endian byte interpretation; leading zero bytes are allowed.
  static Natural from_bytes(std::span<const std::uint8_t> bytes);

  /// Minimal big-endian encoding (empty for zero).
  std::vector<std::uint8_t> to_bytes() const;
  /// Big-endian encoding left-padded to exactly `width` bytes.
  /// Throws DomainError if the value needs more than `width` bytes.
  std::vector<std::uint8_t> to_bytes(std::size_t width) const;
  std::string to_hex() const;  // lowercase, "0" for zero
  std::string to_decimal() const;

  std::size_t bit_length() const;
  bool test_bit(std::size_t index) const;
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  /// Throws DomainError if the value does not fit in 64 bits.
  std::uint64_t to_u64() const;
  /// Remainder by a small nonzero divisor.
  std::uint64_t mod_u64(std::uint64_t divisor) const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);
  Natural& operator<<=(std::size_t bits);
  Natural& operator>>=(std::size_t bits);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
  friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }
  friend Natural operator<<(Natural lhs, std::size_t bits) { return lhs <<= bits; }
  friend Natural operator>>(Natural lhs, std::size_t bits) { return lhs >>= bits; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpz_class& raw() const { return value_; }
  std::size_t hash() const;

private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

}  // namespace cloudbench

template <>
struct std::hash<cloudbench::Natural> {
  std::size_t operator()(const cloudbench::Natural& n) const noexcept { return n.hash(); }
};
