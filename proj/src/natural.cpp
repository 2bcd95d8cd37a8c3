#include "cloudbench/natural.hpp"

#include <ostream>

#include "cloudbench/error.hpp"

namespace cloudbench {

namespace {

bool all_digits(std::string_view text, int base) {
  if (text.empty()) return false;
  for (char c : text) {
    const bool dec = c >= '0' && c <= '9';
    const bool hex = (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
    if (!(dec || (base == 16 && hex))) return false;
  }
  return true;
}

}  // namespace

Natural::Natural(std::uint64_t value) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 required");
  value_ = static_cast<unsigned long>(value);
}

Natural::Natural(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw DomainError("negative value for Natural");
}

Natural Natural::from_hex(std::string_view hex) {
  if (!all_digits(hex, 16)) throw DomainError("invalid hexadecimal integer '" + std::string(hex) + "'");
  return Natural(mpz_class(std::string(hex), 16));
}

Natural Natural::from_decimal(std::string_view digits) {
  if (!all_digits(digits, 10)) throw DomainError("invalid decimal integer '" + std::string(digits) + "'");
  return Natural(mpz_class(std::string(digits), 10));
}

Natural Natural::from_bytes(std::span<const std::uint8_t> bytes) {
  mpz_class v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return Natural(std::move(v));
}

std::vector<std::uint8_t> Natural::to_bytes() const {
  if (is_zero()) return {};
  std::vector<std::uint8_t> out((bit_length() + 7) / 8);
  std::size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, value_.get_mpz_t());
  out.resize(written);
  return out;
}

std::vector<std::uint8_t> Natural::to_bytes(std::size_t width) const {
  auto minimal = to_bytes();
  if (minimal.size() > width) {
    throw DomainError("value needs " + std::to_string(minimal.size()) + " bytes, width is " +
                      std::to_string(width));
  }
  std::vector<std::uint8_t> out(width - minimal.size(), 0);
  out.insert(out.end(), minimal.begin(), minimal.end());
  return out;
}

std::string Natural::to_hex() const { return value_.get_str(16); }

std::string Natural::to_decimal() const { return value_.get_str(10); }

std::size_t Natural::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool Natural::test_bit(std::size_t index) const {
  return mpz_tstbit(value_.get_mpz_t(), index) != 0;
}

std::uint64_t Natural::to_u64() const {
  if (bit_length() > 64) throw DomainError("value does not fit in 64 bits");
  return mpz_get_ui(value_.get_mpz_t());
}

std::uint64_t Natural::mod_u64(std::uint64_t divisor) const {
  if (divisor == 0) throw DomainError("remainder by zero");
  return mpz_fdiv_ui(value_.get_mpz_t(), divisor);
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (cmp(value_, rhs.value_) < 0) throw DomainError("natural subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpz_tdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw DomainError("remainder by zero");
  mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator<<=(std::size_t bits) {
  mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
  return *this;
}

Natural& Natural::operator>>=(std::size_t bits) {
  mpz_fdiv_q_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
  return *this;
}

std::size_t Natural::hash() const {
  // FNV-1a over the limbs.
  std::size_t h = 1469598103934665603ULL;
  const mpz_srcptr z = value_.get_mpz_t();
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i));
    h *= 1099511628211ULL;
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_decimal(); }

}  // namespace cloudbench
