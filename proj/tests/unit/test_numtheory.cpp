#include <doctest.h>

#include <cstdint>

#include "cloudbench/error.hpp"
#include "cloudbench/natural.hpp"
#include "cloudbench/numtheory.hpp"
#include "cloudbench/rng.hpp"

using namespace cloudbench;

namespace {

std::uint64_t naive_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = (r * (b % m)) % m;
  return r;
}

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("numtheory") {

TEST_CASE("natural arithmetic and conversions") {
  const Natural a = Natural::from_hex("ffffffffffffffffff");
  CHECK(a.bit_length() == 72);
  CHECK((a + 1).to_hex() == "1000000000000000000");
  CHECK(Natural::from_decimal("1000000000000000000000").to_decimal() == "1000000000000000000000");
  CHECK(Natural(0).to_bytes().empty());
  CHECK(Natural(258).to_bytes(4) == std::vector<std::uint8_t>{0, 0, 1, 2});
  CHECK(Natural::from_bytes(std::vector<std::uint8_t>{1, 2}) == Natural(258));
  CHECK_THROWS_AS(Natural(258).to_bytes(1), DomainError);
  CHECK_THROWS_AS(Natural(3) - Natural(4), DomainError);
  CHECK_THROWS_AS(Natural(3) / Natural(0), DomainError);
  CHECK(Natural(17) % Natural(5) == Natural(2));
  const Natural shifted = (Natural(1) << 70) >> 69;
  CHECK(shifted == Natural(2));
}

TEST_CASE("mod_pow") {
  CHECK(mod_pow(4, 13, 497) == Natural(445));
  CHECK(mod_pow(123, 0, 7) == Natural(1));
  CHECK(mod_pow(123, 1, 7) == Natural(123 % 7));
  CHECK(mod_pow(5, 3, 1) == Natural(0));
  CHECK_THROWS_AS(mod_pow(2, 3, 0), DomainError);
  for (std::uint64_t b = 0; b < 20; ++b)
    for (std::uint64_t e = 0; e < 30; e += 3)
      for (std::uint64_t m : {2u, 7u, 97u, 1000u}) CHECK(mod_pow(b, e, m) == Natural(naive_pow(b, e, m)));
}

TEST_CASE("gcd, lcm, inverse") {
  CHECK(gcd(12, 18) == Natural(6));
  CHECK(gcd(42, 0) == Natural(42));
  CHECK(gcd(0, 0) == Natural(0));
  CHECK(gcd(7919, 7907) == Natural(1));
  CHECK(lcm(2, 4) == Natural(4));
  CHECK(lcm(3, 5) == Natural(15));
  CHECK(mod_inverse(3, 11) == Natural(4));
  CHECK(mod_inverse(1, 97) == Natural(1));
  CHECK_THROWS_AS(mod_inverse(6, 9), NotInvertibleError);
  try {
    mod_inverse(6, 9);
  } catch (const NotInvertibleError& e) {
    CHECK(e.gcd() == Natural(3));
  }
  for (std::uint64_t a = 1; a < 101; ++a) CHECK((mod_inverse(a, 101) * a) % Natural(101) == Natural(1));
}

TEST_CASE("primality") {
  CHECK_FALSE(is_probable_prime(561, 20));
  CHECK(is_probable_prime(2, 20));
  CHECK(is_probable_prime(97, 20));
  CHECK_FALSE(is_probable_prime(0, 20));
  CHECK_FALSE(is_probable_prime(1, 20));
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_probable_prime(n, 10) == trial_division_prime(n));
  // Carmichael numbers and a strong pseudoprime to base 2.
  for (std::uint64_t n : {1105u, 1729u, 2465u, 2821u, 6601u, 8911u, 2047u, 3215031751u})
    CHECK_FALSE(is_probable_prime(n, 20));
  CHECK(is_probable_prime(Natural::from_decimal("170141183460469231731687303715884105727"), 40));  // 2^127-1
}

TEST_CASE("gen_prime") {
  SeededRng rng(1);
  const Natural p = gen_prime(8, rng);
  CHECK(p >= Natural(128));
  CHECK(p <= Natural(255));
  CHECK(trial_division_prime(p.to_u64()));

  SeededRng a(5), b(5);
  CHECK(gen_prime(128, a) == gen_prime(128, b));

  SeededRng big(11);
  CHECK(gen_prime(512, big).bit_length() == 512);
  SeededRng tiny(1);
  CHECK_THROWS_AS(gen_prime(4, tiny), DomainError);
}

TEST_CASE("gen_safe_prime") {
  SeededRng rng(3);
  const Natural p = gen_safe_prime(64, rng);
  CHECK(p.bit_length() == 64);
  CHECK(trial_division_prime((p - 1).to_u64() / 2));
  CHECK(is_probable_prime(p, 40));
}

TEST_CASE("discrete_log_bsgs") {
  CHECK(discrete_log_bsgs(2, 8, 11, 10) == Natural(3));
  CHECK(discrete_log_bsgs(2, 7, 11, 10) == Natural(7));
  CHECK(discrete_log_bsgs(5, 1, 23, 22) == Natural(0));
  for (std::uint64_t m = 0; m < 1018; ++m)
    CHECK(discrete_log_bsgs(2, mod_pow(2, m, 1019), 1019, 1018) == Natural(m));
  // 3 is a quadratic residue mod 11, so 2 is never reached.
  CHECK_THROWS_AS(discrete_log_bsgs(3, 2, 11, 10), NotFoundError);
  CHECK_THROWS_AS(discrete_log_bsgs(6, 2, 9, 10), DomainError);
}

}
