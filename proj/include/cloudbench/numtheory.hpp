#pragma once

#include <cstddef>

#include "cloudbench/error.hpp"
#include "cloudbench/natural.hpp"
#include "cloudbench/rng.hpp"

namespace cloudbench {

/// Thrown by mod_inverse; carries gcd(a, modulus).
class NotInvertibleError : public Error {
public:
  NotInvertibleError(const std::string& what, Natural gcd) : Error(what), gcd_(std::move(gcd)) {}
  const char* name() const noexcept override { return "NotInvertibleError"; }
  const Natural& gcd() const { return gcd_; }

private:
  Natural gcd_;
};

/// Miller-Rabin rounds used for every generated prime (error < 2^-80).
inline constexpr std::size_t kKeygenPrimalityRounds = 40;

/// base^exponent mod modulus by left-to-right square-and-multiply.
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

Natural gcd(Natural a, Natural b);
Natural lcm(const Natural& a, const Natural& b);

/// x in (0, modulus) with a*x = 1 (mod modulus), via extended Euclid.
Natural mod_inverse(const Natural& a, const Natural& modulus);

/// Trial division by the primes up to 1000, then `rounds` Miller-Rabin rounds
/// with bases drawn from `rng`. false means certainly composite.
bool is_probable_prime(const Natural& n, std::size_t rounds, SeededRng& rng);
/// Same test with the bases drawn from a generator seeded by n itself.
bool is_probable_prime(const Natural& n, std::size_t rounds);

/// Random prime with exactly `bits` significant bits: an odd candidate with
/// the top bit forced, then an increment-by-2 search.
Natural gen_prime(std::size_t bits, SeededRng& rng);

/// Safe prime p = 2q + 1 (q prime) with exactly `bits` bits.
Natural gen_safe_prime(std::size_t bits, SeededRng& rng);

/// Smallest m in [0, order_bound) with base^m = target (mod modulus), by
/// baby-step giant-step. base must be a unit mod modulus. Throws
/// NotFoundError when no such m exists.
Natural discrete_log_bsgs(const Natural& base, const Natural& target, const Natural& modulus,
                          std::size_t order_bound);

/// The primes below 1000, ascending.
std::span<const std::uint32_t> small_primes();

}  // namespace cloudbench
