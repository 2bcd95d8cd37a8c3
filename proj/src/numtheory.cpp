#include "cloudbench/numtheory.hpp"

#include <array>
#include <cmath>
#include <unordered_map>

namespace cloudbench {

namespace {

constexpr std::array<std::uint32_t, 168> kSmallPrimes = [] {
  std::array<std::uint32_t, 168> primes{};
  std::size_t count = 0;
  for (std::uint32_t n = 2; n < 1000; ++n) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes[count++] = n;
  }
  return primes;
}();

// Returns true when n is decided by trial division; `prime` holds the verdict.
bool trial_division(const Natural& n, bool& prime) {
  if (n < 2) {
    prime = false;
    return true;
  }
  for (std::uint32_t p : kSmallPrimes) {
    if (n == p) {
      prime = true;
      return true;
    }
    if (n.mod_u64(p) == 0) {
      prime = false;
      return true;
    }
  }
  // No factor below 1000 and n < 1000^2 means n is prime.
  if (n < Natural(1'000'000)) {
    prime = true;
    return true;
  }
  return false;
}

bool miller_rabin_round(const Natural& n, const Natural& n_minus_1, const Natural& odd_part,
                        std::size_t twos, const Natural& base) {
  Natural x = mod_pow(base, odd_part, n);
  if (x == 1 || x == n_minus_1) return true;
  for (std::size_t i = 1; i < twos; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

Natural random_odd_with_top_bit(std::size_t bits, SeededRng& rng) {
  Natural candidate = rng.random_bits(bits);
  const Natural top = Natural(1) << (bits - 1);
  if (!candidate.test_bit(bits - 1)) candidate += top;
  if (!candidate.is_odd()) candidate += 1;
  return candidate;
}

}  // namespace

std::span<const std::uint32_t> small_primes() { return kSmallPrimes; }

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
  if (modulus.is_zero()) throw DomainError("mod_pow: modulus must be >= 1");
  if (modulus == 1) return Natural{};

  const mpz_srcptr m = modulus.raw().get_mpz_t();
  mpz_class b;
  mpz_tdiv_r(b.get_mpz_t(), base.raw().get_mpz_t(), m);
  mpz_class acc = 1;
  for (std::size_t i = exponent.bit_length(); i-- > 0;) {
    mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), acc.get_mpz_t());
    mpz_tdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m);
    if (exponent.test_bit(i)) {
      mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), b.get_mpz_t());
      mpz_tdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m);
    }
  }
  return Natural(std::move(acc));
}

Natural gcd(Natural a, Natural b) {
  while (!b.is_zero()) {
    Natural r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Natural lcm(const Natural& a, const Natural& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("lcm: arguments must be positive");
  return a / gcd(a, b) * b;
}

Natural mod_inverse(const Natural& a, const Natural& modulus) {
  if (modulus < 2) throw DomainError("mod_inverse: modulus must be > 1");
  // Extended Euclid tracking only the coefficient of a, kept signed in mpz.
  mpz_class old_r = (a % modulus).raw();
  mpz_class r = modulus.raw();
  mpz_class old_s = 1;
  mpz_class s = 0;
  while (r != 0) {
    mpz_class q = old_r / r;
    mpz_class tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    Natural g(old_r);
    throw NotInvertibleError("mod_inverse: gcd(" + a.to_decimal() + ", " + modulus.to_decimal() +
                                 ") = " + g.to_decimal(),
                             g);
  }
  mpz_class x = old_s % modulus.raw();
  if (x < 0) x += modulus.raw();
  return Natural(std::move(x));
}

bool is_probable_prime(const Natural& n, std::size_t rounds, SeededRng& rng) {
  if (rounds == 0) throw DomainError("is_probable_prime: rounds must be >= 1");
  bool verdict = false;
  if (trial_division(n, verdict)) return verdict;

  const Natural n_minus_1 = n - 1;
  Natural odd_part = n_minus_1;
  std::size_t twos = 0;
  while (!odd_part.is_odd()) {
    odd_part >>= 1;
    ++twos;
  }
  const Natural low(2);
  const Natural high = n - 2;
  for (std::size_t i = 0; i < rounds; ++i) {
    if (!miller_rabin_round(n, n_minus_1, odd_part, twos, rng.in_range(low, high))) return false;
  }
  return true;
}

bool is_probable_prime(const Natural& n, std::size_t rounds) {
  SeededRng rng(n.is_zero() ? 0 : static_cast<std::uint64_t>(n.hash()));
  return is_probable_prime(n, rounds, rng);
}

Natural gen_prime(std::size_t bits, SeededRng& rng) {
  if (bits < 8) throw DomainError("gen_prime: bits must be >= 8");
  const Natural limit = Natural(1) << bits;
  for (;;) {
    Natural candidate = random_odd_with_top_bit(bits, rng);
    while (candidate < limit) {
      if (is_probable_prime(candidate, kKeygenPrimalityRounds, rng)) return candidate;
      candidate += 2;
    }
  }
}

Natural gen_safe_prime(std::size_t bits, SeededRng& rng) {
  if (bits < 8) throw DomainError("gen_safe_prime: bits must be >= 8");
  const Natural limit = Natural(1) << (bits - 1);
  for (;;) {
    // q has bits-1 bits, so p = 2q + 1 has exactly `bits` bits.
    Natural q = random_odd_with_top_bit(bits - 1, rng);
    std::array<std::uint32_t, kSmallPrimes.size()> residues{};
    for (std::size_t i = 0; i < kSmallPrimes.size(); ++i) residues[i] = static_cast<std::uint32_t>(q.mod_u64(kSmallPrimes[i]));

    for (; q < limit; q += 2) {
      // Sieve: reject when q or 2q + 1 has a factor below 1000.
      bool survives = true;
      for (std::size_t i = 1; i < kSmallPrimes.size(); ++i) {
        const std::uint32_t sp = kSmallPrimes[i];
        const std::uint32_t rq = residues[i];
        if ((rq == 0 && q != sp) || (2 * rq + 1) % sp == 0) {
          survives = false;
          break;
        }
      }
      if (survives) {
        const Natural p = 2 * q + 1;
        // Cheap base-2 screen on both before the full test.
        if (mod_pow(2, q - 1, q) == 1 && mod_pow(2, p - 1, p) == 1 &&
            is_probable_prime(q, kKeygenPrimalityRounds, rng) &&
            is_probable_prime(p, kKeygenPrimalityRounds, rng)) {
          return p;
        }
      }
      for (std::size_t i = 0; i < kSmallPrimes.size(); ++i) {
        residues[i] = (residues[i] + 2) % kSmallPrimes[i];
      }
    }
  }
}

Natural discrete_log_bsgs(const Natural& base, const Natural& target, const Natural& modulus,
                          std::size_t order_bound) {
  if (modulus.is_zero()) throw DomainError("discrete_log_bsgs: modulus must be >= 1");
  if (order_bound == 0) throw NotFoundError("discrete_log_bsgs: empty exponent range");
  const Natural t = target % modulus;
  const auto steps = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(order_bound))));

  // Baby steps: base^j for j in [0, steps), keeping the smallest j per value.
  std::unordered_map<Natural, std::size_t> table;
  table.reserve(steps);
  Natural power = Natural(1) % modulus;
  const Natural b = base % modulus;
  for (std::size_t j = 0; j < steps; ++j) {
    table.emplace(power, j);
    power = (power * b) % modulus;
  }

  Natural stride;
  try {
    stride = mod_inverse(mod_pow(b, steps, modulus), modulus);
  } catch (const NotInvertibleError&) {
    throw DomainError("discrete_log_bsgs: base is not a unit modulo the modulus");
  }

  Natural gamma = t;
  for (std::size_t i = 0; i * steps < order_bound; ++i) {
    if (auto hit = table.find(gamma); hit != table.end()) {
      const std::size_t m = i * steps + hit->second;
      if (m < order_bound) return Natural(m);
    }
    gamma = (gamma * stride) % modulus;
  }
  throw NotFoundError("discrete_log_bsgs: no exponent below " + std::to_string(order_bound));
}

}  // namespace cloudbench
