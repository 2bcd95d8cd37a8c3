#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cloudbench/natural.hpp"
#include "cloudbench/pubkey.hpp"
#include "cloudbench/rng.hpp"

namespace cloudbench {

enum class Algorithm { Aes, Des, Rsa, ElGamal, Md5, Sha1, Paillier, Benaloh };

inline constexpr std::array<Algorithm, 8> kAllAlgorithms = {
    Algorithm::Aes, Algorithm::Des,  Algorithm::Rsa,      Algorithm::ElGamal,
    Algorithm::Md5, Algorithm::Sha1, Algorithm::Paillier, Algorithm::Benaloh};

/// Upper-case tag used in reports and tables ("AES", "ELGAMAL", "SHA1", ...).
std::string_view algorithm_name(Algorithm algorithm);
/// Case-insensitive; also accepts "sha" for SHA-1. Throws DomainError.
Algorithm parse_algorithm(std::string_view name);

bool is_symmetric(Algorithm a);
bool is_asymmetric(Algorithm a);
bool is_hash(Algorithm a);
bool is_homomorphic(Algorithm a);

/// The published input-size sweep: 10-50 KB for ciphers and hashes,
/// 100-501 B for RSA/ElGamal, empty for the homomorphic schemes.
std::vector<std::size_t> sweep_sizes(Algorithm algorithm);
/// Default key size per algorithm (nullopt for hashes). AES 128, DES 56,
/// RSA/ElGamal 4096, Paillier/Benaloh 512.
std::optional<unsigned> default_key_bits(Algorithm algorithm);

inline constexpr std::size_t kSamplesPerRow = 5;

struct BenchCase {
  Algorithm algorithm = Algorithm::Aes;
  std::optional<std::size_t> input_size;  // bytes; absent for Paillier/Benaloh
  std::optional<unsigned> key_size;       // bits; absent for MD5/SHA1
  bool include_keygen = true;
  std::uint64_t seed = 42;

  friend bool operator==(const BenchCase&, const BenchCase&) = default;
};

/// Throws DomainError when the case is inconsistent (size on a homomorphic
/// case, key size on a hash, missing size, AES key other than 128...).
void validate_case(const BenchCase& bench_case);

struct BenchRow {
  BenchCase bench_case;
  std::array<std::int64_t, kSamplesPerRow> samples_ms{};
  std::int64_t average_ms = 0;
  /// Hex SHA-1 over the key material and plaintexts of every sample. Lets
  /// two runs be compared for determinism; not persisted in report files.
  std::string material_digest;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

/// Mean of nonnegative integers rounded half up to an integer.
/// Throws DomainError for an empty list.
std::int64_t round_half_up_mean(std::span<const std::int64_t> values);

/// Row with average_ms = round_half_up_mean(samples).
BenchRow make_row(const BenchCase& bench_case, const std::array<std::int64_t, kSamplesPerRow>& samples);

/// Mutable state shared by the cases of one run.
struct RunContext {
  /// ElGamal groups by size, reused across samples.
  std::map<std::size_t, ElGamalGroup> elgamal_groups;
  /// Generate a fresh ElGamal group inside every timed sample instead.
  bool fresh_elgamal_params = false;
  Natural benaloh_block_size = 257;
};

/// Group for `bits` from the cache; filled from the well-known MODP groups,
/// else generated with a generator seeded from (seed, bits).
const ElGamalGroup& cached_elgamal_group(RunContext& ctx, std::size_t bits, std::uint64_t seed);

/// Generator for a case's key material, derived from its seed, algorithm,
/// size and key size.
SeededRng case_rng(const BenchCase& bench_case);

/// The first `size` bytes of the SplitMix64 stream for `seed`.
std::vector<std::uint8_t> workload_bytes(std::uint64_t seed, std::size_t size);

/// Times kSamplesPerRow samples of the case on a monotonic clock. Each
/// sample's result is checked outside the timed region; a wrong result
/// throws IntegrityError.
BenchRow run_case(const BenchCase& bench_case, SeededRng& rng, RunContext& ctx);
BenchRow run_case(const BenchCase& bench_case, SeededRng& rng);

struct Report {
  std::string environment_label;
  std::map<std::string, std::string> host_metadata;
  std::string created_at;  // RFC 3339, UTC
  std::vector<BenchRow> rows;
  std::map<Algorithm, std::int64_t> per_algorithm_average_ms;
};

/// Groups rows by algorithm; per-algorithm average = round_half_up_mean of
/// the row averages. Throws DomainError for no rows.
Report aggregate_report(std::vector<BenchRow> rows, std::string environment_label);

std::string utc_timestamp_now();

/// Ratio with exactly two fractional digits, stored in hundredths.
struct SpeedUpRatio {
  std::int64_t hundredths = 0;
  std::string str() const;
  friend auto operator<=>(const SpeedUpRatio&, const SpeedUpRatio&) = default;
};

/// local / cloud truncated toward zero to two decimals.
/// Throws DomainError for cloud_avg_ms <= 0 or a negative local_avg_ms.
SpeedUpRatio speedup(std::int64_t local_avg_ms, std::int64_t cloud_avg_ms);

struct SpeedUpEntry {
  Algorithm algorithm;
  std::int64_t local_avg_ms;
  std::int64_t cloud_avg_ms;
  /// Absent when the cloud average is 0 ms (too fast to time).
  std::optional<SpeedUpRatio> ratio;
};

struct SpeedUpTable {
  std::string local_label;
  std::string cloud_label;
  std::vector<SpeedUpEntry> entries;
  std::vector<Algorithm> only_local;
  std::vector<Algorithm> only_cloud;
};

/// Ratios over the algorithms present in both reports. Throws DomainError
/// naming both algorithm sets when they are disjoint.
SpeedUpTable compare_reports(const Report& local, const Report& cloud);

}  // namespace cloudbench
