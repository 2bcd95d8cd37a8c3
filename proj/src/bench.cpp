#include "cloudbench/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>

#include "cloudbench/blockcipher.hpp"
#include "cloudbench/digest.hpp"
#include "cloudbench/error.hpp"
#include "cloudbench/homomorphic.hpp"

namespace cloudbench {

namespace {

using Clock = std::chrono::steady_clock;
using Samples = std::array<std::int64_t, kSamplesPerRow>;

std::uint64_t mix(std::uint64_t state, std::uint64_t value) {
  SeededRng rng(state ^ value);
  return rng.next_u64();
}

void absorb(HashState& h, const Natural& value) {
  const auto bytes = value.to_bytes();
  const auto size = static_cast<std::uint32_t>(bytes.size());
  const std::uint8_t len[4] = {static_cast<std::uint8_t>(size >> 24), static_cast<std::uint8_t>(size >> 16),
                               static_cast<std::uint8_t>(size >> 8), static_cast<std::uint8_t>(size)};
  h.update(std::span<const std::uint8_t>(len));
  h.update(bytes);
}

// One sample = prepare() untimed, timed() on the monotonic clock, verify()
// untimed. Durations are truncated to whole milliseconds.
template <typename Prepare, typename Timed, typename Verify>
Samples time_samples(Prepare&& prepare, Timed&& timed, Verify&& verify) {
  Samples samples{};
  for (std::size_t i = 0; i < kSamplesPerRow; ++i) {
    prepare();
    const auto start = Clock::now();
    timed();
    const auto stop = Clock::now();
    verify();
    samples[i] = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  }
  return samples;
}

[[noreturn]] void integrity_failure(const BenchCase& c, const std::string& detail) {
  throw IntegrityError(std::string(algorithm_name(c.algorithm)) + " sample failed verification: " + detail);
}

Samples run_block_cipher(const BenchCase& c, SeededRng& rng, HashState& material) {
  const auto workload = workload_bytes(c.seed, *c.input_size);
  const bool aes = c.algorithm == Algorithm::Aes;
  const std::size_t key_len = aes ? 16 : 8;
  const std::size_t bs = aes ? kAesBlockSize : kDesBlockSize;
  material.update(workload);

  Bytes key_bytes;
  Bytes iv;
  Bytes recovered;
  return time_samples(
      [&] {
        key_bytes = rng.bytes(key_len);
        iv = rng.bytes(bs);
        material.update(key_bytes);
        material.update(iv);
      },
      [&] {
        const BlockCipherKey key = aes ? BlockCipherKey(AesKey128(key_bytes)) : BlockCipherKey(DesKey(key_bytes));
        const auto ct = cbc_encrypt(key, iv, workload);
        recovered = cbc_decrypt(key, ct);
      },
      [&] {
        if (recovered != workload) integrity_failure(c, "CBC round trip mismatch");
      });
}

Samples run_rsa(const BenchCase& c, SeededRng& rng, HashState& material) {
  const auto workload = workload_bytes(c.seed, *c.input_size);
  const std::size_t bits = *c.key_size;
  material.update(workload);

  std::optional<RsaKeyPair> fixed_key;
  if (!c.include_keygen) fixed_key = rsa_keygen(bits, rng);
  RsaKeyPair key;
  Bytes recovered;
  return time_samples(
      [] {},
      [&] {
        key = fixed_key ? *fixed_key : rsa_keygen(bits, rng);
        const auto ct = rsa_encrypt(key.public_key(), workload);
        recovered = rsa_decrypt(key, ct);
      },
      [&] {
        absorb(material, key.n);
        absorb(material, key.e);
        absorb(material, key.d);
        if (recovered != workload) integrity_failure(c, "RSA round trip mismatch");
      });
}

Samples run_elgamal(const BenchCase& c, SeededRng& rng, RunContext& ctx, HashState& material) {
  const auto workload = workload_bytes(c.seed, *c.input_size);
  const std::size_t bits = *c.key_size;
  material.update(workload);

  std::optional<ElGamalGroup> group;
  if (!ctx.fresh_elgamal_params) group = cached_elgamal_group(ctx, bits, c.seed);
  std::optional<ElGamalKeyPair> fixed_key;
  if (!c.include_keygen) fixed_key = elgamal_keygen(bits, rng, group);
  ElGamalKeyPair key;
  Bytes recovered;
  return time_samples(
      [] {},
      [&] {
        key = fixed_key ? *fixed_key : elgamal_keygen(bits, rng, group);
        const auto ct = elgamal_encrypt(key.public_key(), workload, rng);
        recovered = elgamal_decrypt(key, ct);
      },
      [&] {
        absorb(material, key.p);
        absorb(material, key.g);
        absorb(material, key.x);
        if (recovered != workload) integrity_failure(c, "ElGamal round trip mismatch");
      });
}

Samples run_hash(const BenchCase& c, HashState& material) {
  const auto workload = workload_bytes(c.seed, *c.input_size);
  const HashAlgorithm algorithm = c.algorithm == Algorithm::Md5 ? HashAlgorithm::Md5 : HashAlgorithm::Sha1;
  material.update(workload);

  Digest digest{algorithm, {}};
  return time_samples(
      [] {},
      [&] { digest = hash(algorithm, workload); },
      [&] {
        // Cross-check against a streamed pass in odd-sized pieces.
        HashState streamed(algorithm);
        for (std::size_t off = 0; off < workload.size(); off += 1000) {
          streamed.update(std::span(workload).subspan(off, std::min<std::size_t>(1000, workload.size() - off)));
        }
        if (digest.bytes.size() != digest_size(algorithm) || streamed.finalize() != digest) {
          integrity_failure(c, "digest mismatch between one-shot and streamed passes");
        }
      });
}

// Two messages from the workload stream, one key-width each.
std::pair<Natural, Natural> homomorphic_messages(const BenchCase& c) {
  const std::size_t width = (*c.key_size + 7) / 8;
  const auto raw = workload_bytes(c.seed, 2 * width);
  return {Natural::from_bytes(std::span(raw).first(width)), Natural::from_bytes(std::span(raw).subspan(width))};
}

Samples run_paillier(const BenchCase& c, SeededRng& rng, HashState& material) {
  const auto [w1, w2] = homomorphic_messages(c);
  const std::size_t bits = *c.key_size;
  std::optional<PaillierKeyPair> fixed_key;
  if (!c.include_keygen) fixed_key = paillier_keygen(bits, rng);

  PaillierKeyPair key;
  Natural m1, m2, sum;
  return time_samples(
      [] {},
      [&] {
        key = fixed_key ? *fixed_key : paillier_keygen(bits, rng);
        const auto pub = key.public_key();
        m1 = w1 % key.n;
        m2 = w2 % key.n;
        const auto c1 = paillier_encrypt(pub, m1, rng);
        const auto c2 = paillier_encrypt(pub, m2, rng);
        sum = paillier_decrypt(key, paillier_add(pub, c1, c2));
      },
      [&] {
        absorb(material, key.n);
        absorb(material, key.lambda);
        absorb(material, m1);
        absorb(material, m2);
        if (sum != (m1 + m2) % key.n) integrity_failure(c, "Paillier homomorphic sum mismatch");
      });
}

Samples run_benaloh(const BenchCase& c, SeededRng& rng, RunContext& ctx, HashState& material) {
  const auto [w1, w2] = homomorphic_messages(c);
  const std::size_t bits = *c.key_size;
  const Natural r = ctx.benaloh_block_size;
  std::optional<BenalohKeyPair> fixed_key;
  if (!c.include_keygen) fixed_key = benaloh_keygen(r, bits, rng);

  BenalohKeyPair key;
  Natural m1, m2, sum;
  return time_samples(
      [] {},
      [&] {
        key = fixed_key ? *fixed_key : benaloh_keygen(r, bits, rng);
        const auto pub = key.public_key();
        m1 = w1 % r;
        m2 = w2 % r;
        const auto c1 = benaloh_encrypt(pub, m1, rng);
        const auto c2 = benaloh_encrypt(pub, m2, rng);
        sum = benaloh_decrypt(key, benaloh_add(pub, c1, c2));
      },
      [&] {
        absorb(material, key.n);
        absorb(material, key.y);
        absorb(material, m1);
        absorb(material, m2);
        if (sum != (m1 + m2) % r) integrity_failure(c, "Benaloh homomorphic sum mismatch");
      });
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Aes: return "AES";
    case Algorithm::Des: return "DES";
    case Algorithm::Rsa: return "RSA";
    case Algorithm::ElGamal: return "ELGAMAL";
    case Algorithm::Md5: return "MD5";
    case Algorithm::Sha1: return "SHA1";
    case Algorithm::Paillier: return "PAILLIER";
    case Algorithm::Benaloh: return "BENALOH";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
  if (upper == "SHA" || upper == "SHA-1") return Algorithm::Sha1;
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == upper) return a;
  }
  throw DomainError("unknown algorithm '" + std::string(name) + "'");
}

bool is_symmetric(Algorithm a) { return a == Algorithm::Aes || a == Algorithm::Des; }
bool is_asymmetric(Algorithm a) { return a == Algorithm::Rsa || a == Algorithm::ElGamal; }
bool is_hash(Algorithm a) { return a == Algorithm::Md5 || a == Algorithm::Sha1; }
bool is_homomorphic(Algorithm a) { return a == Algorithm::Paillier || a == Algorithm::Benaloh; }

std::vector<std::size_t> sweep_sizes(Algorithm algorithm) {
  if (is_symmetric(algorithm) || is_hash(algorithm)) return {10240, 20480, 30720, 40960, 51200};
  if (is_asymmetric(algorithm)) return {100, 200, 300, 400, 501};
  return {};
}

std::optional<unsigned> default_key_bits(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Aes: return 128;
    case Algorithm::Des: return 56;
    case Algorithm::Rsa:
    case Algorithm::ElGamal: return 4096;
    case Algorithm::Paillier:
    case Algorithm::Benaloh: return 512;
    case Algorithm::Md5:
    case Algorithm::Sha1: return std::nullopt;
  }
  return std::nullopt;
}

void validate_case(const BenchCase& c) {
  const std::string name(algorithm_name(c.algorithm));
  if (is_homomorphic(c.algorithm)) {
    if (c.input_size) throw DomainError(name + " takes no input size");
  } else if (!c.input_size) {
    throw DomainError(name + " requires an input size");
  }
  if (is_hash(c.algorithm)) {
    if (c.key_size) throw DomainError(name + " takes no key size");
    return;
  }
  if (!c.key_size) throw DomainError(name + " requires a key size");
  if (is_symmetric(c.algorithm) && c.key_size != default_key_bits(c.algorithm)) {
    throw DomainError(name + " key size is fixed at " + std::to_string(*default_key_bits(c.algorithm)) + " bits");
  }
  if (is_asymmetric(c.algorithm) && (*c.key_size < 64 || *c.key_size % 8 != 0)) {
    throw DomainError(name + " key size must be a multiple of 8 and >= 64");
  }
  if (is_homomorphic(c.algorithm) && (*c.key_size < 16 || *c.key_size % 2 != 0)) {
    throw DomainError(name + " key size must be even and >= 16");
  }
}

std::int64_t round_half_up_mean(std::span<const std::int64_t> values) {
  if (values.empty()) throw DomainError("mean of an empty list");
  std::int64_t sum = 0;
  for (std::int64_t v : values) {
    if (v < 0) throw DomainError("durations must be nonnegative");
    sum += v;
  }
  const auto count = static_cast<std::int64_t>(values.size());
  // floor(sum / count + 1/2) in exact integer arithmetic.
  return (2 * sum + count) / (2 * count);
}

BenchRow make_row(const BenchCase& bench_case, const Samples& samples) {
  BenchRow row;
  row.bench_case = bench_case;
  row.samples_ms = samples;
  row.average_ms = round_half_up_mean(samples);
  return row;
}

const ElGamalGroup& cached_elgamal_group(RunContext& ctx, std::size_t bits, std::uint64_t seed) {
  if (auto it = ctx.elgamal_groups.find(bits); it != ctx.elgamal_groups.end()) return it->second;
  if (auto known = elgamal_well_known_group(bits)) return ctx.elgamal_groups.emplace(bits, *known).first->second;
  SeededRng rng(mix(mix(seed, 0x454C47414D414CULL), bits));
  return ctx.elgamal_groups.emplace(bits, elgamal_generate_group(bits, rng)).first->second;
}

SeededRng case_rng(const BenchCase& c) {
  std::uint64_t s = mix(c.seed, static_cast<std::uint64_t>(c.algorithm) + 1);
  s = mix(s, c.input_size.value_or(0));
  s = mix(s, c.key_size.value_or(0));
  return SeededRng(s);
}

std::vector<std::uint8_t> workload_bytes(std::uint64_t seed, std::size_t size) {
  SeededRng rng(seed);
  return rng.bytes(size);
}

BenchRow run_case(const BenchCase& c, SeededRng& rng, RunContext& ctx) {
  validate_case(c);
  HashState material(HashAlgorithm::Sha1);
  Samples samples{};
  switch (c.algorithm) {
    case Algorithm::Aes:
    case Algorithm::Des: samples = run_block_cipher(c, rng, material); break;
    case Algorithm::Rsa: samples = run_rsa(c, rng, material); break;
    case Algorithm::ElGamal: samples = run_elgamal(c, rng, ctx, material); break;
    case Algorithm::Md5:
    case Algorithm::Sha1: samples = run_hash(c, material); break;
    case Algorithm::Paillier: samples = run_paillier(c, rng, material); break;
    case Algorithm::Benaloh: samples = run_benaloh(c, rng, ctx, material); break;
  }
  BenchRow row = make_row(c, samples);
  row.material_digest = material.finalize().hex();
  return row;
}

BenchRow run_case(const BenchCase& bench_case, SeededRng& rng) {
  RunContext ctx;
  return run_case(bench_case, rng, ctx);
}

Report aggregate_report(std::vector<BenchRow> rows, std::string environment_label) {
  if (rows.empty()) throw DomainError("aggregate_report: no rows");
  Report report;
  report.environment_label = std::move(environment_label);
  report.created_at = utc_timestamp_now();
  std::map<Algorithm, std::vector<std::int64_t>> grouped;
  for (const auto& row : rows) grouped[row.bench_case.algorithm].push_back(row.average_ms);
  for (const auto& [algorithm, averages] : grouped) {
    report.per_algorithm_average_ms[algorithm] = round_half_up_mean(averages);
  }
  report.rows = std::move(rows);
  return report;
}

std::string utc_timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string SpeedUpRatio::str() const {
  const std::int64_t whole = hundredths / 100;
  const std::int64_t frac = hundredths % 100;
  return std::to_string(whole) + "." + (frac < 10 ? "0" : "") + std::to_string(frac);
}

SpeedUpRatio speedup(std::int64_t local_avg_ms, std::int64_t cloud_avg_ms) {
  if (cloud_avg_ms <= 0) throw DomainError("speedup: cloud average must be positive");
  if (local_avg_ms < 0) throw DomainError("speedup: local average must be nonnegative");
  return SpeedUpRatio{(local_avg_ms * 100) / cloud_avg_ms};
}

SpeedUpTable compare_reports(const Report& local, const Report& cloud) {
  SpeedUpTable table;
  table.local_label = local.environment_label;
  table.cloud_label = cloud.environment_label;
  for (Algorithm a : kAllAlgorithms) {
    const auto l = local.per_algorithm_average_ms.find(a);
    const auto c = cloud.per_algorithm_average_ms.find(a);
    const bool in_local = l != local.per_algorithm_average_ms.end();
    const bool in_cloud = c != cloud.per_algorithm_average_ms.end();
    if (in_local && in_cloud) {
      std::optional<SpeedUpRatio> ratio;
      if (c->second > 0) ratio = speedup(l->second, c->second);
      table.entries.push_back({a, l->second, c->second, ratio});
    } else if (in_local) {
      table.only_local.push_back(a);
    } else if (in_cloud) {
      table.only_cloud.push_back(a);
    }
  }
  if (table.entries.empty()) {
    auto names = [](const Report& r) {
      std::string out = "{";
      for (const auto& [a, avg] : r.per_algorithm_average_ms) {
        if (out.size() > 1) out += ", ";
        out += algorithm_name(a);
      }
      return out + "}";
    };
    throw DomainError("no common algorithms: local " + names(local) + " vs cloud " + names(cloud));
  }
  return table;
}

}  // namespace cloudbench
