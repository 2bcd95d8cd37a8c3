#include "cloudbench/cli.hpp"

#include <sys/utsname.h>
#include <unistd.h>

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cloudbench/bench.hpp"
#include "cloudbench/blockcipher.hpp"
#include "cloudbench/digest.hpp"
#include "cloudbench/error.hpp"
#include "cloudbench/homomorphic.hpp"
#include "cloudbench/pubkey.hpp"
#include "cloudbench/report_io.hpp"

namespace cloudbench {

namespace {

using Json = nlohmann::ordered_json;

// Invalid flag combination; exit code 2.
class UsageError : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "UsageError"; }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::map<std::string, std::string> host_metadata() {
  std::map<std::string, std::string> meta;
  char host[256] = {};
  if (gethostname(host, sizeof host - 1) == 0) meta["hostname"] = host;
  struct utsname uts {};
  if (uname(&uts) == 0) {
    meta["os"] = std::string(uts.sysname) + " " + uts.release;
    meta["machine"] = uts.machine;
  }
#if defined(__clang__)
  meta["compiler"] = "clang " __clang_version__;
#elif defined(__GNUC__)
  meta["compiler"] = "gcc " __VERSION__;
#endif
  meta["cpu_count"] = std::to_string(std::max(1L, sysconf(_SC_NPROCESSORS_ONLN)));
  return meta;
}

// ------------------------------------------------------------------ bench

struct BenchRunOptions {
  std::string algorithms = "aes,des,rsa,elgamal,md5,sha1,paillier,benaloh";
  std::string sizes = "paper";
  bool custom_sizes = false;
  std::optional<unsigned> rsa_bits;
  std::optional<unsigned> elgamal_bits;
  std::optional<unsigned> paillier_bits;
  std::optional<unsigned> benaloh_bits;
  std::uint64_t benaloh_r = kDefaultBenalohBlockSize;
  bool no_keygen = false;
  bool fresh_elgamal_params = false;
  std::uint64_t seed = 42;
  std::string env = "single-system";
  std::string output;
};

std::vector<BenchCase> plan_cases(const BenchRunOptions& o) {
  std::vector<Algorithm> algorithms;
  for (const auto& name : split_list(o.algorithms)) {
    Algorithm a;
    try {
      a = parse_algorithm(name);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (std::find(algorithms.begin(), algorithms.end(), a) == algorithms.end()) algorithms.push_back(a);
  }
  if (algorithms.empty()) throw UsageError("no algorithms selected");

  std::optional<std::vector<std::size_t>> custom;
  if (o.sizes != "paper") {
    custom.emplace();
    for (const auto& s : split_list(o.sizes)) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        custom->push_back(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        throw UsageError("invalid size '" + s + "'");
      }
    }
    if (custom->empty()) throw UsageError("--sizes needs 'paper' or a list of byte counts");
  }

  std::vector<BenchCase> cases;
  for (Algorithm a : algorithms) {
    std::optional<unsigned> key = default_key_bits(a);
    if (a == Algorithm::Rsa && o.rsa_bits) key = o.rsa_bits;
    if (a == Algorithm::ElGamal && o.elgamal_bits) key = o.elgamal_bits;
    if (a == Algorithm::Paillier && o.paillier_bits) key = o.paillier_bits;
    if (a == Algorithm::Benaloh && o.benaloh_bits) key = o.benaloh_bits;

    BenchCase base{a, std::nullopt, key, !o.no_keygen, o.seed};
    if (is_homomorphic(a)) {
      if (custom) throw UsageError(std::string(algorithm_name(a)) + " takes no input size; use --sizes paper");
      cases.push_back(base);
      continue;
    }
    const auto sweep = sweep_sizes(a);
    for (std::size_t size : custom ? *custom : sweep) {
      if (!o.custom_sizes && std::find(sweep.begin(), sweep.end(), size) == sweep.end()) {
        throw UsageError("size " + std::to_string(size) + " is not in the " + std::string(algorithm_name(a)) +
                         " default sweep; pass --custom-sizes to allow it");
      }
      BenchCase c = base;
      c.input_size = size;
      cases.push_back(c);
    }
  }
  for (const auto& c : cases) {
    try {
      validate_case(c);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return cases;
}

int cmd_bench_run(const BenchRunOptions& o, std::ostream& out) {
  const auto cases = plan_cases(o);
  RunContext ctx;
  ctx.fresh_elgamal_params = o.fresh_elgamal_params;
  ctx.benaloh_block_size = o.benaloh_r;

  std::vector<BenchRow> rows;
  for (const auto& c : cases) {
    SeededRng rng = case_rng(c);
    rows.push_back(run_case(c, rng, ctx));
  }
  Report report = aggregate_report(std::move(rows), o.env);
  report.host_metadata = host_metadata();
  write_report_file(o.output, report);
  out << render_report_table(report);
  return 0;
}

int cmd_bench_compare(const std::string& local_path, const std::string& cloud_path, const std::string& format,
                      const std::string& output, std::ostream& out) {
  TableFormat fmt;
  try {
    fmt = parse_table_format(format);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const Report local = read_report_file(local_path);
  const Report cloud = read_report_file(cloud_path);
  const std::string rendered = render_speedup(compare_reports(local, cloud), fmt);
  if (output.empty()) {
    out << rendered;
  } else {
    write_file_atomic(output, rendered);
  }
  return 0;
}

int cmd_plot_data(const std::vector<std::string>& paths, const std::string& output,
                  const std::string& algorithm) {
  std::optional<Algorithm> only;
  if (!algorithm.empty()) {
    try {
      only = parse_algorithm(algorithm);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<Report> reports;
  for (const auto& p : paths) reports.push_back(read_report_file(p));
  write_file_atomic(output, plot_data_csv(reports, only));
  return 0;
}

int cmd_gen_workload(std::uint64_t seed, std::size_t size, const std::string& output) {
  const auto bytes = workload_bytes(seed, size);
  write_file_atomic(output, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  return 0;
}

// ----------------------------------------------------------------- crypto

enum class CryptoAlgorithm { Aes, Des, Rsa, ElGamal, Paillier, Benaloh, Md5, Sha1 };

CryptoAlgorithm parse_crypto_algorithm(const std::string& name) {
  Algorithm a;
  try {
    a = parse_algorithm(name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  switch (a) {
    case Algorithm::Aes: return CryptoAlgorithm::Aes;
    case Algorithm::Des: return CryptoAlgorithm::Des;
    case Algorithm::Rsa: return CryptoAlgorithm::Rsa;
    case Algorithm::ElGamal: return CryptoAlgorithm::ElGamal;
    case Algorithm::Paillier: return CryptoAlgorithm::Paillier;
    case Algorithm::Benaloh: return CryptoAlgorithm::Benaloh;
    case Algorithm::Md5: return CryptoAlgorithm::Md5;
    case Algorithm::Sha1: return CryptoAlgorithm::Sha1;
  }
  throw UsageError("unknown algorithm");
}

std::string lower_name(CryptoAlgorithm a) {
  static constexpr const char* kNames[] = {"aes", "des", "rsa", "elgamal", "paillier", "benaloh", "md5", "sha1"};
  return kNames[static_cast<int>(a)];
}

Bytes as_bytes(const std::string& s) { return Bytes(s.begin(), s.end()); }

std::string as_string(const Bytes& b) { return std::string(b.begin(), b.end()); }

Natural hex_field(const Json& section, const char* key) {
  const auto it = section.find(key);
  if (it == section.end() || !it->is_string()) throw SchemaError(std::string("key file lacks '") + key + "'");
  return Natural::from_hex(it->get<std::string>());
}

struct KeyFile {
  CryptoAlgorithm algorithm;
  std::size_t bits = 0;
  Json pub;
  Json priv;  // null when absent

  const Json& private_section() const {
    if (priv.is_null() || priv.empty()) throw DomainError("key file has no private material");
    return priv;
  }
};

KeyFile load_key(const std::string& path, CryptoAlgorithm expected) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("key file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("algorithm") || !j["algorithm"].is_string()) {
    throw SchemaError("key file lacks an algorithm tag");
  }
  KeyFile key;
  key.algorithm = parse_crypto_algorithm(j["algorithm"].get<std::string>());
  if (key.algorithm != expected) {
    throw KeyMismatchError("key file is for " + lower_name(key.algorithm) + ", not " + lower_name(expected));
  }
  if (!j.contains("bits") || !j["bits"].is_number_unsigned()) throw SchemaError("key file lacks bits");
  key.bits = j["bits"].get<std::size_t>();
  key.pub = j.value("public", Json::object());
  key.priv = j.value("private", Json());
  return key;
}

std::string key_json(CryptoAlgorithm a, std::size_t bits, Json pub, Json priv) {
  Json j;
  j["algorithm"] = lower_name(a);
  j["bits"] = bits;
  j["public"] = std::move(pub);
  j["private"] = std::move(priv);
  return j.dump(2) + "\n";
}

struct CryptoOptions {
  std::string algorithm;
  std::optional<unsigned> bits;
  std::uint64_t benaloh_r = kDefaultBenalohBlockSize;
  std::string key;
  std::string in;
  std::string out;
  std::uint64_t seed = 42;
};

int cmd_keygen(const CryptoOptions& o) {
  const CryptoAlgorithm a = parse_crypto_algorithm(o.algorithm);
  SeededRng rng(o.seed);
  std::string text;
  switch (a) {
    case CryptoAlgorithm::Aes:
    case CryptoAlgorithm::Des: {
      const bool aes = a == CryptoAlgorithm::Aes;
      if (o.bits && *o.bits != (aes ? 128u : 56u)) throw UsageError("symmetric key sizes are fixed");
      text = key_json(a, aes ? 128 : 56, Json::object(), Json{{"key", to_hex(rng.bytes(aes ? 16 : 8))}});
      break;
    }
    case CryptoAlgorithm::Rsa: {
      const auto k = rsa_keygen(o.bits.value_or(4096), rng);
      text = key_json(a, k.bits, Json{{"n", k.n.to_hex()}, {"e", k.e.to_hex()}}, Json{{"d", k.d.to_hex()}});
      break;
    }
    case CryptoAlgorithm::ElGamal: {
      const std::size_t bits = o.bits.value_or(4096);
      const auto k = elgamal_keygen(bits, rng, elgamal_well_known_group(bits));
      text = key_json(a, k.bits, Json{{"p", k.p.to_hex()}, {"g", k.g.to_hex()}, {"y", k.y.to_hex()}},
                      Json{{"x", k.x.to_hex()}});
      break;
    }
    case CryptoAlgorithm::Paillier: {
      const auto k = paillier_keygen(o.bits.value_or(512), rng);
      text = key_json(a, k.bits, Json{{"n", k.n.to_hex()}, {"g", k.g.to_hex()}},
                      Json{{"lambda", k.lambda.to_hex()}, {"mu", k.mu.to_hex()}});
      break;
    }
    case CryptoAlgorithm::Benaloh: {
      const auto k = benaloh_keygen(o.benaloh_r, o.bits.value_or(512), rng);
      text = key_json(a, k.bits, Json{{"r", k.r.to_hex()}, {"n", k.n.to_hex()}, {"y", k.y.to_hex()}},
                      Json{{"phi", k.phi.to_hex()}, {"x", k.x.to_hex()}});
      break;
    }
    case CryptoAlgorithm::Md5:
    case CryptoAlgorithm::Sha1: throw UsageError("hash functions have no keys");
  }
  write_file_atomic(o.out, text);
  return 0;
}

BlockCipherKey symmetric_key(const KeyFile& key) {
  const auto bytes = from_hex(key.private_section().value("key", ""));
  if (key.algorithm == CryptoAlgorithm::Aes) return AesKey128(bytes);
  return DesKey(bytes);
}

RsaKeyPair rsa_key(const KeyFile& key, bool need_private) {
  RsaKeyPair k{hex_field(key.pub, "n"), hex_field(key.pub, "e"), Natural{}, key.bits};
  if (need_private) k.d = hex_field(key.private_section(), "d");
  return k;
}

ElGamalKeyPair elgamal_key(const KeyFile& key, bool need_private) {
  ElGamalKeyPair k{hex_field(key.pub, "p"), hex_field(key.pub, "g"), Natural{}, hex_field(key.pub, "y"), key.bits};
  if (need_private) k.x = hex_field(key.private_section(), "x");
  return k;
}

PaillierKeyPair paillier_key(const KeyFile& key, bool need_private) {
  PaillierKeyPair k;
  k.n = hex_field(key.pub, "n");
  k.n_sq = k.n * k.n;
  k.g = hex_field(key.pub, "g");
  k.bits = key.bits;
  k.fingerprint = fingerprint_of(k.n);
  if (need_private) {
    k.lambda = hex_field(key.private_section(), "lambda");
    k.mu = hex_field(key.private_section(), "mu");
  }
  return k;
}

BenalohKeyPair benaloh_key(const KeyFile& key, bool need_private) {
  BenalohKeyPair k;
  k.r = hex_field(key.pub, "r");
  k.n = hex_field(key.pub, "n");
  k.y = hex_field(key.pub, "y");
  k.bits = key.bits;
  k.fingerprint = fingerprint_of(k.n);
  if (need_private) {
    k.phi = hex_field(key.private_section(), "phi");
    k.x = hex_field(key.private_section(), "x");
  }
  return k;
}

std::string block_ciphertext_json(const BlockCiphertext& ct) {
  Json j;
  j["scheme"] = ct.scheme == PubkeyScheme::Rsa ? "RSA" : "ELGAMAL";
  j["chunk_len"] = ct.chunk_len;
  j["last_len"] = ct.last_len;
  j["blocks"] = Json::array();
  for (const auto& b : ct.blocks) j["blocks"].push_back(b.to_hex());
  return j.dump(2) + "\n";
}

BlockCiphertext block_ciphertext_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
    BlockCiphertext ct;
    const auto scheme = j.at("scheme").get<std::string>();
    if (scheme != "RSA" && scheme != "ELGAMAL") throw SchemaError("unknown ciphertext scheme '" + scheme + "'");
    ct.scheme = scheme == "RSA" ? PubkeyScheme::Rsa : PubkeyScheme::ElGamal;
    ct.chunk_len = j.at("chunk_len").get<std::size_t>();
    ct.last_len = j.at("last_len").get<std::size_t>();
    for (const auto& b : j.at("blocks")) ct.blocks.push_back(Natural::from_hex(b.get<std::string>()));
    return ct;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed ciphertext file: ") + e.what());
  }
}

std::string homomorphic_ciphertext_json(CryptoAlgorithm a, const Natural& value, const KeyFingerprint& fp) {
  Json j;
  j["algorithm"] = lower_name(a);
  j["value"] = value.to_hex();
  j["key_fingerprint"] = to_hex(fp);
  return j.dump(2) + "\n";
}

std::pair<Natural, KeyFingerprint> homomorphic_ciphertext_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    const auto fp_bytes = from_hex(j.at("key_fingerprint").get<std::string>());
    if (fp_bytes.size() != 20) throw SchemaError("key_fingerprint must be 20 bytes");
    KeyFingerprint fp{};
    std::copy(fp_bytes.begin(), fp_bytes.end(), fp.begin());
    return {Natural::from_hex(j.at("value").get<std::string>()), fp};
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed ciphertext file: ") + e.what());
  }
}

Natural parse_message(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw DomainError("message file is empty");
  return Natural::from_decimal(text.substr(first, last - first + 1));
}

int cmd_encrypt(const CryptoOptions& o) {
  const CryptoAlgorithm a = parse_crypto_algorithm(o.algorithm);
  const KeyFile key = load_key(o.key, a);
  const std::string input = read_file(o.in);
  SeededRng rng(o.seed);
  std::string text;
  switch (a) {
    case CryptoAlgorithm::Aes:
    case CryptoAlgorithm::Des: {
      const BlockCipherKey k = symmetric_key(key);
      const auto ct = cbc_encrypt(k, rng.bytes(block_size(k)), as_bytes(input));
      text = as_string(ct.iv) + as_string(ct.body);
      break;
    }
    case CryptoAlgorithm::Rsa:
      text = block_ciphertext_json(rsa_encrypt(rsa_key(key, false).public_key(), as_bytes(input)));
      break;
    case CryptoAlgorithm::ElGamal:
      text = block_ciphertext_json(elgamal_encrypt(elgamal_key(key, false).public_key(), as_bytes(input), rng));
      break;
    case CryptoAlgorithm::Paillier: {
      const auto pub = paillier_key(key, false).public_key();
      const auto c = paillier_encrypt(pub, parse_message(input), rng);
      text = homomorphic_ciphertext_json(a, c.value, c.key_fingerprint);
      break;
    }
    case CryptoAlgorithm::Benaloh: {
      const auto pub = benaloh_key(key, false).public_key();
      const auto c = benaloh_encrypt(pub, parse_message(input), rng);
      text = homomorphic_ciphertext_json(a, c.value, c.key_fingerprint);
      break;
    }
    case CryptoAlgorithm::Md5:
    case CryptoAlgorithm::Sha1: throw UsageError("use 'crypto hash' for hash functions");
  }
  write_file_atomic(o.out, text);
  return 0;
}

int cmd_decrypt(const CryptoOptions& o) {
  const CryptoAlgorithm a = parse_crypto_algorithm(o.algorithm);
  const KeyFile key = load_key(o.key, a);
  const std::string input = read_file(o.in);
  std::string text;
  switch (a) {
    case CryptoAlgorithm::Aes:
    case CryptoAlgorithm::Des: {
      const BlockCipherKey k = symmetric_key(key);
      const std::size_t bs = block_size(k);
      if (input.size() < bs) throw DomainError("ciphertext shorter than one block");
      CbcCiphertext ct{as_bytes(input.substr(0, bs)), as_bytes(input.substr(bs))};
      text = as_string(cbc_decrypt(k, ct));
      break;
    }
    case CryptoAlgorithm::Rsa:
      text = as_string(rsa_decrypt(rsa_key(key, true), block_ciphertext_from_json(input)));
      break;
    case CryptoAlgorithm::ElGamal:
      text = as_string(elgamal_decrypt(elgamal_key(key, true), block_ciphertext_from_json(input)));
      break;
    case CryptoAlgorithm::Paillier: {
      auto [value, fp] = homomorphic_ciphertext_from_json(input);
      text = paillier_decrypt(paillier_key(key, true), PaillierCiphertext{value, fp}).to_decimal() + "\n";
      break;
    }
    case CryptoAlgorithm::Benaloh: {
      auto [value, fp] = homomorphic_ciphertext_from_json(input);
      text = benaloh_decrypt(benaloh_key(key, true), BenalohCiphertext{value, fp}).to_decimal() + "\n";
      break;
    }
    case CryptoAlgorithm::Md5:
    case CryptoAlgorithm::Sha1: throw UsageError("hash functions cannot decrypt");
  }
  write_file_atomic(o.out, text);
  return 0;
}

int cmd_hash(const CryptoOptions& o, std::ostream& out) {
  const CryptoAlgorithm a = parse_crypto_algorithm(o.algorithm);
  if (a != CryptoAlgorithm::Md5 && a != CryptoAlgorithm::Sha1) throw UsageError("hash needs md5 or sha1");
  const auto data = as_bytes(read_file(o.in));
  out << hash(a == CryptoAlgorithm::Md5 ? HashAlgorithm::Md5 : HashAlgorithm::Sha1, data).hex() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cryptographic algorithm benchmark suite", "cloudbench"};
  app.require_subcommand(1);

  std::function<int()> action;

  auto* bench = app.add_subcommand("bench", "Run and compare benchmarks");
  bench->require_subcommand(1);

  BenchRunOptions run_opts;
  auto* run = bench->add_subcommand("run", "Time every algorithm x input size case and write a report");
  run->add_option("--algorithms", run_opts.algorithms, "Comma-separated algorithms")->capture_default_str();
  run->add_option("--sizes", run_opts.sizes, "'paper' or comma-separated byte counts")->capture_default_str();
  run->add_flag("--custom-sizes", run_opts.custom_sizes, "Allow sizes outside the default sweep");
  run->add_option("--rsa-bits", run_opts.rsa_bits, "RSA modulus size (default 4096)");
  run->add_option("--elgamal-bits", run_opts.elgamal_bits, "ElGamal prime size (default 4096)");
  run->add_option("--paillier-bits", run_opts.paillier_bits, "Paillier modulus size (default 512)");
  run->add_option("--benaloh-bits", run_opts.benaloh_bits, "Benaloh modulus size (default 512)");
  run->add_option("--benaloh-r", run_opts.benaloh_r, "Benaloh block size r (odd prime)")->capture_default_str();
  run->add_flag("--no-keygen", run_opts.no_keygen, "Generate keys outside the timed region");
  run->add_flag("--fresh-elgamal-params", run_opts.fresh_elgamal_params,
                "Generate a new ElGamal group inside every sample");
  run->add_option("--seed", run_opts.seed, "Seed for all randomness")->capture_default_str();
  run->add_option("--env", run_opts.env, "Environment label")->capture_default_str();
  run->add_option("-o,--output", run_opts.output, "Report JSON path")->required();
  run->callback([&] { action = [&] { return cmd_bench_run(run_opts, out); }; });

  std::string local_path, cloud_path, format = "table", compare_output;
  auto* compare = bench->add_subcommand("compare", "Speed-Up Ratio table of two reports");
  compare->add_option("local", local_path, "Local report")->required();
  compare->add_option("cloud", cloud_path, "Cloud report")->required();
  compare->add_option("--format", format, "table, csv or json")->capture_default_str();
  compare->add_option("-o,--output", compare_output, "Write to a file instead of standard output");
  compare->callback([&] {
    action = [&] { return cmd_bench_compare(local_path, cloud_path, format, compare_output, out); };
  });

  std::vector<std::string> plot_inputs;
  std::string plot_output, plot_algorithm;
  auto* plot = app.add_subcommand("plot-data", "Input size vs. average time CSV, one series per report");
  plot->add_option("reports", plot_inputs, "Report files")->required()->expected(1, -1);
  plot->add_option("-o,--output", plot_output, "CSV path")->required();
  plot->add_option("--algorithm", plot_algorithm, "Only rows of this algorithm");
  plot->callback([&] { action = [&] { return cmd_plot_data(plot_inputs, plot_output, plot_algorithm); }; });

  std::uint64_t workload_seed = 42;
  std::size_t workload_size = 0;
  std::string workload_output;
  auto* workload = app.add_subcommand("gen-workload", "Write the deterministic workload bytes");
  workload->add_option("--seed", workload_seed, "Workload seed")->capture_default_str();
  workload->add_option("--size", workload_size, "Size in bytes")->required();
  workload->add_option("-o,--output", workload_output, "Output path")->required();
  workload->callback([&] { action = [&] { return cmd_gen_workload(workload_seed, workload_size, workload_output); }; });

  auto* crypto = app.add_subcommand("crypto", "Key generation, encryption, decryption and hashing of files");
  crypto->require_subcommand(1);
  CryptoOptions crypto_opts;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--algorithm", crypto_opts.algorithm, "Algorithm")->required();
  };
  auto* keygen = crypto->add_subcommand("keygen", "Write a JSON key file");
  common(keygen);
  keygen->add_option("--bits", crypto_opts.bits, "Key size in bits");
  keygen->add_option("--benaloh-r", crypto_opts.benaloh_r, "Benaloh block size r")->capture_default_str();
  keygen->add_option("--seed", crypto_opts.seed, "Seed")->capture_default_str();
  keygen->add_option("-o,--out", crypto_opts.out, "Key file path")->required();
  keygen->callback([&] { action = [&] { return cmd_keygen(crypto_opts); }; });

  auto* encrypt = crypto->add_subcommand("encrypt", "Encrypt a file");
  common(encrypt);
  encrypt->add_option("--key", crypto_opts.key, "Key file")->required();
  encrypt->add_option("--in", crypto_opts.in, "Input file")->required();
  encrypt->add_option("--out", crypto_opts.out, "Output file")->required();
  encrypt->add_option("--seed", crypto_opts.seed, "Seed for IVs and nonces")->capture_default_str();
  encrypt->callback([&] { action = [&] { return cmd_encrypt(crypto_opts); }; });

  auto* decrypt = crypto->add_subcommand("decrypt", "Decrypt a file");
  common(decrypt);
  decrypt->add_option("--key", crypto_opts.key, "Key file with private material")->required();
  decrypt->add_option("--in", crypto_opts.in, "Input file")->required();
  decrypt->add_option("--out", crypto_opts.out, "Output file")->required();
  decrypt->callback([&] { action = [&] { return cmd_decrypt(crypto_opts); }; });

  auto* hash_cmd = crypto->add_subcommand("hash", "Print the lowercase hex digest of a file");
  common(hash_cmd);
  hash_cmd->add_option("--in", crypto_opts.in, "Input file")->required();
  hash_cmd->callback([&] { action = [&] { return cmd_hash(crypto_opts, out); }; });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("cloudbench");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cloudbench
