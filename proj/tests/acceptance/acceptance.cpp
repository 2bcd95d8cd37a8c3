// Acceptance gate. Prints one line per criterion:
//   [PASS] 3 known-answer suite (0.01 s)
// Criterion 6 is machine dependent and reports WARN instead of FAIL.
//
// Usage: cloudbench_acceptance [--criterion N]...

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cloudbench/bench.hpp"
#include "cloudbench/blockcipher.hpp"
#include "cloudbench/cli.hpp"
#include "cloudbench/digest.hpp"
#include "cloudbench/homomorphic.hpp"
#include "cloudbench/numtheory.hpp"
#include "cloudbench/pubkey.hpp"
#include "cloudbench/report_io.hpp"
#include "published_data.hpp"

using namespace cloudbench;

namespace {

enum class Status { Pass, Fail, Warn };

struct Outcome {
  Status status = Status::Pass;
  std::vector<std::string> notes;

  void fail(const std::string& note) {
    status = Status::Fail;
    notes.push_back(note);
  }
  void warn(const std::string& note) {
    if (status == Status::Pass) status = Status::Warn;
    notes.push_back(note);
  }
  void check(bool ok, const std::string& note) {
    if (!ok) fail(note);
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  bool gating;
  std::function<void(Outcome&)> run;
};

// ---------------------------------------------------------------- 1 and 2

void table_arithmetic(Outcome& o) {
  const auto tables = published::load();
  std::size_t rows = 0, per_alg = 0;
  for (const auto* t : {&tables.local, &tables.cloud}) {
    for (const auto& r : t->rows) {
      ++rows;
      const BenchCase c{r.algorithm, r.input_size, default_key_bits(r.algorithm), true, 42};
      const BenchRow row = make_row(c, r.samples);
      if (row.average_ms != r.printed_average) {
        std::ostringstream msg;
        msg << t->label << " " << row_label(c) << ": samples [";
        for (std::size_t i = 0; i < r.samples.size(); ++i) msg << (i ? "," : "") << r.samples[i];
        msg << "] average " << row.average_ms << ", printed " << r.printed_average;
        o.fail(msg.str());
      }
    }
    const Report report = published::aggregate(*t);
    for (const auto& [a, printed] : t->per_algorithm) {
      ++per_alg;
      const auto got = report.per_algorithm_average_ms.at(a);
      o.check(got == printed, t->label + " " + std::string(algorithm_name(a)) + " per-algorithm average " +
                                  std::to_string(got) + ", printed " + std::to_string(printed));
    }
  }
  o.notes.insert(o.notes.begin(), std::to_string(rows) + " rows and " + std::to_string(per_alg) +
                                      " per-algorithm averages checked");

  // Diagnostic only: the same rule applied to the printed row averages.
  std::size_t consistent = 0;
  for (const auto* t : {&tables.local, &tables.cloud}) {
    std::map<Algorithm, std::vector<std::int64_t>> printed_rows;
    for (const auto& r : t->rows) printed_rows[r.algorithm].push_back(r.printed_average);
    for (const auto& [a, v] : printed_rows) consistent += round_half_up_mean(v) == t->per_algorithm.at(a);
  }
  o.notes.push_back("per-algorithm averages recomputed from the printed row averages: " + std::to_string(consistent) +
                    "/" + std::to_string(per_alg) + " match");
}

void speedup_oracle(Outcome& o) {
  const auto tables = published::load();
  auto verify = [&](const SpeedUpTable& table, const std::string& source) {
    o.check(table.entries.size() == 8, source + ": expected 8 entries");
    for (const auto& e : table.entries) {
      const std::string& want = tables.speedup.at(e.algorithm);
      o.check(e.ratio->str() == want, source + " " + std::string(algorithm_name(e.algorithm)) + ": " + e.ratio->str() +
                                         ", printed " + want);
    }
  };
  verify(compare_reports(read_report_file(published::fixture_path("published_single_system.json")),
                         read_report_file(published::fixture_path("published_cloud.json"))),
         "printed averages");
  verify(compare_reports(published::aggregate(tables.local), published::aggregate(tables.cloud)),
         "re-aggregated samples");
}

// ---------------------------------------------------------------------- 3

void known_answers(Outcome& o) {
  auto hex = [](const auto& a) { return to_hex(std::span<const std::uint8_t>(a.data(), a.size())); };
  const AesKey128 aes(from_hex("2b7e151628aed2a6abf7158809cf4f3c"));
  o.check(hex(aes_encrypt_block(aes, from_hex("3243f6a8885a308d313198a2e0370734"))) ==
              "3925841d02dc09fbdc118597196a0b32",
          "AES encrypt");
  o.check(hex(aes_decrypt_block(aes, from_hex("3925841d02dc09fbdc118597196a0b32"))) ==
              "3243f6a8885a308d313198a2e0370734",
          "AES decrypt");
  const DesKey des(from_hex("133457799bbcdff1"));
  o.check(hex(des_encrypt_block(des, from_hex("0123456789abcdef"))) == "85e813540f0ab405", "DES encrypt");
  o.check(hex(des_decrypt_block(des, from_hex("85e813540f0ab405"))) == "0123456789abcdef", "DES decrypt");

  const std::pair<const char*, const char*> md5_suite[] = {
      {"", "d41d8cd98f00b204e9800998ecf8427e"},
      {"a", "0cc175b9c0f1b6a831c399e269772661"},
      {"abc", "900150983cd24fb0d6963f7d28e17f72"},
      {"message digest", "f96b697d7cb7938d525a2f31aaf161d0"},
      {"abcdefghijklmnopqrstuvwxyz", "c3fcd3d76192e4007dfb496cca67e13b"},
      {"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789", "d174ab98d277d9f5a5611c2c9f419d9f"},
      {"12345678901234567890123456789012345678901234567890123456789012345678901234567890",
       "57edf4a22be3c955ac49da2e2107b67a"},
  };
  for (const auto& [msg, want] : md5_suite) o.check(md5(std::string_view(msg)).hex() == want, std::string("MD5 \"") + msg + "\"");

  o.check(sha1(std::string_view("abc")).hex() == "a9993e364706816aba3e25717850c26c9cd0d89d", "SHA-1 \"abc\"");
  o.check(sha1(std::string_view("")).hex() == "da39a3ee5e6b4b0d3255bfef95601890afd80709", "SHA-1 \"\"");
  // 'a' * n, values from Python hashlib
  const char* boundary[] = {
      "c1c8bbdc22796e28c0e15163d20899b65621d65a", "c2db330f6083854c99d4b5bfb6e8f29f201be699",
      "f08f24908d682555111be7ff6f004e78283d989a", "5ee0f8895f4e1aae6a6661de5c432e34188a5a2d",
      "dbc8b8f59ff85a2b1448ed873484b14bf0507246", "13d956033d9af449bfe2c4ef78c17c20469c4bf1",
      "aeab141db28af3353283b5ccb2a322df0b9b5f56", "67b4b3923fa178d788a9611b76446c96431071f2",
      "03f09f5b158a7a8cdad920bddc29b81c18a551f5", "0098ba824b5c16427bd7a1122a5a442a25ec644d",
      "11655326c708d70319be2610e8a57d9a5b959d3b"};
  for (std::size_t n = 55; n <= 65; ++n) {
    o.check(sha1(std::string(n, 'a')).hex() == boundary[n - 55], "SHA-1 of " + std::to_string(n) + " bytes");
  }
}

// ---------------------------------------------------------------------- 4

// Tries every m in [0, r).
std::optional<Natural> benaloh_naive_decrypt(const BenalohKeyPair& k, const Natural& c) {
  const Natural a = mod_pow(c, k.phi / k.r, k.n);
  Natural acc = 1;
  for (Natural m = 0; m < k.r; m = m + 1) {
    if (acc == a) return m;
    acc = acc * k.x % k.n;
  }
  return std::nullopt;
}

void homomorphic_properties(Outcome& o) {
  SeededRng rng(2024);

  const PaillierKeyPair pk = paillier_keygen(512, rng);
  const auto ppub = pk.public_key();
  int paillier_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const Natural m1 = rng.below(pk.n), m2 = rng.below(pk.n);
    const auto sum = paillier_add(ppub, paillier_encrypt(ppub, m1, rng), paillier_encrypt(ppub, m2, rng));
    if (paillier_decrypt(pk, sum) != (m1 + m2) % pk.n) ++paillier_bad;
  }
  o.check(paillier_bad == 0, "Paillier 512-bit: " + std::to_string(paillier_bad) + "/100 sums wrong");

  const PaillierKeyPair small = paillier_keypair_from_primes(3, 5);
  int small_cases = 0, small_bad = 0;
  for (std::uint64_t m = 0; m < 15; ++m)
    for (std::uint64_t u = 1; u < 15; ++u) {
      if (gcd(u, 15) != Natural(1)) continue;
      ++small_cases;
      if (paillier_decrypt(small, paillier_encrypt_with_nonce(small.public_key(), m, u)) != Natural(m)) ++small_bad;
    }
  o.check(small_bad == 0, "Paillier n=15: " + std::to_string(small_bad) + " of " + std::to_string(small_cases) + " wrong");

  const BenalohKeyPair bk = benaloh_keygen(257, 512, rng);
  const auto bpub = bk.public_key();
  int benaloh_bad = 0, naive_mismatch = 0;
  for (int i = 0; i < 100; ++i) {
    const Natural m1 = rng.below(257), m2 = rng.below(257);
    const auto sum = benaloh_add(bpub, benaloh_encrypt(bpub, m1, rng), benaloh_encrypt(bpub, m2, rng));
    const Natural got = benaloh_decrypt(bk, sum);
    if (got != (m1 + m2) % Natural(257)) ++benaloh_bad;
    if (benaloh_naive_decrypt(bk, sum.value) != std::optional<Natural>(got)) ++naive_mismatch;
  }
  o.check(benaloh_bad == 0, "Benaloh r=257: " + std::to_string(benaloh_bad) + "/100 sums wrong");

  int tiny_cases = 0, tiny_bad = 0;
  for (std::uint64_t y = 2; y < 35; ++y) {
    if (gcd(y, 35) != Natural(1) || mod_pow(y, 8, 35) == Natural(1)) continue;
    const BenalohKeyPair k = benaloh_keypair_from_primes(3, 7, 5, Natural(y));
    for (std::uint64_t m = 0; m < 3; ++m)
      for (std::uint64_t u = 1; u < 35; ++u) {
        if (gcd(u, 35) != Natural(1)) continue;
        ++tiny_cases;
        const auto c = benaloh_encrypt_with_nonce(k.public_key(), m, u);
        const Natural got = benaloh_decrypt(k, c);
        if (got != Natural(m)) ++tiny_bad;
        if (benaloh_naive_decrypt(k, c.value) != std::optional<Natural>(got)) ++naive_mismatch;
      }
  }
  o.check(tiny_bad == 0, "Benaloh n=35: " + std::to_string(tiny_bad) + " of " + std::to_string(tiny_cases) + " wrong");
  o.check(naive_mismatch == 0, "BSGS and exhaustive decryptors disagree on " + std::to_string(naive_mismatch) + " ciphertexts");
  o.notes.push_back("Paillier 100 pairs + " + std::to_string(small_cases) + " exhaustive; Benaloh 100 pairs + " +
                    std::to_string(tiny_cases) + " exhaustive");
}

// ---------------------------------------------------------------------- 5

std::vector<std::size_t> round_trip_lengths(std::size_t block, bool allow_empty, SeededRng& rng, std::size_t count) {
  const std::vector<std::size_t> fixed = {allow_empty ? 0u : 1u, 1, block - 1, block, block + 1, 2 * block,
                                          3 * block - 1, 3 * block, 100, 501, 10240};
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i < fixed.size()) {
      out.push_back(fixed[i]);
    } else if (i % 10 == 0) {
      out.push_back(fixed[7 + i / 10 % 4]);
    } else {
      out.push_back(1 + rng.below(3 * block).to_u64());
    }
  }
  return out;
}

void round_trips(Outcome& o) {
  constexpr std::size_t kInputs = 200;
  SeededRng rng(77);
  auto run = [&](const std::string& name, std::size_t block, bool allow_empty, const std::function<Bytes(const Bytes&)>& f) {
    int bad = 0;
    for (std::size_t len : round_trip_lengths(block, allow_empty, rng, kInputs)) {
      const Bytes pt = rng.bytes(len);
      if (f(pt) != pt) ++bad;
    }
    o.check(bad == 0, name + ": " + std::to_string(bad) + "/" + std::to_string(kInputs) + " round trips differ");
  };

  const BlockCipherKey aes = AesKey128(rng.bytes(16));
  run("AES-CBC", 16, true, [&](const Bytes& pt) { return cbc_decrypt(aes, cbc_encrypt(aes, rng.bytes(16), pt)); });
  const BlockCipherKey des = DesKey(rng.bytes(8));
  run("DES-CBC", 8, true, [&](const Bytes& pt) { return cbc_decrypt(des, cbc_encrypt(des, rng.bytes(8), pt)); });

  const RsaKeyPair rsa = rsa_keygen(512, rng);
  run("RSA-512", chunk_length(512), false, [&](const Bytes& pt) { return rsa_decrypt(rsa, rsa_encrypt(rsa.public_key(), pt)); });
  const ElGamalKeyPair eg = elgamal_keygen(512, rng);
  run("ElGamal-512", chunk_length(512), false,
      [&](const Bytes& pt) { return elgamal_decrypt(eg, elgamal_encrypt(eg.public_key(), pt, rng)); });
}

// ---------------------------------------------------------------------- 6

std::int64_t median(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

void soft_ordering(Outcome& o) {
  constexpr int kRepetitions = 10;
  constexpr unsigned kKeyBits = 1024;
  std::map<Algorithm, std::vector<std::int64_t>> totals;
  for (int rep = 0; rep < kRepetitions; ++rep) {
    RunContext ctx;
    for (Algorithm a : {Algorithm::Aes, Algorithm::Des, Algorithm::Rsa, Algorithm::ElGamal, Algorithm::Paillier,
                        Algorithm::Benaloh}) {
      std::optional<unsigned> key = default_key_bits(a);
      if (is_asymmetric(a) || is_homomorphic(a)) key = kKeyBits;
      std::vector<std::optional<std::size_t>> sizes;
      for (auto s : sweep_sizes(a)) sizes.emplace_back(s);
      if (sizes.empty()) sizes.emplace_back(std::nullopt);
      std::int64_t total = 0;
      for (const auto& size : sizes) {
        const BenchCase c{a, size, key, true, 42 + static_cast<std::uint64_t>(rep)};
        SeededRng rng = case_rng(c);
        const BenchRow row = run_case(c, rng, ctx);
        for (auto s : row.samples_ms) total += s;
      }
      totals[a].push_back(total);
    }
  }
  auto med = [&](Algorithm a) { return median(totals[a]); };
  auto compare = [&](Algorithm fast, Algorithm slow, bool allow_equal, const std::string& claim) {
    const auto f = med(fast), s = med(slow);
    const bool ok = allow_equal ? f <= s : f < s;
    const std::string line = std::string(algorithm_name(fast)) + " median " + std::to_string(f) + " ms vs " +
                             std::string(algorithm_name(slow)) + " median " + std::to_string(s) + " ms";
    if (ok) {
      o.notes.push_back(line + ": holds (" + claim + ")");
    } else {
      o.warn(line + ": does not hold (" + claim + ")");
    }
  };
  compare(Algorithm::Aes, Algorithm::Des, true, "AES faster than DES");
  compare(Algorithm::ElGamal, Algorithm::Rsa, false, "ElGamal faster than RSA");
  compare(Algorithm::Paillier, Algorithm::Benaloh, false, "Paillier faster than Benaloh");
}

// ---------------------------------------------------------------------- 7

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("cloudbench_acceptance_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<std::string> bench_run_args(const std::string& env, const std::string& out) {
  return {"bench", "run", "--sizes", "paper", "--seed", "42", "--rsa-bits", "512", "--elgamal-bits", "512",
          "--paillier-bits", "512", "--benaloh-bits", "512", "--env", env, "-o", out};
}

void end_to_end(Outcome& o) {
  const auto dir = scratch_dir("e2e");
  auto path = [&](const std::string& name) { return (dir / name).string(); };
  auto ok = [&](const CliResult& r, const std::string& what) {
    o.check(r.code == 0, what + " exited " + std::to_string(r.code) + ": " + r.err);
    return r.code == 0;
  };

  if (!ok(cli({"gen-workload", "--seed", "42", "--size", "10240", "-o", path("workload.bin")}), "gen-workload")) return;
  const std::string workload = read_file(path("workload.bin"));
  const auto expected = workload_bytes(42, 10240);
  o.check(workload == std::string(expected.begin(), expected.end()), "workload file differs from workload_bytes");

  if (!ok(cli(bench_run_args("local", path("local.json"))), "bench run local")) return;
  if (!ok(cli(bench_run_args("cloud", path("cloud.json"))), "bench run cloud")) return;

  for (const char* name : {"local.json", "cloud.json"}) {
    const std::string text = read_file(path(name));
    const Report r = report_from_json(text);
    o.check(report_to_json(r) == text, std::string(name) + " does not round trip byte for byte");
    o.check(r.rows.size() == 32, std::string(name) + " has " + std::to_string(r.rows.size()) + " rows, want 32");
    o.check(r.per_algorithm_average_ms.size() == 8, std::string(name) + " lacks per-algorithm averages");
    write_report_file(path(std::string("rewritten_") + name), r);
    o.check(read_file(path(std::string("rewritten_") + name)) == text, std::string(name) + " rewrite differs");
  }

  const Report local = read_report_file(path("local.json"));
  const Report cloud = read_report_file(path("cloud.json"));
  const auto csv = cli({"bench", "compare", path("local.json"), path("cloud.json"), "--format", "csv"});
  if (ok(csv, "bench compare")) {
    std::istringstream lines(csv.out);
    std::string line;
    std::getline(lines, line);
    int entries = 0;
    while (std::getline(lines, line)) {
      ++entries;
      const std::string name = line.substr(0, line.find(','));
      const Algorithm a = parse_algorithm(name);
      const auto l = local.per_algorithm_average_ms.at(a), c = cloud.per_algorithm_average_ms.at(a);
      const std::string want = name + "," + std::to_string(l) + "," + std::to_string(c) + "," +
                               (c > 0 ? speedup(l, c).str() + ",ok" : ",undefined");
      o.check(line == want, "compare line '" + line + "', want '" + want + "'");
    }
    o.check(entries == 8, "compare produced " + std::to_string(entries) + " entries");
  }
  ok(cli({"bench", "compare", path("local.json"), path("cloud.json"), "--format", "json", "-o", path("cmp.json")}),
     "bench compare json");

  if (ok(cli({"plot-data", path("local.json"), path("cloud.json"), "-o", path("plot.csv")}), "plot-data")) {
    o.check(read_file(path("plot.csv")) == plot_data_csv({local, cloud}), "plot-data file differs from library output");
  }

  const std::string published_local = published::fixture_path("published_single_system.json");
  const std::string published_cloud = published::fixture_path("published_cloud.json");
  if (ok(cli({"plot-data", published_local, published_cloud, "-o", path("published_plot.csv")}), "plot-data golden")) {
    o.check(read_file(path("published_plot.csv")) == read_file(published::fixture_path("../golden/published_plot.csv")),
            "published plot CSV differs from golden");
  }
  const auto golden_cmp = cli({"bench", "compare", published_local, published_cloud, "--format", "csv"});
  o.check(golden_cmp.out == read_file(published::fixture_path("../golden/published_speedup.csv")),
          "published speed-up CSV differs from golden");
  std::filesystem::remove_all(dir);
}

// ---------------------------------------------------------------------- 8

std::vector<BenchRow> pipeline_rows() {
  RunContext ctx;
  std::vector<BenchRow> rows;
  for (Algorithm a : kAllAlgorithms) {
    std::optional<unsigned> key = default_key_bits(a);
    if (is_asymmetric(a) || is_homomorphic(a)) key = 512;
    std::vector<std::optional<std::size_t>> sizes;
    for (auto s : sweep_sizes(a)) sizes.emplace_back(s);
    if (sizes.empty()) sizes.emplace_back(std::nullopt);
    for (const auto& size : sizes) {
      const BenchCase c{a, size, key, true, 42};
      SeededRng rng = case_rng(c);
      rows.push_back(run_case(c, rng, ctx));
    }
  }
  return rows;
}

std::string without_timing(Report r) {
  r.created_at.clear();
  r.host_metadata.clear();
  for (auto& row : r.rows) {
    row.samples_ms.fill(0);
    row.average_ms = 0;
  }
  for (auto& [a, v] : r.per_algorithm_average_ms) v = 0;
  return report_to_json(r);
}

void determinism(Outcome& o) {
  const auto first = pipeline_rows();
  const auto second = pipeline_rows();
  o.check(first.size() == second.size(), "row counts differ");
  for (std::size_t i = 0; i < std::min(first.size(), second.size()); ++i) {
    const std::string label = row_label(first[i].bench_case);
    o.check(first[i].bench_case == second[i].bench_case, label + ": cases differ");
    o.check(first[i].material_digest == second[i].material_digest, label + ": key material or plaintexts differ");
  }
  o.check(without_timing(aggregate_report(first, "x")) == without_timing(aggregate_report(second, "x")),
          "report content differs outside timing fields");
  o.check(workload_bytes(42, 51200) == workload_bytes(42, 51200), "workload differs");

  const auto dir = scratch_dir("det");
  for (const char* alg : {"aes", "des", "rsa", "elgamal", "paillier", "benaloh"}) {
    std::vector<std::string> texts;
    for (int run = 0; run < 2; ++run) {
      const std::string out = (dir / (std::string(alg) + std::to_string(run))).string();
      std::vector<std::string> args = {"crypto", "keygen", "--algorithm", alg, "--seed", "9", "-o", out};
      if (std::string(alg) != "aes" && std::string(alg) != "des") {
        args.push_back("--bits");
        args.push_back("512");
      }
      const auto r = cli(args);
      o.check(r.code == 0, std::string(alg) + " keygen failed: " + r.err);
      texts.push_back(r.code == 0 ? read_file(out) : "");
    }
    o.check(texts[0] == texts[1], std::string(alg) + " key files differ");
  }
  std::filesystem::remove_all(dir);
}

const char* status_tag(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Warn: return "WARN";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "table arithmetic oracle", 1.0, true, table_arithmetic},
      {2, "speed-up ratio oracle", 1.0, true, speedup_oracle},
      {3, "known-answer suite", 1.0, true, known_answers},
      {4, "homomorphic property suite", 60.0, true, homomorphic_properties},
      {5, "round-trip property suite", 60.0, true, round_trips},
      {6, "soft ordering checks", 600.0, false, soft_ordering},
      {7, "end-to-end CLI", 300.0, true, end_to_end},
      {8, "determinism", 300.0, true, determinism},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]...\n";
      return 2;
    }
  }

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_s) {
      std::ostringstream msg;
      msg << "runtime " << elapsed << " s exceeds " << c.budget_s << " s";
      if (c.gating) {
        outcome.fail(msg.str());
      } else {
        outcome.warn(msg.str());
      }
    }
    if (!c.gating && outcome.status == Status::Fail) outcome.status = Status::Warn;
    if (outcome.status == Status::Fail) ++failures;

    std::ostringstream time;
    time.precision(2);
    time << std::fixed << elapsed;
    std::cout << "[" << status_tag(outcome.status) << "] " << c.id << " " << c.title << " (" << time.str() << " s)\n";
    for (const auto& note : outcome.notes) std::cout << "    " << note << "\n";
  }
  return failures == 0 ? 0 : 1;
}
