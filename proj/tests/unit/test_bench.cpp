#include <doctest.h>

#include <vector>

#include "cloudbench/bench.hpp"
#include "cloudbench/error.hpp"
#include "published_data.hpp"

using namespace cloudbench;

namespace {

std::int64_t mean(std::vector<std::int64_t> v) { return round_half_up_mean(v); }

Report synthetic(const std::string& label, const std::map<Algorithm, std::int64_t>& averages) {
  Report r;
  r.environment_label = label;
  r.per_algorithm_average_ms = averages;
  return r;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("row averages round half up") {
  CHECK(mean({234, 265, 312, 249, 250}) == 262);
  CHECK(mean({31, 38, 38, 32, 30}) == 34);
  CHECK(mean({4725, 4516, 3722, 4014, 1786}) == 3753);
  CHECK(mean({9, 9, 9, 9, 9}) == 9);
  CHECK(mean({1, 2}) == 2);
  CHECK(mean({0}) == 0);
  CHECK_THROWS_AS(mean({}), DomainError);
}

TEST_CASE("per-algorithm averages") {
  CHECK(mean({262, 264, 267, 275, 291}) == 272);
  CHECK(mean({2873, 3753, 4764, 5463, 6284}) == 4627);

  const BenchCase p{Algorithm::Paillier, std::nullopt, 512, true, 42};
  const Report one = aggregate_report({make_row(p, {344, 330, 360, 356, 337})}, "x");
  CHECK(one.per_algorithm_average_ms.at(Algorithm::Paillier) == 345);
  CHECK_THROWS_AS(aggregate_report({}, "x"), DomainError);
}

TEST_CASE("speed-up ratio truncates") {
  CHECK(speedup(272, 242).str() == "1.12");
  CHECK(speedup(4627, 8807).str() == "0.52");
  CHECK(speedup(31, 21).str() == "1.47");
  CHECK(speedup(5, 5).str() == "1.00");
  CHECK(speedup(0, 5).str() == "0.00");
  CHECK(speedup(1000, 3).str() == "333.33");
  CHECK_THROWS_AS(speedup(1, 0), DomainError);
  for (std::int64_t cloud = 1; cloud < 400; ++cloud) CHECK(speedup(300, cloud) >= speedup(300, cloud + 1));
}

TEST_CASE("compare reports") {
  const auto tables = published::load();
  const auto table = compare_reports(synthetic("l", tables.local.per_algorithm), synthetic("c", tables.cloud.per_algorithm));
  REQUIRE(table.entries.size() == 8);
  for (const auto& e : table.entries) CHECK(e.ratio->str() == tables.speedup.at(e.algorithm));

  const auto same = compare_reports(synthetic("a", tables.local.per_algorithm), synthetic("b", tables.local.per_algorithm));
  for (const auto& e : same.entries) CHECK(e.ratio->str() == "1.00");

  auto missing = tables.local.per_algorithm;
  missing.erase(Algorithm::Benaloh);
  const auto partial = compare_reports(synthetic("l", missing), synthetic("c", tables.cloud.per_algorithm));
  CHECK(partial.entries.size() == 7);
  CHECK(partial.only_cloud == std::vector<Algorithm>{Algorithm::Benaloh});
  CHECK(partial.only_local.empty());

  const auto zero = compare_reports(synthetic("l", {{Algorithm::Md5, 3}, {Algorithm::Aes, 4}}),
                                    synthetic("c", {{Algorithm::Md5, 0}, {Algorithm::Aes, 2}}));
  REQUIRE(zero.entries.size() == 2);
  CHECK(zero.entries[0].ratio->str() == "2.00");
  CHECK_FALSE(zero.entries[1].ratio.has_value());

  CHECK_THROWS_AS(compare_reports(synthetic("l", {{Algorithm::Aes, 1}}), synthetic("c", {{Algorithm::Des, 1}})),
                  DomainError);
}

TEST_CASE("algorithm names and sweeps") {
  for (Algorithm a : kAllAlgorithms) CHECK(parse_algorithm(algorithm_name(a)) == a);
  CHECK(parse_algorithm("sha") == Algorithm::Sha1);
  CHECK(parse_algorithm("ElGamal") == Algorithm::ElGamal);
  CHECK_THROWS_AS(parse_algorithm("rc4"), DomainError);
  CHECK(sweep_sizes(Algorithm::Aes) == std::vector<std::size_t>{10240, 20480, 30720, 40960, 51200});
  CHECK(sweep_sizes(Algorithm::Rsa) == std::vector<std::size_t>{100, 200, 300, 400, 501});
  CHECK(sweep_sizes(Algorithm::Benaloh).empty());
  CHECK_THROWS_AS(validate_case({Algorithm::Paillier, 100, 512, true, 1}), DomainError);
  CHECK_THROWS_AS(validate_case({Algorithm::Md5, 100, 128, true, 1}), DomainError);
  CHECK_THROWS_AS(validate_case({Algorithm::Aes, std::nullopt, 128, true, 1}), DomainError);
  CHECK_NOTHROW(validate_case({Algorithm::Sha1, 100, std::nullopt, true, 1}));
}

TEST_CASE("run_case produces verified rows") {
  RunContext ctx;
  for (const BenchCase& c : {BenchCase{Algorithm::Aes, 1024, 128, true, 1}, BenchCase{Algorithm::Des, 1000, 56, true, 1},
                             BenchCase{Algorithm::Md5, 100, std::nullopt, true, 1},
                             BenchCase{Algorithm::Sha1, 100, std::nullopt, true, 1},
                             BenchCase{Algorithm::Rsa, 100, 256, true, 1},
                             BenchCase{Algorithm::ElGamal, 100, 256, true, 1},
                             BenchCase{Algorithm::Paillier, std::nullopt, 128, true, 1},
                             BenchCase{Algorithm::Benaloh, std::nullopt, 128, true, 1}}) {
    SeededRng rng = case_rng(c);
    const BenchRow row = run_case(c, rng, ctx);
    CHECK(row.bench_case == c);
    CHECK(row.average_ms == round_half_up_mean(row.samples_ms));
    CHECK_FALSE(row.material_digest.empty());

    SeededRng again = case_rng(c);
    RunContext fresh;
    CHECK(run_case(c, again, fresh).material_digest == row.material_digest);
  }
}

}
