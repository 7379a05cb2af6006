#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhs/irregular.hpp"

#include <cstdio>
#include <filesystem>

using namespace mhs;

TEST_CASE("pair detection") {
    CHECK(irregular_pairs_of(37) == std::vector<std::uint64_t>{32});
    CHECK(irregular_pairs_of(7).empty());
    CHECK(irregular_pairs_of(59) == std::vector<std::uint64_t>{44});
    CHECK(irregular_pairs_of(67) == std::vector<std::uint64_t>{58});
    CHECK(irregular_pairs_of(157).size() == 2); // index 2
    CHECK(irregular_index(37) == 1);
    CHECK(irregular_index(157) == 2);
    CHECK(irregular_index(11) == 0);
}

TEST_CASE("scan") {
    PairCache cache = scan(100, PairCache{});
    REQUIRE(cache.pairs.size() == 3);
    CHECK(cache.pairs[0] == IrregularPair{37, 32});
    CHECK(cache.pairs[1] == IrregularPair{59, 44});
    CHECK(cache.pairs[2] == IrregularPair{67, 58});
    CHECK(cache.p_max == 100);

    CHECK(scan(36, PairCache{}).pairs.empty());

    PairCache again = scan(100, cache);
    CHECK(again.pairs == cache.pairs); // idempotent

    PairCache extended = scan(110, cache);
    REQUIRE(extended.pairs.size() == 5);
    CHECK(extended.pairs[3] == IrregularPair{101, 68});
    CHECK(extended.pairs[4] == IrregularPair{103, 24});
    CHECK(bernoulli_single_mod(68, 101) == 0);
    CHECK(bernoulli_single_mod(24, 103) == 0);
}

TEST_CASE("scan is order-stable under parallelism") {
    PairCache serial = scan(400, PairCache{}, 1);
    PairCache parallel = scan(400, PairCache{}, 4);
    CHECK(serial.pairs == parallel.pairs);
    CHECK(serial.p_max == parallel.p_max);
}

TEST_CASE("cache round trip and header") {
    PairCache cache = scan(150, PairCache{});
    std::string path =
        (std::filesystem::temp_directory_path() / "mhs_pairs_test.csv").string();
    save_cache(cache, path);

    std::ifstream is(path);
    std::string first;
    std::getline(is, first);
    CHECK(first == "# pmax=150");
    std::string second;
    std::getline(is, second);
    CHECK(second == "37,32");

    PairCache loaded = load_cache(path);
    CHECK(loaded.p_max == cache.p_max);
    CHECK(loaded.pairs == cache.pairs);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(load_cache("/nonexistent/cache.csv"), std::runtime_error);
}

TEST_CASE("checkpoints leave consistent files") {
    std::string path =
        (std::filesystem::temp_directory_path() / "mhs_pairs_ckpt.csv").string();
    int checkpoints = 0;
    PairCache cache = scan(700, PairCache{}, 1, {}, [&](const PairCache& snap) {
        ++checkpoints;
        save_cache(snap, path);
        PairCache read_back = load_cache(path);
        CHECK(read_back.pairs == snap.pairs);
    });
    CHECK(checkpoints >= 2);
    PairCache final = load_cache(path);
    CHECK(final.pairs == cache.pairs);
    CHECK(final.p_max == 700);
    std::filesystem::remove(path);
}

TEST_CASE("tabulate") {
    PairCache cache = scan(1000, PairCache{});
    REQUIRE(cache.pairs.size() >= 50);

    // parity: p odd and t even make p-t always odd
    DistributionTable m2 = tabulate(cache, 2, {50});
    CHECK(m2.counts[0][0] == 0);
    CHECK(m2.counts[1][0] == 50);

    DistributionTable m3 = tabulate(cache, 3, {10, 30, 50});
    for (std::size_t j = 0; j < 3; ++j) {
        std::uint64_t total = 0;
        for (std::uint64_t c = 0; c < 3; ++c) total += m3.counts[c][j];
        CHECK(total == m3.milestones[j]);
    }
    // milestone monotonicity per class
    for (std::uint64_t c = 0; c < 3; ++c) {
        CHECK(m3.counts[c][0] <= m3.counts[c][1]);
        CHECK(m3.counts[c][1] <= m3.counts[c][2]);
    }

    CHECK_THROWS_AS(tabulate(cache, 3, {1000000}), std::invalid_argument);
    CHECK_THROWS_AS(tabulate(cache, 1, {10}), std::invalid_argument);
}

TEST_CASE("index filter partitions the pair count") {
    PairCache cache = scan(1000, PairCache{});
    std::size_t total = 0;
    for (std::size_t idx = 1; idx <= 4; ++idx) {
        std::map<std::uint64_t, std::size_t> index_of;
        for (const auto& pr : cache.pairs) ++index_of[pr.p];
        std::size_t primes_with_idx = 0;
        for (const auto& [p, i] : index_of)
            if (i == idx) ++primes_with_idx;
        total += idx * primes_with_idx;
    }
    CHECK(total == cache.pairs.size());

    // filtered tabulation only sees matching pairs
    DistributionTable t1 = tabulate(cache, 3, {5}, 1);
    std::uint64_t sum = 0;
    for (std::uint64_t c = 0; c < 3; ++c) sum += t1.counts[c][0];
    CHECK(sum == 5);
}

TEST_CASE("percent formatting rounds half-up to two decimals") {
    CHECK(DistributionTable::percent(322, 1000) == "32.20");
    CHECK(DistributionTable::percent(1, 3) == "33.33");
    CHECK(DistributionTable::percent(1, 8) == "12.50");
    CHECK(DistributionTable::percent(1, 16) == "6.25");
    CHECK(DistributionTable::percent(5, 16) == "31.25");
    CHECK(DistributionTable::percent(1, 32) == "3.13"); // 3.125 rounds up
    CHECK(DistributionTable::percent(50, 50) == "100.00");
}

TEST_CASE("renderings") {
    PairCache cache = scan(200, PairCache{});
    DistributionTable t = tabulate(cache, 3, {3});
    std::string csv = t.to_csv();
    CHECK(csv.find("class,milestone,count,percent") == 0);
    CHECK(csv.find("0,3,") != std::string::npos);
    std::string text = t.to_text();
    CHECK(text.find("N(0,m)") != std::string::npos);
    CHECK(text.find("P(2,m)") != std::string::npos);
}

TEST_CASE("every cached pair re-verifies under the independent oracle") {
    PairCache cache = scan(600, PairCache{});
    for (const auto& pr : cache.pairs) {
        CHECK(bernoulli_single_mod(pr.t, pr.p) == 0);
        CHECK(pr.t % 2 == 0);
        CHECK(pr.t >= 4);
        CHECK(pr.t <= pr.p - 3);
    }
}
