#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "goldbach/pair_oracle.hpp"
#include "goldbach/scan_engine.hpp"
#include "oracles.hpp"

using namespace goldbach;

namespace {

const SieveTable& table() {
    static const SieveTable t = SieveTable::build(60000);
    return t;
}

}  // namespace

TEST_CASE("parse_family") {
    CHECK(parse_family("2p").coefficient == 2);
    CHECK(parse_family("30p").coefficient == 30);
    CHECK(parse_family("8p").coefficient == 8);
    CHECK(parse_family("16p").coefficient == 16);
    CHECK(parse_family("pow2").power_of_two);
    CHECK_THROWS_AS(parse_family("14p"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("3p"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("p"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("six"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("6q"), std::invalid_argument);
}

TEST_CASE("family_members") {
    using V = std::vector<std::uint64_t>;
    CHECK(family_members(table(), parse_family("2p"), 30) == V{6, 10, 14, 22, 26});
    CHECK(family_members(table(), parse_family("30p"), 400) == V{210, 330, 390});
    CHECK(family_members(table(), parse_family("pow2"), 100) == V{8, 16, 32, 64});
    CHECK(family_members(table(), parse_family("6p"), 100) == V{30, 42, 66, 78});
    CHECK(family_members(table(), parse_family("4p"), 60) == V{12, 20, 28, 44, 52});
    CHECK_THROWS_AS(family_members(table(), parse_family("2p"), 5), std::invalid_argument);

    for (const char* label : {"2p", "6p", "10p", "30p", "4p", "8p", "pow2"}) {
        const Family f = parse_family(label);
        const auto members = family_members(table(), f, 20000);
        for (std::size_t i = 0; i < members.size(); ++i) {
            REQUIRE(members[i] % 2 == 0);
            if (i > 0) {
                REQUIRE(members[i - 1] < members[i]);
            }
            if (!f.power_of_two) {
                REQUIRE(members[i] % f.coefficient == 0);
                REQUIRE(oracle::is_prime(members[i] / f.coefficient));
            }
        }
    }
}

TEST_CASE("family_scan records") {
    const auto records = family_scan(table(), {parse_family("2p"), parse_family("6p"), parse_family("30p")}, 200);
    bool saw94 = false, saw90 = false;
    for (const auto& r : records) {
        REQUIRE(r.pairs == r.n / 2 - 2);
        REQUIRE(r.ordered == 2 * r.unordered - (oracle::is_prime(r.n / 2) ? 1 : 0));
        REQUIRE(r.unordered == oracle::unordered_prime_pairs(r.n));
        if (r.n == 94) {
            CHECK(r.family == "2p");
            CHECK(r.unordered == 5);
            saw94 = true;
        }
        if (r.n == 90) {
            saw90 = true;
        }
    }
    CHECK(saw94);
    CHECK_FALSE(saw90);  // 90 = 30 * 3 and 3 is not above 5
    // sorted by label, then n
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& a = records[i - 1];
        const auto& b = records[i];
        REQUIRE((a.family < b.family || (a.family == b.family && a.n < b.n)));
    }

    const auto pow = family_scan(table(), {parse_family("pow2"), parse_family("6p")}, 100);
    CHECK(pow.front().family == "6p");
    CHECK(pow.back().family == "pow2");
    CHECK_FALSE(pow.back().p.has_value());
}

TEST_CASE("family_scan is deterministic across thread counts") {
    const std::vector<Family> fams = {parse_family("30p"), parse_family("2p"), parse_family("10p"),
                                      parse_family("6p"), parse_family("2p")};
    const auto serial = family_scan(table(), fams, 20000, ScanOptions{1});
    const auto parallel = family_scan(table(), fams, 20000, ScanOptions{8});
    CHECK(serial == parallel);
    CHECK(family_scan(table(), fams, 20000, ScanOptions{3}) == serial);
}

TEST_CASE("dyadic means") {
    std::vector<ScanRecord> records = {
        {"a", 1, 1100, 0, 0, 10}, {"a", 1, 1500, 0, 0, 20}, {"b", 1, 1200, 0, 0, 7},
        {"a", 1, 2100, 0, 0, 40}, {"b", 1, 999, 0, 0, 100},
    };
    const auto iv = dyadic_means(records, 1000, 2500);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].lo == 1024);
    CHECK(iv[0].hi == 2047);
    CHECK(iv[0].mean("a") == doctest::Approx(15.0));
    CHECK(iv[0].mean("b") == doctest::Approx(7.0));
    CHECK(iv[1].lo == 2048);
    CHECK(iv[1].hi == 2500);
    CHECK(iv[1].mean("a") == doctest::Approx(40.0));
    CHECK_FALSE(iv[1].mean("b").has_value());
}

TEST_CASE("estimate_vs_actual_scan") {
    SieveCache sieve;
    SieveWeights weights(sieve);
    const auto records = estimate_vs_actual_scan(weights, 1000, ScanOptions{4});
    REQUIRE_FALSE(records.empty());
    CHECK(records.front().n == 10);
    CHECK(records.front().estimate == Rational(1));
    CHECK(records.front().actual_ordered == 3u);
    bool saw998 = false;
    for (const auto& r : records) {
        REQUIRE(r.n % 2 == 0);
        REQUIRE(oracle::is_prime(r.n / 2));
        REQUIRE(r.actual_ordered == oracle::ordered_prime_pairs(r.n));
        if (r.n == 998) {
            saw998 = true;
            CHECK(r.estimate.to_fixed(6) == "30.859486");
            CHECK(r.actual_ordered == 33u);
        }
    }
    CHECK(saw998);
    CHECK(records.back().n == 998);

    const auto serial = estimate_vs_actual_scan(weights, 3000, ScanOptions{1});
    const auto parallel = estimate_vs_actual_scan(weights, 3000, ScanOptions{6});
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        REQUIRE(serial[i].n == parallel[i].n);
        REQUIRE(serial[i].estimate == parallel[i].estimate);
        REQUIRE(serial[i].actual_ordered == parallel[i].actual_ordered);
    }
}

TEST_CASE("polignac_count") {
    CHECK(polignac_count(table(), 100, 2) == 8);
    CHECK(polignac_count(table(), 20, 2) == 4);
    CHECK(polignac_count(table(), 30, 4) == 4);
    CHECK(polignac_count(table(), 10, 2) == 2);
    CHECK(polignac_count(table(), 5, 2) == 1);
    CHECK_THROWS_AS(polignac_count(table(), 100, 3), std::invalid_argument);
    CHECK_THROWS_AS(polignac_count(table(), 100, 0), std::invalid_argument);
    CHECK_THROWS_AS(polignac_count(table(), 4, 2), std::invalid_argument);

    const auto flags = oracle::eratosthenes(5000);
    for (const std::uint64_t gap : {2u, 4u, 6u, 30u}) {
        for (std::uint64_t n = 5; n <= 5000; n += 37) {
            std::uint64_t direct = 0;
            for (std::uint64_t x = 2; x + gap <= n; ++x) {
                direct += flags[x] && flags[x + gap];
            }
            REQUIRE(polignac_count(table(), n, gap) == direct);
        }
    }
}

TEST_CASE("twin_scan") {
    const auto points = twin_sample_points(10200);
    CHECK(points.front() == 10);
    CHECK(points[1] == 12);
    CHECK(points.back() == 10200);
    CHECK(std::count(points.begin(), points.end(), 10000) == 1);
    CHECK(std::count(points.begin(), points.end(), 10050) == 1);
    CHECK(std::count(points.begin(), points.end(), 10002) == 0);

    SieveCache sieve;
    SieveWeights weights(sieve);
    const auto records = twin_scan(weights, 12000);
    REQUIRE(records.size() == 4996 + 40);  // 10..10000 by 2, then 10050..12000 by 50
    CHECK(records[0].n == 10);
    CHECK(records[0].twin_count == 2);
    CHECK(records[0].estimate == Rational(1));
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        REQUIRE(r.twin_count == polignac_count(table(), r.n, 2));
        if (i > 0) {
            REQUIRE(records[i - 1].twin_count <= r.twin_count);
        }
        if (r.n == 100) {
            CHECK(r.twin_count == 8);
            CHECK(r.estimate.to_fixed(6) == "6.857143");
        }
    }
}
