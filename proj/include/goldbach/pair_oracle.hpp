#pragma once

// Ground-truth enumeration of the pair universe {(x, n - x) : x odd, 3 <= x <= n - 3}.
//
// Every pair is either a prime pair or a non-prime pair. A non-prime pair is
// attributed to its witness prime: the smallest odd prime p that divides a
// coordinate other than p itself. Witnesses partition the non-prime pairs, so
// per-prime counts add up to P(n) minus the ordered prime-pair count.
//
// All functions take a SieveTable covering at least n; they are pure and may
// run concurrently against one shared table.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "goldbach/prime_core.hpp"

namespace goldbach {

enum class Convention { Ordered, Unordered };
enum class PairKind { PrimePair, NonPrime };

const char* to_string(Convention convention);
Convention parse_convention(std::string_view text);

struct PairClass {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    PairKind kind = PairKind::PrimePair;
    std::optional<std::uint64_t> witness;  // set iff kind == NonPrime
};

struct BreakdownRow {
    std::uint64_t prime = 0;
    std::uint64_t count = 0;

    friend bool operator==(const BreakdownRow&, const BreakdownRow&) = default;
};

struct Breakdown {
    std::uint64_t n = 0;
    std::vector<BreakdownRow> rows;  // every odd prime <= sieve_bound(n), zero rows included
    std::uint64_t total = 0;
    std::uint64_t prime_pairs = 0;   // ordered
    Convention convention = Convention::Ordered;
};

// P(n) = n/2 - 2. std::invalid_argument unless n is even and >= 6.
std::uint64_t total_odd_pairs(std::uint64_t n);

PairClass classify_pair(const SieveTable& table, std::uint64_t n, std::uint64_t x);

std::uint64_t prime_pair_count(const SieveTable& table, std::uint64_t n,
                               Convention convention = Convention::Ordered);

// Pairs with (p | x and x != p) or (p | y and y != p). p must be an odd prime.
std::uint64_t divisible_pair_count(const SieveTable& table, std::uint64_t n, std::uint64_t p);

// Pairs meeting the divisible_pair_count condition for both p and q.
std::uint64_t jointly_divisible_pair_count(const SieveTable& table, std::uint64_t n, std::uint64_t p,
                                           std::uint64_t q);

// Non-prime pairs whose witness is p.
std::uint64_t only_by_count(const SieveTable& table, std::uint64_t n, std::uint64_t p);

// Counts by witness in a single pass. Empty rows for n < 10.
Breakdown breakdown(const SieveTable& table, std::uint64_t n);

// Ascending by x. Unordered keeps x <= y.
std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_pair_list(const SieveTable& table, std::uint64_t n,
                                                                     Convention convention = Convention::Ordered);

}  // namespace goldbach
