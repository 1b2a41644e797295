#pragma once

// Closed-form divisibility counts and their large-n products, kept apart from
// the enumeration oracle so the two can be compared.
//
// With P = n/2 - 2 and p an odd prime:
//   p | n      ->  (P + 2) / p = n / (2p)
//   p does not divide n -> 2 * floor((P - (p - 1)/2) / p), clamped at 0
//
// The large-n share of non-prime pairs witnessed by p (for p coprime to n) is
//   P * (2/p) * prod_{odd primes q < p} (q - 2)/q.

#include <cstdint>
#include <vector>

#include "goldbach/prime_core.hpp"
#include "goldbach/rational.hpp"

namespace goldbach {

enum class DivisibilityCase { Divides, NotDivides };

const char* to_string(DivisibilityCase c);

struct FormulaValue {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    DivisibilityCase divisibility = DivisibilityCase::NotDivides;
    std::uint64_t value = 0;
    // False only if p | n but 2p does not divide n; unreachable for odd p and even n.
    bool exact = true;
};

FormulaValue formula_divisible(const SieveTable& table, std::uint64_t n, std::uint64_t p);

// One entry per odd prime p <= sieve_bound(n). `extra_rows` appends that many
// primes past the bound (the n = 998 table also lists 37). Empty for n < 10.
std::vector<FormulaValue> formula_table(const SieveTable& table, std::uint64_t n, unsigned extra_rows = 0);

// Exact value; DomainError when p | n, invalid_argument when p > sieve_bound(n).
Rational asymptotic_only_by(const SieveTable& table, std::uint64_t n, std::uint64_t p);

}  // namespace goldbach

namespace goldbach {

// One line of the per-prime table: closed form next to the enumerated counts.
struct ComparisonRow {
    std::uint64_t p = 0;
    std::uint64_t formula = 0;
    std::uint64_t divisible_oracle = 0;
    std::uint64_t only_by_oracle = 0;

    friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

std::vector<ComparisonRow> compare_with_oracle(const SieveTable& table, std::uint64_t n, unsigned extra_rows = 0);

}  // namespace goldbach
