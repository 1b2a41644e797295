#pragma once

// Smallest-prime-factor sieve and the prime-neighbour functions built on it.
//
//   largest_prime_below(x)  -> largest prime p with p < x   (strict)
//   next_prime_above(x)     -> smallest prime p with p > x  (strict)
//   sieve_bound(n)          -> largest prime p with p*p < n
//
// A SieveTable is immutable once built and may be shared between threads.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "goldbach/errors.hpp"

namespace goldbach {

// floor(sqrt(n)) without floating-point error.
std::uint64_t isqrt(std::uint64_t n);

class SieveTable {
public:
    // Throws std::invalid_argument if limit < 2 or limit does not fit the 32-bit factor table.
    static SieveTable build(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    // Requires 2 <= m <= limit().
    std::uint64_t smallest_factor(std::uint64_t m) const;
    // False for 0 and 1; CoverageError above limit().
    bool is_prime(std::uint64_t m) const;

    // Every prime <= limit(), ascending.
    std::span<const std::uint32_t> primes() const { return primes_; }

    void require(std::uint64_t m) const;

private:
    SieveTable() = default;

    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

// Holds the current sieve and grows it by doubling when a query runs past it.
// Readers get a shared_ptr snapshot that stays valid after later extensions.
class SieveCache {
public:
    explicit SieveCache(std::uint64_t initial_limit = 1u << 16);

    std::shared_ptr<const SieveTable> current() const;
    std::shared_ptr<const SieveTable> covering(std::uint64_t limit);

private:
    mutable std::mutex mutex_;
    std::shared_ptr<const SieveTable> table_;
};

// Throws DomainError for x <= 2, CoverageError if x - 1 exceeds the table.
std::uint64_t largest_prime_below(const SieveTable& table, std::uint64_t x);

// nullopt when the answer lies beyond the table.
std::optional<std::uint64_t> next_prime_above(const SieveTable& table, std::uint64_t x);
std::uint64_t next_prime_above(SieveCache& cache, std::uint64_t x);

// l(sqrt(n)), i.e. the largest prime whose square is below n. DomainError for n < 10.
std::uint64_t sieve_bound(const SieveTable& table, std::uint64_t n);

}  // namespace goldbach
