#include "goldbach/prime_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace goldbach {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 18;

std::vector<std::uint32_t> simple_primes(std::uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            composite[j] = 1;
        }
    }
    return primes;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) {
        --r;
    }
    while ((r + 1) <= n / (r + 1)) {
        ++r;
    }
    return r;
}

SieveTable SieveTable::build(std::uint64_t limit) {
    if (limit < 2) {
        throw std::invalid_argument("sieve limit must be >= 2, got " + std::to_string(limit));
    }
    if (limit > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("sieve limit exceeds 32-bit factor table: " + std::to_string(limit));
    }

    SieveTable table;
    table.limit_ = limit;
    table.spf_.assign(limit + 1, 0);
    const auto base = simple_primes(isqrt(limit));

    // Fill one cache-sized window at a time; each base prime p only strikes m >= p*p,
    // so the first prime to touch m is its smallest factor.
    for (std::uint64_t lo = 2; lo <= limit; lo += kSegmentSize) {
        const std::uint64_t hi = std::min(limit, lo + kSegmentSize - 1);
        for (const std::uint64_t p : base) {
            const std::uint64_t square = p * p;
            if (square > hi) {
                break;
            }
            std::uint64_t m = std::max(square, (lo + p - 1) / p * p);
            for (; m <= hi; m += p) {
                if (table.spf_[m] == 0) {
                    table.spf_[m] = static_cast<std::uint32_t>(p);
                }
            }
        }
        for (std::uint64_t m = lo; m <= hi; ++m) {
            if (table.spf_[m] == 0) {
                table.spf_[m] = static_cast<std::uint32_t>(m);
                table.primes_.push_back(static_cast<std::uint32_t>(m));
            }
        }
    }
    return table;
}

void SieveTable::require(std::uint64_t m) const {
    if (m > limit_) {
        throw CoverageError("value " + std::to_string(m) + " exceeds sieve limit " + std::to_string(limit_));
    }
}

std::uint64_t SieveTable::smallest_factor(std::uint64_t m) const {
    if (m < 2) {
        throw std::invalid_argument("smallest_factor requires m >= 2, got " + std::to_string(m));
    }
    require(m);
    return spf_[m];
}

bool SieveTable::is_prime(std::uint64_t m) const {
    if (m < 2) {
        return false;
    }
    require(m);
    return spf_[m] == m;
}

SieveCache::SieveCache(std::uint64_t initial_limit)
    : table_(std::make_shared<const SieveTable>(SieveTable::build(std::max<std::uint64_t>(initial_limit, 2)))) {}

std::shared_ptr<const SieveTable> SieveCache::current() const {
    std::lock_guard lock(mutex_);
    return table_;
}

std::shared_ptr<const SieveTable> SieveCache::covering(std::uint64_t limit) {
    std::lock_guard lock(mutex_);
    if (table_->limit() >= limit) {
        return table_;
    }
    std::uint64_t next = table_->limit();
    while (next < limit) {
        next *= 2;
    }
    table_ = std::make_shared<const SieveTable>(SieveTable::build(next));
    return table_;
}

std::uint64_t largest_prime_below(const SieveTable& table, std::uint64_t x) {
    if (x <= 2) {
        throw DomainError("no prime below " + std::to_string(x));
    }
    table.require(x - 1);
    const auto primes = table.primes();
    const auto it = std::lower_bound(primes.begin(), primes.end(), x);
    return *std::prev(it);
}

std::optional<std::uint64_t> next_prime_above(const SieveTable& table, std::uint64_t x) {
    const auto primes = table.primes();
    const auto it = std::upper_bound(primes.begin(), primes.end(), x);
    if (it == primes.end()) {
        return std::nullopt;
    }
    return *it;
}

std::uint64_t next_prime_above(SieveCache& cache, std::uint64_t x) {
    auto table = cache.covering(std::max<std::uint64_t>(x + 1, 2));
    for (;;) {
        if (const auto p = next_prime_above(*table, x)) {
            return *p;
        }
        table = cache.covering(table->limit() * 2);
    }
}

std::uint64_t sieve_bound(const SieveTable& table, std::uint64_t n) {
    if (n < 10) {
        throw DomainError("sieve bound undefined for n < 10, got " + std::to_string(n));
    }
    // p < sqrt(n)  <=>  p <= isqrt(n - 1)
    return largest_prime_below(table, isqrt(n - 1) + 1);
}

}  // namespace goldbach
