#include "goldbach/pair_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace goldbach {

namespace {

void check_n(std::uint64_t n) {
    if (n < 6 || n % 2 != 0) {
        throw std::invalid_argument("n must be even and >= 6, got " + std::to_string(n));
    }
}

void check_odd_prime(const SieveTable& table, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !table.is_prime(p)) {
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    }
}

// Smallest-factor of v if v is composite, else 0.
std::uint64_t composite_factor(const SieveTable& table, std::uint64_t v) {
    const std::uint64_t f = table.smallest_factor(v);
    return f == v ? 0 : f;
}

std::uint64_t witness_of(const SieveTable& table, std::uint64_t x, std::uint64_t y) {
    const std::uint64_t fx = composite_factor(table, x);
    const std::uint64_t fy = composite_factor(table, y);
    if (fx == 0) {
        return fy;
    }
    if (fy == 0) {
        return fx;
    }
    return std::min(fx, fy);
}

bool hits(std::uint64_t v, std::uint64_t p) { return v % p == 0 && v != p; }

}  // namespace

const char* to_string(Convention convention) {
    return convention == Convention::Ordered ? "ordered" : "unordered";
}

Convention parse_convention(std::string_view text) {
    if (text == "ordered") {
        return Convention::Ordered;
    }
    if (text == "unordered") {
        return Convention::Unordered;
    }
    throw std::invalid_argument("unknown convention '" + std::string(text) + "'");
}

std::uint64_t total_odd_pairs(std::uint64_t n) {
    check_n(n);
    return n / 2 - 2;
}

PairClass classify_pair(const SieveTable& table, std::uint64_t n, std::uint64_t x) {
    check_n(n);
    if (x % 2 == 0 || x < 3 || x > n - 3) {
        throw std::invalid_argument("x must be odd with 3 <= x <= n - 3, got " + std::to_string(x));
    }
    table.require(n - 3);
    PairClass out{x, n - x, PairKind::PrimePair, std::nullopt};
    if (const std::uint64_t w = witness_of(table, x, n - x); w != 0) {
        out.kind = PairKind::NonPrime;
        out.witness = w;
    }
    return out;
}

std::uint64_t prime_pair_count(const SieveTable& table, std::uint64_t n, Convention convention) {
    check_n(n);
    table.require(n - 3);
    const std::uint64_t last = convention == Convention::Ordered ? n - 3 : n / 2;
    std::uint64_t count = 0;
    for (std::uint64_t x = 3; x <= last; x += 2) {
        if (table.is_prime(x) && table.is_prime(n - x)) {
            ++count;
        }
    }
    return count;
}

std::uint64_t divisible_pair_count(const SieveTable& table, std::uint64_t n, std::uint64_t p) {
    check_n(n);
    check_odd_prime(table, p);
    std::uint64_t count = 0;
    for (std::uint64_t x = 3; x <= n - 3; x += 2) {
        if (hits(x, p) || hits(n - x, p)) {
            ++count;
        }
    }
    return count;
}

std::uint64_t jointly_divisible_pair_count(const SieveTable& table, std::uint64_t n, std::uint64_t p,
                                           std::uint64_t q) {
    check_n(n);
    check_odd_prime(table, p);
    check_odd_prime(table, q);
    std::uint64_t count = 0;
    for (std::uint64_t x = 3; x <= n - 3; x += 2) {
        const std::uint64_t y = n - x;
        if ((hits(x, p) || hits(y, p)) && (hits(x, q) || hits(y, q))) {
            ++count;
        }
    }
    return count;
}

std::uint64_t only_by_count(const SieveTable& table, std::uint64_t n, std::uint64_t p) {
    check_n(n);
    check_odd_prime(table, p);
    table.require(n - 3);
    std::uint64_t count = 0;
    for (std::uint64_t x = 3; x <= n - 3; x += 2) {
        if (witness_of(table, x, n - x) == p) {
            ++count;
        }
    }
    return count;
}

Breakdown breakdown(const SieveTable& table, std::uint64_t n) {
    check_n(n);
    table.require(n - 3);
    Breakdown out;
    out.n = n;
    if (n < 10) {
        out.prime_pairs = prime_pair_count(table, n, Convention::Ordered);
        return out;
    }

    const std::uint64_t bound = sieve_bound(table, n);
    std::vector<std::uint64_t> by_witness(bound + 1, 0);
    for (std::uint64_t x = 3; x <= n - 3; x += 2) {
        const std::uint64_t w = witness_of(table, x, n - x);
        if (w == 0) {
            ++out.prime_pairs;
        } else {
            ++by_witness.at(w);
        }
    }
    for (const std::uint64_t p : table.primes()) {
        if (p > bound) {
            break;
        }
        if (p == 2) {
            continue;
        }
        out.rows.push_back({p, by_witness[p]});
        out.total += by_witness[p];
    }
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_pair_list(const SieveTable& table, std::uint64_t n,
                                                                     Convention convention) {
    check_n(n);
    table.require(n - 3);
    const std::uint64_t last = convention == Convention::Ordered ? n - 3 : n / 2;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t x = 3; x <= last; x += 2) {
        if (table.is_prime(x) && table.is_prime(n - x)) {
            out.emplace_back(x, n - x);
        }
    }
    return out;
}

}  // namespace goldbach
