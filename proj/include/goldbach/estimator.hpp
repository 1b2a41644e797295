#pragma once

// The cumulative sieve fraction
//
//   W(x) = sum_{odd primes p <= x} (1/p) * prod_{odd primes q < p} (q - 2)/q
//
// and the quantities derived from it, all in exact rational arithmetic:
//
//   1 - 2W(p)        telescopes to prod_{odd primes q <= p} (q - 2)/q
//   estimate(n)      P * (1 - 2W(l(sqrt n))),  P = n/2 - 2
//   growth_delta(p)  ((1 - 2W(p)) / 2) * (g(p)(g(p) - 2) - p^2)

#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "goldbach/prime_core.hpp"
#include "goldbach/rational.hpp"

namespace goldbach {

// Memoized prefix sums of W and prefix products over the odd primes. The
// sum and the product are accumulated independently so that comparing
// them is a real check of the telescoping identity. Thread-safe; results do
// not depend on call order.
class SieveWeights {
public:
    explicit SieveWeights(SieveCache& sieve) : sieve_(sieve) {}

    SieveCache& sieve() { return sieve_; }

    // W at the largest prime <= x. DomainError for x < 3.
    Rational w(std::uint64_t x);
    // 1 - 2W(x), from the summed series.
    Rational one_minus_two_w(std::uint64_t x);
    // prod_{odd primes q <= x} (q - 2)/q, from the running product.
    Rational survivor_product(std::uint64_t x);

private:
    // Index into odd_primes_ of the largest odd prime <= x, extending the memo as needed.
    std::size_t index_for(std::uint64_t x);

    SieveCache& sieve_;
    std::mutex mutex_;
    std::vector<std::uint64_t> odd_primes_;
    std::vector<Rational> w_prefix_;
    std::vector<Rational> product_prefix_;
};

struct EstimateRecord {
    std::uint64_t n = 0;
    std::uint64_t pairs = 0;   // P
    std::uint64_t bound = 0;   // l(sqrt n)
    Rational one_minus_2w;
    Rational estimate;
    std::optional<std::uint64_t> actual_ordered;

    // estimate - actual, when actual is known.
    std::optional<Rational> signed_error() const;
};

// DomainError for n < 10; invalid_argument for odd n.
EstimateRecord estimate_prime_pairs(SieveWeights& weights, std::uint64_t n, bool with_actual = false);

// 2P * W(l(sqrt n)); equals P minus the prime-pair estimate.
Rational estimate_nonprime_pairs(SieveWeights& weights, std::uint64_t n);

// (1 - 2W(p)) - ((p - 2)/p) * (1 - 2W(l(p))). Zero for every odd prime p >= 5.
Rational telescoping_residual(SieveWeights& weights, std::uint64_t p);

Rational growth_delta(SieveWeights& weights, std::uint64_t p);

}  // namespace goldbach
