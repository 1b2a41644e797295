#include "goldbach/estimator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "goldbach/pair_oracle.hpp"

namespace goldbach {

namespace {

Rational ratio(std::uint64_t a, std::uint64_t b) {
    return Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

void check_odd_prime(SieveCache& sieve, std::uint64_t p, std::uint64_t minimum) {
    const auto table = sieve.covering(std::max<std::uint64_t>(p, 2));
    if (p < minimum || p % 2 == 0 || !table->is_prime(p)) {
        throw DomainError("expected an odd prime >= " + std::to_string(minimum) + ", got " + std::to_string(p));
    }
}

}  // namespace

std::size_t SieveWeights::index_for(std::uint64_t x) {
    if (x < 3) {
        throw DomainError("W is defined for x >= 3, got " + std::to_string(x));
    }
    if (odd_primes_.empty() || odd_primes_.back() < x) {
        const auto table = sieve_.covering(x);
        for (const std::uint64_t p : table->primes()) {
            if (p > x) {
                break;
            }
            if (p == 2 || (!odd_primes_.empty() && p <= odd_primes_.back())) {
                continue;
            }
            const Rational previous_product = product_prefix_.empty() ? Rational(1) : product_prefix_.back();
            const Rational previous_w = w_prefix_.empty() ? Rational(0) : w_prefix_.back();
            w_prefix_.push_back(previous_w + previous_product * ratio(1, p));
            product_prefix_.push_back(previous_product * ratio(p - 2, p));
            odd_primes_.push_back(p);
        }
    }
    const auto it = std::upper_bound(odd_primes_.begin(), odd_primes_.end(), x);
    return static_cast<std::size_t>(std::distance(odd_primes_.begin(), it)) - 1;
}

Rational SieveWeights::w(std::uint64_t x) {
    std::lock_guard lock(mutex_);
    return w_prefix_[index_for(x)];
}

Rational SieveWeights::one_minus_two_w(std::uint64_t x) {
    std::lock_guard lock(mutex_);
    return Rational(1) - Rational(2) * w_prefix_[index_for(x)];
}

Rational SieveWeights::survivor_product(std::uint64_t x) {
    std::lock_guard lock(mutex_);
    return product_prefix_[index_for(x)];
}

std::optional<Rational> EstimateRecord::signed_error() const {
    if (!actual_ordered) {
        return std::nullopt;
    }
    return estimate - Rational(static_cast<std::int64_t>(*actual_ordered));
}

EstimateRecord estimate_prime_pairs(SieveWeights& weights, std::uint64_t n, bool with_actual) {
    if (n < 10) {
        throw DomainError("estimate undefined for n < 10, got " + std::to_string(n));
    }
    EstimateRecord out;
    out.n = n;
    out.pairs = total_odd_pairs(n);
    const auto table = weights.sieve().covering(n);
    out.bound = sieve_bound(*table, n);
    out.one_minus_2w = weights.one_minus_two_w(out.bound);
    out.estimate = Rational(static_cast<std::int64_t>(out.pairs)) * out.one_minus_2w;
    if (with_actual) {
        out.actual_ordered = prime_pair_count(*table, n, Convention::Ordered);
    }
    return out;
}

Rational estimate_nonprime_pairs(SieveWeights& weights, std::uint64_t n) {
    if (n < 10) {
        throw DomainError("estimate undefined for n < 10, got " + std::to_string(n));
    }
    const std::uint64_t pairs = total_odd_pairs(n);
    const auto table = weights.sieve().covering(n);
    return Rational(static_cast<std::int64_t>(2 * pairs)) * weights.w(sieve_bound(*table, n));
}

Rational telescoping_residual(SieveWeights& weights, std::uint64_t p) {
    check_odd_prime(weights.sieve(), p, 5);
    const std::uint64_t previous = largest_prime_below(*weights.sieve().covering(p), p);
    return weights.one_minus_two_w(p) - ratio(p - 2, p) * weights.one_minus_two_w(previous);
}

Rational growth_delta(SieveWeights& weights, std::uint64_t p) {
    check_odd_prime(weights.sieve(), p, 3);
    const std::uint64_t next = next_prime_above(weights.sieve(), p);
    const Rational spread = Rational(static_cast<std::int64_t>(next * (next - 2))) -
                            Rational(static_cast<std::int64_t>(p * p));
    return weights.one_minus_two_w(p) * ratio(1, 2) * spread;
}

}  // namespace goldbach
