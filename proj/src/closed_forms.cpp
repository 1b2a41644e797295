#include "goldbach/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "goldbach/pair_oracle.hpp"

namespace goldbach {

namespace {

void check_odd_prime(const SieveTable& table, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !table.is_prime(p)) {
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    }
}

}  // namespace

const char* to_string(DivisibilityCase c) { return c == DivisibilityCase::Divides ? "divides" : "not_divides"; }

FormulaValue formula_divisible(const SieveTable& table, std::uint64_t n, std::uint64_t p) {
    const std::uint64_t pairs = total_odd_pairs(n);
    check_odd_prime(table, p);

    FormulaValue out;
    out.n = n;
    out.p = p;
    if (n % p == 0) {
        out.divisibility = DivisibilityCase::Divides;
        out.value = n / (2 * p);
        out.exact = n % (2 * p) == 0;
        return out;
    }
    out.divisibility = DivisibilityCase::NotDivides;
    const auto shifted = static_cast<std::int64_t>(pairs) - static_cast<std::int64_t>((p - 1) / 2);
    out.value = shifted <= 0 ? 0 : 2 * (static_cast<std::uint64_t>(shifted) / p);
    return out;
}

std::vector<FormulaValue> formula_table(const SieveTable& table, std::uint64_t n, unsigned extra_rows) {
    total_odd_pairs(n);
    std::vector<FormulaValue> out;
    if (n < 10) {
        return out;
    }
    const std::uint64_t bound = sieve_bound(table, n);
    for (const std::uint64_t p : table.primes()) {
        if (p == 2) {
            continue;
        }
        if (p > bound) {
            if (extra_rows == 0) {
                break;
            }
            --extra_rows;
        }
        out.push_back(formula_divisible(table, n, p));
    }
    return out;
}

Rational asymptotic_only_by(const SieveTable& table, std::uint64_t n, std::uint64_t p) {
    const std::uint64_t pairs = total_odd_pairs(n);
    check_odd_prime(table, p);
    if (n % p == 0) {
        throw DomainError("large-n product is only defined for p not dividing n (n=" + std::to_string(n) +
                          ", p=" + std::to_string(p) + ")");
    }
    if (p > sieve_bound(table, n)) {
        throw std::invalid_argument("p exceeds the sieve bound of n");
    }
    Rational value(static_cast<std::int64_t>(2 * pairs), static_cast<std::int64_t>(p));
    for (const std::uint64_t q : table.primes()) {
        if (q >= p) {
            break;
        }
        if (q != 2) {
            value *= Rational(static_cast<std::int64_t>(q - 2), static_cast<std::int64_t>(q));
        }
    }
    return value;
}

}  // namespace goldbach

namespace goldbach {

std::vector<ComparisonRow> compare_with_oracle(const SieveTable& table, std::uint64_t n, unsigned extra_rows) {
    std::vector<ComparisonRow> out;
    for (const FormulaValue& f : formula_table(table, n, extra_rows)) {
        out.push_back({f.p, f.value, divisible_pair_count(table, n, f.p), only_by_count(table, n, f.p)});
    }
    return out;
}

}  // namespace goldbach
