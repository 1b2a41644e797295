#include "goldbach/scan_engine.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "goldbach/pair_oracle.hpp"
#include "goldbach/parallel.hpp"

namespace goldbach {

namespace {

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::uint64_t largest_prime_factor(std::uint64_t c) {
    std::uint64_t largest = 1;
    for (std::uint64_t f = 2; f * f <= c; ++f) {
        while (c % f == 0) {
            largest = f;
            c /= f;
        }
    }
    return c > 1 ? c : largest;
}

std::uint64_t unordered_from_table(const SieveTable& table, std::uint64_t n) {
    return prime_pair_count(table, n, Convention::Unordered);
}

}  // namespace

Family parse_family(std::string_view label) {
    if (label == "pow2") {
        return Family{"pow2", 2, true};
    }
    const auto fail = [&] { return std::invalid_argument("unknown family '" + std::string(label) + "'"); };
    if (label.size() < 2 || label.back() != 'p') {
        throw fail();
    }
    const std::string_view digits = label.substr(0, label.size() - 1);
    std::uint64_t c = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw fail();
    }
    if (c != 6 && c != 10 && c != 30 && !(c >= 2 && is_power_of_two(c))) {
        throw fail();
    }
    return Family{std::string(label), c, false};
}

std::vector<std::uint64_t> family_members(const SieveTable& table, const Family& family, std::uint64_t n_max) {
    if (n_max < 6) {
        throw std::invalid_argument("n_max must be >= 6");
    }
    std::vector<std::uint64_t> out;
    if (family.power_of_two) {
        for (std::uint64_t n = 4; n <= n_max / 2; n *= 2) {
            out.push_back(2 * n);
        }
        return out;
    }
    const std::uint64_t min_prime = largest_prime_factor(family.coefficient);
    table.require(n_max / family.coefficient);
    for (const std::uint64_t p : table.primes()) {
        if (p * family.coefficient > n_max) {
            break;
        }
        if (p > min_prime) {
            out.push_back(p * family.coefficient);
        }
    }
    return out;
}

std::vector<ScanRecord> family_scan(const SieveTable& table, const std::vector<Family>& families,
                                    std::uint64_t n_max, ScanOptions options) {
    if (n_max < 10) {
        throw std::invalid_argument("n_max must be >= 10");
    }
    table.require(n_max);

    std::vector<Family> ordered_families = families;
    std::sort(ordered_families.begin(), ordered_families.end(),
              [](const Family& a, const Family& b) { return a.label < b.label; });
    ordered_families.erase(std::unique(ordered_families.begin(), ordered_families.end()), ordered_families.end());

    std::vector<ScanRecord> work;
    for (const Family& family : ordered_families) {
        for (const std::uint64_t n : family_members(table, family, n_max)) {
            ScanRecord r;
            r.family = family.label;
            if (!family.power_of_two) {
                r.p = n / family.coefficient;
            }
            r.n = n;
            work.push_back(std::move(r));
        }
    }

    return detail::parallel_map<ScanRecord>(work.size(), options.threads, [&](std::size_t i) {
        ScanRecord r = work[i];
        r.pairs = total_odd_pairs(r.n);
        r.ordered = prime_pair_count(table, r.n, Convention::Ordered);
        r.unordered = unordered_from_table(table, r.n);
        return r;
    });
}

std::optional<double> IntervalMeans::mean(std::string_view family) const {
    for (const auto& [label, value] : means) {
        if (label == family) {
            return value;
        }
    }
    return std::nullopt;
}

std::vector<IntervalMeans> dyadic_means(const std::vector<ScanRecord>& records, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::string> labels;
    for (const auto& r : records) {
        if (std::find(labels.begin(), labels.end(), r.family) == labels.end()) {
            labels.push_back(r.family);
        }
    }

    std::uint64_t start = 1;
    while (start < lo) {
        start *= 2;
    }
    std::vector<IntervalMeans> out;
    for (; start <= hi; start *= 2) {
        IntervalMeans interval;
        interval.lo = start;
        interval.hi = std::min(hi, 2 * start - 1);
        for (const auto& label : labels) {
            std::uint64_t sum = 0;
            std::uint64_t count = 0;
            for (const auto& r : records) {
                if (r.family == label && r.n >= interval.lo && r.n <= interval.hi) {
                    sum += r.unordered;
                    ++count;
                }
            }
            if (count > 0) {
                interval.means.emplace_back(label, static_cast<double>(sum) / static_cast<double>(count));
            }
        }
        out.push_back(std::move(interval));
    }
    return out;
}

std::vector<EstimateRecord> estimate_vs_actual_scan(SieveWeights& weights, std::uint64_t n_max,
                                                    ScanOptions options) {
    if (n_max < 10) {
        throw std::invalid_argument("n_max must be >= 10");
    }
    const auto table = weights.sieve().covering(n_max);
    std::vector<std::uint64_t> ns;
    for (const std::uint64_t p : table->primes()) {
        if (2 * p > n_max) {
            break;
        }
        if (p >= 5) {
            ns.push_back(2 * p);
        }
    }
    // Estimates share the memo; fill it serially and leave the O(n) counting to the pool.
    std::vector<EstimateRecord> records;
    records.reserve(ns.size());
    for (const std::uint64_t n : ns) {
        records.push_back(estimate_prime_pairs(weights, n, false));
    }
    const auto counts = detail::parallel_map<std::uint64_t>(ns.size(), options.threads, [&](std::size_t i) {
        return prime_pair_count(*table, ns[i], Convention::Ordered);
    });
    for (std::size_t i = 0; i < records.size(); ++i) {
        records[i].actual_ordered = counts[i];
    }
    return records;
}

std::uint64_t polignac_count(const SieveTable& table, std::uint64_t n, std::uint64_t gap) {
    if (gap == 0 || gap % 2 != 0) {
        throw std::invalid_argument("gap must be even and >= 2, got " + std::to_string(gap));
    }
    if (n < 5) {
        throw std::invalid_argument("n must be >= 5, got " + std::to_string(n));
    }
    table.require(n);
    std::uint64_t count = 0;
    for (const std::uint64_t x : table.primes()) {
        if (x + gap > n) {
            break;
        }
        if (table.is_prime(x + gap)) {
            ++count;
        }
    }
    return count;
}

std::vector<std::uint64_t> twin_sample_points(std::uint64_t n_max, TwinStride stride) {
    std::vector<std::uint64_t> out;
    std::uint64_t n = 10;
    for (; n <= n_max && n <= stride.switch_at; n += stride.fine) {
        out.push_back(n);
    }
    if (!out.empty()) {
        n = out.back() + stride.coarse;
    }
    for (; n <= n_max; n += stride.coarse) {
        out.push_back(n);
    }
    return out;
}

std::vector<TwinRecord> twin_scan(SieveWeights& weights, std::uint64_t n_max, TwinStride stride) {
    if (n_max < 10) {
        throw std::invalid_argument("n_max must be >= 10");
    }
    const auto table = weights.sieve().covering(n_max);

    // Upper members x + 2 of each twin pair, ascending.
    std::vector<std::uint64_t> upper;
    std::uint64_t previous = 0;
    for (const std::uint64_t p : table->primes()) {
        if (p > n_max) {
            break;
        }
        if (previous != 0 && p - previous == 2) {
            upper.push_back(p);
        }
        previous = p;
    }

    std::vector<TwinRecord> out;
    for (const std::uint64_t n : twin_sample_points(n_max, stride)) {
        TwinRecord r;
        r.n = n;
        r.twin_count = static_cast<std::uint64_t>(std::upper_bound(upper.begin(), upper.end(), n) - upper.begin());
        r.estimate = estimate_prime_pairs(weights, n, false).estimate;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace goldbach
