#pragma once

// Range scans over families of even numbers, the estimate-versus-actual scan
// over n = 2p, and twin/Polignac prime counting.
//
// Scans fan work out over threads and write each result into its own slot,
// so the output order never depends on scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldbach/estimator.hpp"
#include "goldbach/prime_core.hpp"
#include "goldbach/rational.hpp"

namespace goldbach {

// n = c * p with p prime and greater than every prime factor of c, or
// n = 2^j (j > 1) for the power-of-two family.
struct Family {
    std::string label;
    std::uint64_t coefficient = 2;
    bool power_of_two = false;

    friend bool operator==(const Family&, const Family&) = default;
};

// Accepts "pow2" and "<c>p" with c in {2, 6, 10, 30} or c a power of two.
Family parse_family(std::string_view label);

std::vector<std::uint64_t> family_members(const SieveTable& table, const Family& family, std::uint64_t n_max);

struct ScanRecord {
    std::string family;
    std::optional<std::uint64_t> p;  // absent for pow2
    std::uint64_t n = 0;
    std::uint64_t pairs = 0;
    std::uint64_t ordered = 0;
    std::uint64_t unordered = 0;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct ScanOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Sorted by family label, then n.
std::vector<ScanRecord> family_scan(const SieveTable& table, const std::vector<Family>& families,
                                    std::uint64_t n_max, ScanOptions options = {});

// Mean unordered count per family over one interval [lo, hi].
struct IntervalMeans {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::pair<std::string, double>> means;  // families with no member are omitted

    std::optional<double> mean(std::string_view family) const;
};

// Dyadic intervals [2^k, 2^(k+1) - 1] with 2^k >= lo, the last one clipped to hi.
std::vector<IntervalMeans> dyadic_means(const std::vector<ScanRecord>& records, std::uint64_t lo, std::uint64_t hi);

// One record per n = 2p <= n_max with p >= 5, ascending, actual counts filled.
std::vector<EstimateRecord> estimate_vs_actual_scan(SieveWeights& weights, std::uint64_t n_max,
                                                    ScanOptions options = {});

// Primes x with x + gap prime and x + gap <= n. invalid_argument for odd or zero gap.
std::uint64_t polignac_count(const SieveTable& table, std::uint64_t n, std::uint64_t gap);

struct TwinRecord {
    std::uint64_t n = 0;
    std::uint64_t twin_count = 0;  // pi_2(n)
    Rational estimate;
};

struct TwinStride {
    std::uint64_t fine = 2;
    std::uint64_t coarse = 50;
    std::uint64_t switch_at = 10000;
};

// Sampled n values: 10, 12, ... up to switch_at, then every `coarse` beyond it.
std::vector<std::uint64_t> twin_sample_points(std::uint64_t n_max, TwinStride stride = {});

std::vector<TwinRecord> twin_scan(SieveWeights& weights, std::uint64_t n_max, TwinStride stride = {});

}  // namespace goldbach
