#include "goldbach/audit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "goldbach/closed_forms.hpp"
#include "goldbach/estimator.hpp"
#include "goldbach/pair_oracle.hpp"
#include "goldbach/scan_engine.hpp"

namespace goldbach {

namespace {

constexpr std::uint64_t kIdentityLimit = 10000;
constexpr std::uint64_t kUnderestimateLimit = 5000;
constexpr std::uint64_t kFamilyLow = 1000;
constexpr std::uint64_t kFamilyHigh = 50000;

ClaimOutcome compare(std::string observed, std::string expected) {
    ClaimOutcome out;
    out.status = observed == expected ? ClaimStatus::Pass : ClaimStatus::Fail;
    out.observed = std::move(observed);
    out.expected = std::move(expected);
    return out;
}

ClaimOutcome info(std::string observed, std::string expected = "") {
    ClaimOutcome out;
    out.status = ClaimStatus::Info;
    out.observed = std::move(observed);
    out.expected = std::move(expected);
    return out;
}

std::string fixed2(double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << v;
    return s.str();
}

ClaimOutcome table_998(AuditContext& ctx) {
    const auto table = ctx.sieve.covering(998);
    const auto rows = compare_with_oracle(*table, 998, 1);
    const auto split = breakdown(*table, 998);

    std::ostringstream only, formula;
    for (const auto& r : rows) {
        only << r.p << ':' << r.only_by_oracle << ' ';
        formula << r.formula << ' ';
    }
    std::string observed = "only_by " + only.str() + "total " + std::to_string(split.total) + "; formula " +
                           formula.str();
    observed.pop_back();
    return compare(std::move(observed),
                   "only_by 3:330 5:68 7:28 11:12 13:8 17:8 19:4 23:2 29:2 31:2 37:0 total 464; "
                   "formula 330 198 140 88 74 56 50 42 32 30 24");
}

ClaimOutcome worked_examples(AuditContext& ctx) {
    const auto table = ctx.sieve.covering(1000);
    std::ostringstream s;
    s << "div(990,3)=" << divisible_pair_count(*table, 990, 3)
      << " div(994,3)=" << divisible_pair_count(*table, 994, 3)
      << " div(990,5)=" << divisible_pair_count(*table, 990, 5)
      << " div(990,5&3)=" << jointly_divisible_pair_count(*table, 990, 5, 3)
      << " div(994,5)=" << divisible_pair_count(*table, 994, 5)
      << " only(994,5)=" << only_by_count(*table, 994, 5)
      << " only(998,5)=" << only_by_count(*table, 998, 5);
    return compare(s.str(),
                   "div(990,3)=165 div(994,3)=328 div(990,5)=99 div(990,5&3)=33 div(994,5)=196 "
                   "only(994,5)=64 only(998,5)=68");
}

ClaimOutcome telescoping(AuditContext& ctx) {
    const auto table = ctx.sieve.covering(kIdentityLimit);
    std::size_t checked = 0;
    std::size_t nonzero = 0;
    Rational worst(0);
    for (const std::uint64_t p : table->primes()) {
        if (p > kIdentityLimit) {
            break;
        }
        if (p < 5) {
            continue;
        }
        const Rational r = telescoping_residual(ctx.weights, p).abs();
        ++checked;
        if (!r.is_zero()) {
            ++nonzero;
            worst = std::max(worst, r);
        }
    }
    ClaimOutcome out = compare("max|residual|=" + (worst.is_zero() ? std::string("0") : worst.to_string()) +
                                   " nonzero=" + std::to_string(nonzero),
                               "max|residual|=0 nonzero=0");
    out.observed += " over " + std::to_string(checked) + " primes in [5," + std::to_string(kIdentityLimit) + "]";
    out.expected += " over " + std::to_string(checked) + " primes in [5," + std::to_string(kIdentityLimit) + "]";
    return out;
}

ClaimOutcome growth(AuditContext& ctx) {
    const auto table = ctx.sieve.covering(kIdentityLimit);
    std::size_t checked = 0;
    std::size_t positive = 0;
    std::uint64_t argmin = 0;
    Rational smallest;
    for (const std::uint64_t p : table->primes()) {
        if (p > kIdentityLimit) {
            break;
        }
        if (p < 3) {
            continue;
        }
        const Rational d = growth_delta(ctx.weights, p);
        if (checked == 0 || d < smallest) {
            smallest = d;
            argmin = p;
        }
        ++checked;
        if (d.sign() > 0) {
            ++positive;
        }
    }
    ClaimOutcome out;
    out.status = positive == checked ? ClaimStatus::Pass : ClaimStatus::Fail;
    out.observed = "positive " + std::to_string(positive) + "/" + std::to_string(checked) + ", min " +
                   smallest.to_fixed(6) + " at p=" + std::to_string(argmin);
    out.expected = "positive " + std::to_string(checked) + "/" + std::to_string(checked);
    return out;
}

ClaimOutcome underestimate(AuditContext& ctx) {
    const std::uint64_t limit = std::min(ctx.n_max, kUnderestimateLimit - 1);
    const auto records = estimate_vs_actual_scan(ctx.weights, limit, ScanOptions{ctx.threads});
    std::vector<std::uint64_t> over;
    for (const auto& r : records) {
        if (r.estimate > Rational(static_cast<std::int64_t>(*r.actual_ordered))) {
            over.push_back(r.n);
        }
    }
    std::ostringstream s;
    s << "estimate > actual at " << over.size() << " of " << records.size() << " n=2p <= " << limit;
    if (!over.empty()) {
        s << ": ";
        for (std::size_t i = 0; i < over.size(); ++i) {
            s << (i ? " " : "") << over[i];
        }
    }
    return info(s.str(), "estimate <= actual for every n=2p < 5000");
}

ClaimOutcome family_separation(AuditContext& ctx) {
    const std::uint64_t hi = std::min(ctx.n_max, kFamilyHigh);
    const auto table = ctx.sieve.covering(hi);
    std::vector<Family> families;
    for (const char* label : {"2p", "6p", "10p", "30p"}) {
        families.push_back(parse_family(label));
    }
    const auto records = family_scan(*table, families, hi, ScanOptions{ctx.threads});
    const auto intervals = dyadic_means(records, kFamilyLow, hi);

    bool ok = !intervals.empty();
    std::ostringstream s;
    for (const auto& iv : intervals) {
        const auto m2 = iv.mean("2p");
        const auto m6 = iv.mean("6p");
        const auto m10 = iv.mean("10p");
        const auto m30 = iv.mean("30p");
        const bool complete = m2 && m6 && m10 && m30;
        const bool holds = complete && *m30 > *m6 && *m30 > *m10 && *m6 > *m2 && *m10 > *m2;
        ok = ok && holds;
        s << '[' << iv.lo << ',' << iv.hi << "] ";
        for (const auto& [label, value] : iv.means) {
            s << label << '=' << fixed2(value) << ' ';
        }
        s << (holds ? "ok" : "VIOLATED") << "; ";
    }
    std::string observed = s.str();
    if (observed.empty()) {
        observed = "no dyadic interval within range";
    } else {
        observed.resize(observed.size() - 2);
    }
    ClaimOutcome out;
    out.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
    out.observed = std::move(observed);
    out.expected = "30p > max(6p,10p) and min(6p,10p) > 2p in every dyadic interval of [" +
                   std::to_string(kFamilyLow) + "," + std::to_string(hi) + "]";
    return out;
}

ClaimOutcome p_994(AuditContext& ctx) {
    const auto table = ctx.sieve.covering(994);
    const std::uint64_t pairs = total_odd_pairs(994);
    const std::uint64_t by3 = divisible_pair_count(*table, 994, 3);
    return info("P(994)=" + std::to_string(pairs) + ", " + std::to_string(pairs) + "-" + std::to_string(by3) + "=" +
                    std::to_string(pairs - by3) + " pairs free of 3",
                "quoted as P=498, 498-328=170");
}

ClaimOutcome twin_estimate(AuditContext& ctx) {
    const auto records = twin_scan(ctx.weights, ctx.n_max);
    std::size_t above = 0;
    for (const auto& r : records) {
        if (Rational(static_cast<std::int64_t>(r.twin_count)) >= r.estimate) {
            ++above;
        }
    }
    const auto& last = records.back();
    const double ratio = last.estimate.is_zero() ? 0.0 : static_cast<double>(last.twin_count) / last.estimate.to_double();
    std::ostringstream s;
    s << "pi2(" << last.n << ")=" << last.twin_count << " estimate=" << last.estimate.to_fixed(6)
      << " ratio=" << fixed2(ratio) << "; pi2 >= estimate at " << above << " of " << records.size() << " samples";
    return info(s.str(), "pi2(n) approaches P(1-2W(l(sqrt n)))");
}

}  // namespace

const char* to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::Pass: return "PASS";
        case ClaimStatus::Fail: return "FAIL";
        case ClaimStatus::Info: return "INFO";
    }
    return "INFO";
}

const std::vector<ClaimDefinition>& claim_registry() {
    static const std::vector<ClaimDefinition> registry = {
        {"C1", "non-prime pair table for n=998", "table_998"},
        {"C2", "divisibility worked examples for n=990/994/998", "worked_examples"},
        {"C3", "1-2W(p) = ((p-2)/p)(1-2W(l(p))) for primes <= 10^4", "telescoping"},
        {"C4", "growth delta positive for primes <= 10^4", "growth"},
        {"C5", "estimate underestimates prime pairs for n=2p < 5000", "underestimate"},
        {"C6", "families 6p/10p/30p richer than 2p (dyadic means)", "family_separation"},
        {"C7", "pair count quoted for n=994", "p_994"},
        {"C8", "twin prime count versus pair estimate", "twin_estimate"},
    };
    return registry;
}

const std::map<std::string, ClaimEvaluator, std::less<>>& claim_evaluators() {
    static const std::map<std::string, ClaimEvaluator, std::less<>> evaluators = {
        {"table_998", table_998},
        {"worked_examples", worked_examples},
        {"telescoping", telescoping},
        {"growth", growth},
        {"underestimate", underestimate},
        {"family_separation", family_separation},
        {"p_994", p_994},
        {"twin_estimate", twin_estimate},
    };
    return evaluators;
}

std::vector<ClaimOutcome> run_audit(std::uint64_t n_max, unsigned threads) {
    if (n_max < 1000) {
        throw std::invalid_argument("audit requires --max >= 1000");
    }
    SieveCache sieve(std::max<std::uint64_t>(n_max, kIdentityLimit) + 64);
    SieveWeights weights(sieve);
    AuditContext ctx{n_max, threads, sieve, weights};

    std::vector<ClaimOutcome> out;
    for (const auto& def : claim_registry()) {
        ClaimOutcome outcome;
        const auto it = claim_evaluators().find(def.evaluator);
        if (it == claim_evaluators().end()) {
            outcome.status = ClaimStatus::Fail;
            outcome.observed = "no evaluator named " + def.evaluator;
        } else {
            try {
                outcome = it->second(ctx);
            } catch (const std::exception& e) {
                outcome = ClaimOutcome{};
                outcome.status = ClaimStatus::Fail;
                outcome.observed = std::string("evaluation error: ") + e.what();
            }
        }
        outcome.claim_id = def.id;
        outcome.reference = def.reference;
        out.push_back(std::move(outcome));
    }
    return out;
}

bool has_failure(const std::vector<ClaimOutcome>& outcomes) {
    return std::any_of(outcomes.begin(), outcomes.end(),
                       [](const ClaimOutcome& c) { return c.status == ClaimStatus::Fail; });
}

}  // namespace goldbach
