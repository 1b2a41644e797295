#pragma once

// Registry of published numeric claims and the evaluators that check them.
// The registry is plain data: adding a claim means adding a definition and an
// evaluator keyed by name, nothing in the CLI changes.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace goldbach {

class SieveCache;
class SieveWeights;

enum class ClaimStatus { Pass, Fail, Info };

const char* to_string(ClaimStatus status);

struct ClaimOutcome {
    std::string claim_id;
    std::string reference;
    ClaimStatus status = ClaimStatus::Info;
    std::string observed;
    std::string expected;
};

struct ClaimDefinition {
    std::string id;
    std::string reference;
    std::string evaluator;
};

struct AuditContext {
    std::uint64_t n_max = 5000;
    unsigned threads = 0;
    SieveCache& sieve;
    SieveWeights& weights;
};

// status, observed, expected; id and reference are filled in by run_audit.
using ClaimEvaluator = std::function<ClaimOutcome(AuditContext&)>;

const std::vector<ClaimDefinition>& claim_registry();
const std::map<std::string, ClaimEvaluator, std::less<>>& claim_evaluators();

// invalid_argument for n_max < 1000. An evaluator that throws yields FAIL.
std::vector<ClaimOutcome> run_audit(std::uint64_t n_max, unsigned threads = 0);

bool has_failure(const std::vector<ClaimOutcome>& outcomes);

}  // namespace goldbach
