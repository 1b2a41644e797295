#include "goldbach/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <vector>

#include "CLI11.hpp"

#include "goldbach/audit.hpp"
#include "goldbach/closed_forms.hpp"
#include "goldbach/emit.hpp"
#include "goldbach/estimator.hpp"
#include "goldbach/pair_oracle.hpp"
#include "goldbach/scan_engine.hpp"

namespace goldbach {

namespace {

struct Options {
    std::uint64_t n = 0;
    std::uint64_t max = 0;
    std::vector<std::string> families;
    std::string convention = "ordered";
    std::uint64_t gap = 2;
    std::string format = "csv";
    std::string out;
    bool strict = false;
    bool list = false;
    bool extended = false;
    unsigned threads = 0;
    std::uint64_t audit_max = 5000;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void add_output_flags(CLI::App& cmd, Options& o) {
    cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--out", o.out, "Write output to this file instead of stdout");
    cmd.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

std::string render(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::optional<std::filesystem::path> out_path(const Options& o) {
    if (o.out.empty()) {
        return std::nullopt;
    }
    return std::filesystem::path(o.out);
}

SieveTable sieve_for(std::uint64_t n) { return SieveTable::build(std::max<std::uint64_t>(n, 16)); }

std::string cmd_pairs(const Options& o) {
    const Convention convention = parse_convention(o.convention);
    const auto table = sieve_for(o.n);
    const Format format = parse_format(o.format);
    if (o.list) {
        const auto list = prime_pair_list(table, o.n, convention);
        if (format == Format::Json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& [x, y] : list) {
                j.push_back({{"x", x}, {"y", y}});
            }
            return render(j);
        }
        std::string s = "x,y\n";
        for (const auto& [x, y] : list) {
            s += std::to_string(x) + "," + std::to_string(y) + "\n";
        }
        return s;
    }
    const std::uint64_t pairs = total_odd_pairs(o.n);
    const std::uint64_t count = prime_pair_count(table, o.n, convention);
    if (format == Format::Json) {
        return render({{"n", o.n}, {"convention", to_string(convention)}, {"P", pairs}, {"prime_pairs", count}});
    }
    return "n,convention,P,prime_pairs\n" + std::to_string(o.n) + "," + to_string(convention) + "," +
           std::to_string(pairs) + "," + std::to_string(count) + "\n";
}

std::string cmd_breakdown(const Options& o) {
    const auto table = sieve_for(o.n);
    const auto split = breakdown(table, o.n);
    const auto rows = compare_with_oracle(table, o.n, o.extended ? 1 : 0);
    if (parse_format(o.format) == Format::Json) {
        return render(to_json(rows, split.total));
    }
    return to_csv(rows, split.total);
}

std::string cmd_formulas(const Options& o) {
    const auto table = sieve_for(o.n);
    const auto values = formula_table(table, o.n, o.extended ? 1 : 0);
    std::vector<std::uint64_t> oracle;
    for (const auto& v : values) {
        oracle.push_back(divisible_pair_count(table, o.n, v.p));
    }
    if (parse_format(o.format) == Format::Json) {
        return render(to_json(values, oracle));
    }
    return to_csv(values, oracle);
}

std::string cmd_estimate(const Options& o) {
    if ((o.n == 0) == (o.max == 0)) {
        throw UsageError("estimate needs exactly one of --n or --max");
    }
    SieveCache sieve(std::max(o.n, o.max) + 64);
    SieveWeights weights(sieve);
    std::vector<EstimateRecord> records;
    if (o.n != 0) {
        records.push_back(estimate_prime_pairs(weights, o.n, true));
    } else {
        records = estimate_vs_actual_scan(weights, o.max, ScanOptions{o.threads});
    }
    if (parse_format(o.format) == Format::Json) {
        return render(to_json(records));
    }
    return to_csv(records);
}

std::string cmd_scan(const Options& o) {
    if (o.max == 0) {
        throw UsageError("scan needs --max");
    }
    std::vector<Family> families;
    const std::vector<std::string> labels =
        o.families.empty() ? std::vector<std::string>{"2p", "6p", "10p", "30p"} : o.families;
    for (const auto& label : labels) {
        families.push_back(parse_family(label));
    }
    const auto table = sieve_for(o.max);
    const auto records = family_scan(table, families, o.max, ScanOptions{o.threads});
    if (parse_format(o.format) == Format::Json) {
        return render(to_json(records));
    }
    return to_csv(records);
}

std::string cmd_twin(const Options& o) {
    if ((o.n == 0) == (o.max == 0)) {
        throw UsageError("twin needs exactly one of --n or --max");
    }
    if (o.n != 0) {
        const auto table = sieve_for(o.n);
        const std::uint64_t count = polignac_count(table, o.n, o.gap);
        if (parse_format(o.format) == Format::Json) {
            return render({{"n", o.n}, {"gap", o.gap}, {"count", count}});
        }
        return "n,gap,count\n" + std::to_string(o.n) + "," + std::to_string(o.gap) + "," + std::to_string(count) +
               "\n";
    }
    if (o.gap != 2) {
        throw UsageError("twin --max scans gap 2 only; use --n with --gap for other gaps");
    }
    SieveCache sieve(o.max + 64);
    SieveWeights weights(sieve);
    const auto records = twin_scan(weights, o.max);
    if (parse_format(o.format) == Format::Json) {
        return render(to_json(records));
    }
    return to_csv(records);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Goldbach partition laboratory", "goldbach"};
    app.require_subcommand(1);
    Options o;

    auto* pairs = app.add_subcommand("pairs", "Prime-pair count (or list) for one even n");
    pairs->add_option("--n", o.n, "Even integer >= 6")->required();
    pairs->add_option("--convention", o.convention)->check(CLI::IsMember({"ordered", "unordered"}));
    pairs->add_flag("--list", o.list, "List the pairs instead of counting");
    add_output_flags(*pairs, o);

    auto* split = app.add_subcommand("breakdown", "Per-prime non-prime pair table for one n");
    split->add_option("--n", o.n, "Even integer >= 6")->required();
    split->add_flag("--extended", o.extended, "Append the first prime past the sieve bound");
    add_output_flags(*split, o);

    auto* formulas = app.add_subcommand("formulas", "Closed-form divisibility counts against the oracle");
    formulas->add_option("--n", o.n, "Even integer >= 6")->required();
    formulas->add_flag("--extended", o.extended, "Append the first prime past the sieve bound");
    add_output_flags(*formulas, o);

    auto* estimate = app.add_subcommand("estimate", "Pair estimate for one n, or the n=2p scan up to --max");
    estimate->add_option("--n", o.n, "Even integer >= 10");
    estimate->add_option("--max", o.max, "Scan every n=2p <= max");
    add_output_flags(*estimate, o);

    auto* scan = app.add_subcommand("scan", "Family scan of prime-pair counts");
    scan->add_option("--max", o.max, "Largest n")->required();
    scan->add_option("--family", o.families, "2p|6p|10p|30p|4p|8p|pow2 (repeatable)")->take_all();
    add_output_flags(*scan, o);

    auto* twin = app.add_subcommand("twin", "Twin prime scan, or a Polignac count with --n/--gap");
    twin->add_option("--n", o.n, "Count pairs (x, x+gap) with x+gap <= n");
    twin->add_option("--max", o.max, "Scan pi2 and the estimate up to max");
    twin->add_option("--gap", o.gap, "Even gap");
    add_output_flags(*twin, o);

    auto* audit = app.add_subcommand("audit", "Evaluate the claim registry");
    audit->add_option("--max", o.audit_max, "Scan limit (>= 1000, default 5000)");
    audit->add_flag("--strict", o.strict, "Exit 1 if any claim fails");
    add_output_flags(*audit, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        std::string payload;
        int code = 0;
        if (*pairs) {
            payload = cmd_pairs(o);
        } else if (*split) {
            payload = cmd_breakdown(o);
        } else if (*formulas) {
            payload = cmd_formulas(o);
        } else if (*estimate) {
            payload = cmd_estimate(o);
        } else if (*scan) {
            payload = cmd_scan(o);
        } else if (*twin) {
            payload = cmd_twin(o);
        } else if (*audit) {
            const auto outcomes = run_audit(o.audit_max, o.threads);
            payload = parse_format(o.format) == Format::Json ? render(to_json(outcomes)) : to_csv(outcomes);
            code = o.strict && has_failure(outcomes) ? 1 : 0;
        }
        emit(payload, out_path(o), out);
        return code;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace goldbach
