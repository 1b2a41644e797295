#include "goldbach/emit.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace goldbach {

namespace {

using nlohmann::json;

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not an unsigned integer: '" + std::string(text) + "'");
    }
    return v;
}

std::vector<std::string> expect_fields(std::string_view line, std::size_t count) {
    auto fields = split_csv_line(line);
    if (fields.size() != count) {
        throw std::invalid_argument("expected " + std::to_string(count) + " CSV fields, got " +
                                    std::to_string(fields.size()));
    }
    return fields;
}

json decimal(const Rational& r) { return json::parse(r.to_fixed(6)); }

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "json") {
        return Format::Json;
    }
    throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(value);
    }
    std::string out = "\"";
    for (const char c : value) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

std::string to_csv(std::span<const ScanRecord> records) {
    std::ostringstream s;
    s << "family,p,n,P,ordered,unordered\n";
    for (const auto& r : records) {
        s << csv_field(r.family) << ',' << (r.p ? std::to_string(*r.p) : "") << ',' << r.n << ',' << r.pairs << ','
          << r.ordered << ',' << r.unordered << '\n';
    }
    return s.str();
}

std::string to_csv(std::span<const EstimateRecord> records) {
    std::ostringstream s;
    s << "n,P,bound,one_minus_2w,estimate,actual,signed_error\n";
    for (const auto& r : records) {
        s << r.n << ',' << r.pairs << ',' << r.bound << ',' << r.one_minus_2w.to_string() << ','
          << r.estimate.to_fixed(6) << ',';
        if (const auto err = r.signed_error()) {
            s << *r.actual_ordered << ',' << err->to_fixed(6);
        } else {
            s << ',';
        }
        s << '\n';
    }
    return s.str();
}

std::string to_csv(std::span<const TwinRecord> records) {
    std::ostringstream s;
    s << "n,pi2,estimate\n";
    for (const auto& r : records) {
        s << r.n << ',' << r.twin_count << ',' << r.estimate.to_fixed(6) << '\n';
    }
    return s.str();
}

std::string to_csv(std::span<const ComparisonRow> rows, std::optional<std::uint64_t> total) {
    std::ostringstream s;
    s << "p,formula,divisible_oracle,only_by_oracle\n";
    for (const auto& r : rows) {
        s << r.p << ',' << r.formula << ',' << r.divisible_oracle << ',' << r.only_by_oracle << '\n';
    }
    if (total) {
        s << "total,,," << *total << '\n';
    }
    return s.str();
}

std::string to_csv(std::span<const FormulaValue> values, std::span<const std::uint64_t> oracle) {
    std::ostringstream s;
    s << "n,p,case,formula,exact,oracle,deviation\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& v = values[i];
        const auto deviation = static_cast<std::int64_t>(v.value) - static_cast<std::int64_t>(oracle[i]);
        s << v.n << ',' << v.p << ',' << to_string(v.divisibility) << ',' << v.value << ','
          << (v.exact ? "true" : "false") << ',' << oracle[i] << ',' << deviation << '\n';
    }
    return s.str();
}

std::string to_csv(std::span<const ClaimOutcome> outcomes) {
    std::ostringstream s;
    s << "claim_id,reference,status,observed,expected\n";
    for (const auto& c : outcomes) {
        s << csv_field(c.claim_id) << ',' << csv_field(c.reference) << ',' << to_string(c.status) << ','
          << csv_field(c.observed) << ',' << csv_field(c.expected) << '\n';
    }
    return s.str();
}

json to_json(std::span<const ScanRecord> records) {
    json out = json::array();
    for (const auto& r : records) {
        out.push_back({{"family", r.family},
                       {"p", r.p ? json(*r.p) : json(nullptr)},
                       {"n", r.n},
                       {"P", r.pairs},
                       {"ordered", r.ordered},
                       {"unordered", r.unordered}});
    }
    return out;
}

json to_json(std::span<const EstimateRecord> records) {
    json out = json::array();
    for (const auto& r : records) {
        json row = {{"n", r.n},
                    {"P", r.pairs},
                    {"bound", r.bound},
                    {"one_minus_2w", r.one_minus_2w.to_string()},
                    {"estimate", decimal(r.estimate)},
                    {"actual", nullptr},
                    {"signed_error", nullptr}};
        if (const auto err = r.signed_error()) {
            row["actual"] = *r.actual_ordered;
            row["signed_error"] = decimal(*err);
        }
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(std::span<const TwinRecord> records) {
    json out = json::array();
    for (const auto& r : records) {
        out.push_back({{"n", r.n}, {"pi2", r.twin_count}, {"estimate", decimal(r.estimate)}});
    }
    return out;
}

json to_json(std::span<const ComparisonRow> rows, std::optional<std::uint64_t> total) {
    json list = json::array();
    for (const auto& r : rows) {
        list.push_back({{"p", r.p},
                        {"formula", r.formula},
                        {"divisible_oracle", r.divisible_oracle},
                        {"only_by_oracle", r.only_by_oracle}});
    }
    return {{"rows", list}, {"total", total ? json(*total) : json(nullptr)}};
}

json to_json(std::span<const FormulaValue> values, std::span<const std::uint64_t> oracle) {
    json out = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& v = values[i];
        out.push_back({{"n", v.n},
                       {"p", v.p},
                       {"case", to_string(v.divisibility)},
                       {"formula", v.value},
                       {"exact", v.exact},
                       {"oracle", oracle[i]},
                       {"deviation", static_cast<std::int64_t>(v.value) - static_cast<std::int64_t>(oracle[i])}});
    }
    return out;
}

json to_json(std::span<const ClaimOutcome> outcomes) {
    json out = json::array();
    for (const auto& c : outcomes) {
        out.push_back({{"claim_id", c.claim_id},
                       {"reference", c.reference},
                       {"status", to_string(c.status)},
                       {"observed", c.observed},
                       {"expected", c.expected}});
    }
    return out;
}

ScanRecord parse_scan_row(std::string_view line) {
    const auto f = expect_fields(line, 6);
    ScanRecord r;
    r.family = f[0];
    if (!f[1].empty()) {
        r.p = parse_u64(f[1]);
    }
    r.n = parse_u64(f[2]);
    r.pairs = parse_u64(f[3]);
    r.ordered = parse_u64(f[4]);
    r.unordered = parse_u64(f[5]);
    return r;
}

EstimateRecord parse_estimate_row(std::string_view line) {
    const auto f = expect_fields(line, 7);
    EstimateRecord r;
    r.n = parse_u64(f[0]);
    r.pairs = parse_u64(f[1]);
    r.bound = parse_u64(f[2]);
    r.one_minus_2w = Rational::parse(f[3]);
    r.estimate = Rational(static_cast<std::int64_t>(r.pairs)) * r.one_minus_2w;
    if (r.estimate.to_fixed(6) != f[4]) {
        throw std::invalid_argument("estimate column " + f[4] + " disagrees with P * one_minus_2w");
    }
    if (!f[5].empty()) {
        r.actual_ordered = parse_u64(f[5]);
        if (r.signed_error()->to_fixed(6) != f[6]) {
            throw std::invalid_argument("signed_error column " + f[6] + " disagrees with estimate - actual");
        }
    }
    return r;
}

ComparisonRow parse_breakdown_row(std::string_view line) {
    const auto f = expect_fields(line, 4);
    return {parse_u64(f[0]), parse_u64(f[1]), parse_u64(f[2]), parse_u64(f[3])};
}

void emit(std::string_view payload, const std::optional<std::filesystem::path>& out, std::ostream& fallback) {
    if (!out) {
        fallback << payload;
        fallback.flush();
        return;
    }
    std::ofstream file(*out, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open " + out->string() + " for writing");
    }
    file << payload;
    file.flush();
    if (!file) {
        throw IoError("failed writing " + out->string());
    }
}

}  // namespace goldbach
