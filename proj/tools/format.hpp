#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "valspec/poly.hpp"

namespace valspec::cli {

enum class Format { pretty, json, csv };

/// One polynomial row as printed by the tool. All big values are decimal
/// strings so the JSON never relies on 64-bit number ranges.
struct OutputRecord {
    std::string n;
    unsigned long p = 2;
    unsigned int k = 2;
    std::vector<std::string> coeffs;                // ascending degree
    std::map<std::string, std::string> evaluations; // x value -> exact value

    bool operator==(const OutputRecord&) const = default;
};

OutputRecord make_record(const Integer& n, unsigned long p, unsigned int k, const IntPoly& poly);
OutputRecord make_record(const Integer& n, unsigned long p, unsigned int k, const RatPoly& poly);

/// Descending powers, "x^1" printed as "x", unit coefficients omitted:
/// "4 x^3 + 2 x^2 + x + 2".
std::string pretty_poly(const IntPoly& poly);
std::string pretty_poly(const RatPoly& poly);

nlohmann::json record_to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::json& j);

/// Header n,p,k,degree,coeff_0,... padded to the largest degree in the batch.
void write_csv(std::ostream& os, std::span<const OutputRecord> records);

std::optional<Integer> parse_nonnegative_integer(const std::string& text);
std::optional<Rational> parse_rational(const std::string& text);

} // namespace valspec::cli
