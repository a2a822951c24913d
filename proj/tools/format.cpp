#include "format.hpp"

#include <algorithm>
#include <sstream>

namespace valspec::cli {

namespace {

struct Term {
    bool negative;
    std::string magnitude; // decimal or fraction, without sign
    std::size_t power;
};

std::string render_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& term : terms) {
        if (first) {
            if (term.negative) out << "-";
            first = false;
        } else {
            out << (term.negative ? " - " : " + ");
        }
        const bool unit = term.magnitude == "1";
        if (term.power == 0) {
            out << term.magnitude;
        } else {
            if (!unit) out << term.magnitude << " ";
            out << "x";
            if (term.power > 1) out << "^" << term.power;
        }
    }
    return out.str();
}

} // namespace

std::string pretty_poly(const IntPoly& poly) {
    std::vector<Term> terms;
    const auto& cs = poly.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] == 0) continue;
        const Integer magnitude = abs(cs[i]);
        terms.push_back({cs[i] < 0, magnitude.get_str(), i});
    }
    return render_terms(terms);
}

std::string pretty_poly(const RatPoly& poly) {
    std::vector<Term> terms;
    const auto& cs = poly.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] == 0) continue;
        const Rational magnitude = abs(cs[i]);
        terms.push_back({cs[i] < 0, magnitude.get_str(), i});
    }
    return render_terms(terms);
}

OutputRecord make_record(const Integer& n, unsigned long p, unsigned int k, const IntPoly& poly) {
    OutputRecord record{n.get_str(), p, k, {}, {}};
    record.coeffs.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs()) record.coeffs.push_back(c.get_str());
    return record;
}

OutputRecord make_record(const Integer& n, unsigned long p, unsigned int k, const RatPoly& poly) {
    OutputRecord record{n.get_str(), p, k, {}, {}};
    record.coeffs.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs()) record.coeffs.push_back(c.get_str());
    return record;
}

nlohmann::json record_to_json(const OutputRecord& record) {
    nlohmann::json j{
        {"n", record.n},
        {"p", record.p},
        {"k", record.k},
        {"coeffs", record.coeffs},
    };
    if (!record.evaluations.empty()) j["evaluations"] = record.evaluations;
    return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord record;
    record.n = j.at("n").get<std::string>();
    record.p = j.at("p").get<unsigned long>();
    record.k = j.at("k").get<unsigned int>();
    record.coeffs = j.at("coeffs").get<std::vector<std::string>>();
    if (j.contains("evaluations")) {
        record.evaluations = j.at("evaluations").get<std::map<std::string, std::string>>();
    }
    return record;
}

void write_csv(std::ostream& os, std::span<const OutputRecord> records) {
    std::size_t width = 1;
    for (const auto& r : records) width = std::max(width, r.coeffs.size());

    os << "n,p,k,degree";
    for (std::size_t i = 0; i < width; ++i) os << ",coeff_" << i;
    os << "\n";
    for (const auto& r : records) {
        os << r.n << "," << r.p << "," << r.k << ",";
        if (r.coeffs.empty()) {
            os << "-inf";
        } else {
            os << r.coeffs.size() - 1;
        }
        for (std::size_t i = 0; i < width; ++i) {
            os << "," << (i < r.coeffs.size() ? r.coeffs[i] : "0");
        }
        os << "\n";
    }
}

std::optional<Integer> parse_nonnegative_integer(const std::string& text) {
    if (text.empty()) return std::nullopt;
    Integer n;
    if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0) return std::nullopt;
    if (n < 0) return std::nullopt;
    return n;
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty() || text == "-") return std::nullopt;
    // mpq_set_str accepts "a" and "a/b"; reject a zero denominator before
    // canonicalizing.
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

} // namespace valspec::cli
