#include "commands.hpp"

#include <cstdlib>
#include <string>

#include "valspec/spectra.hpp"

namespace valspec::cli {

std::uint64_t oracle_budget_from_env() {
    const char* text = std::getenv("VALSPEC_ORACLE_BUDGET");
    if (text == nullptr || *text == '\0') return oracle::default_enumeration_budget;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text, &end, 10);
    if (end == nullptr || *end != '\0' || value == 0) return oracle::default_enumeration_budget;
    return value;
}

namespace {

void print_record(const OutputRecord& record, Format format, std::ostream& out,
                  const std::string& pretty) {
    switch (format) {
        case Format::pretty:
            out << pretty << "\n";
            for (const auto& [at, value] : record.evaluations) {
                out << "T(" << at << ") = " << value << "\n";
            }
            break;
        case Format::json:
            out << record_to_json(record).dump() << "\n";
            break;
        case Format::csv:
            write_csv(out, {&record, 1});
            break;
    }
}

} // namespace

int run_spectrum(const SpectrumOptions& options, std::ostream& out, std::ostream& err) {
    if (!is_prime(options.p)) {
        err << "error: --p " << options.p << " is not a prime\n";
        return exit_usage;
    }
    if (options.k < 1) {
        err << "error: --k must be >= 1\n";
        return exit_usage;
    }
    const auto n = parse_nonnegative_integer(options.n);
    if (!n) {
        err << "error: --n '" << options.n << "' is not a non-negative integer\n";
        return exit_usage;
    }
    if (options.normalized && options.k != 2) {
        err << "error: --normalized is defined for the binomial case (k = 2)\n";
        return exit_usage;
    }

    const SpectrumQuery query(options.p, options.k, *n);
    OutputRecord record;
    std::string pretty;
    RatPoly normalized;
    IntPoly plain;
    if (options.normalized) {
        normalized = spectrum_normalized(query);
        record = make_record(*n, options.p, options.k, normalized);
        pretty = pretty_poly(normalized);
    } else {
        plain = spectrum(query);
        record = make_record(*n, options.p, options.k, plain);
        pretty = pretty_poly(plain);
    }

    for (const auto& text : options.evals) {
        const auto at = parse_rational(text);
        if (!at) {
            err << "error: --eval '" << text << "' is not an exact rational\n";
            return exit_usage;
        }
        const Rational value =
            options.normalized ? normalized.eval(*at) : plain.eval(*at);
        record.evaluations[at->get_str()] = value.get_str();
    }

    print_record(record, options.format, out, pretty);
    return exit_ok;
}

namespace {

int run_cpk_triangle(const TableOptions& options, std::ostream& out) {
    switch (options.format) {
        case Format::pretty:
            for (unsigned int k = 0; k <= options.rows; ++k) {
                const CpkTable table(options.p, k);
                for (std::size_t n = 0; n < table.values().size(); ++n) {
                    if (n) out << " ";
                    out << table.values()[n];
                }
                out << "\n";
            }
            break;
        case Format::json:
            for (unsigned int k = 0; k <= options.rows; ++k) {
                const CpkTable table(options.p, k);
                nlohmann::json row{{"p", options.p}, {"k", k}};
                std::vector<std::string> values;
                for (const auto& v : table.values()) values.push_back(v.get_str());
                row["values"] = values;
                out << row.dump() << "\n";
            }
            break;
        case Format::csv:
            out << "p,k,n,value\n";
            for (unsigned int k = 0; k <= options.rows; ++k) {
                const CpkTable table(options.p, k);
                for (std::size_t n = 0; n < table.values().size(); ++n) {
                    out << options.p << "," << k << "," << n << "," << table.values()[n] << "\n";
                }
            }
            break;
    }
    return exit_ok;
}

} // namespace

int run_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
    if (!is_prime(options.p)) {
        err << "error: --p " << options.p << " is not a prime\n";
        return exit_usage;
    }
    if (!options.triangle.empty()) {
        if (options.triangle != "cpk") {
            err << "error: unknown triangle '" << options.triangle << "' (expected: cpk)\n";
            return exit_usage;
        }
        return run_cpk_triangle(options, out);
    }

    const auto from = parse_nonnegative_integer(options.from);
    const auto to = parse_nonnegative_integer(options.to);
    if (!from || !to) {
        err << "error: --from/--to must be non-negative integers\n";
        return exit_usage;
    }
    if (*from > *to) {
        err << "error: --from exceeds --to\n";
        return exit_usage;
    }

    std::vector<OutputRecord> batch; // csv needs the whole range for padding
    for (Integer n = *from; n <= *to; ++n) {
        const IntPoly poly = spectrum(SpectrumQuery(options.p, options.k, n));
        switch (options.format) {
            case Format::pretty:
                out << n.get_str() << "\t" << pretty_poly(poly) << "\n";
                break;
            case Format::json:
                out << record_to_json(make_record(n, options.p, options.k, poly)).dump() << "\n";
                break;
            case Format::csv:
                batch.push_back(make_record(n, options.p, options.k, poly));
                break;
        }
    }
    if (options.format == Format::csv) write_csv(out, batch);
    return exit_ok;
}

} // namespace valspec::cli
