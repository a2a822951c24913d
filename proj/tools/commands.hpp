#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "valspec/oracle.hpp"

#include "format.hpp"

namespace valspec::cli {

// Exit codes form a stable contract: 0 success, 1 verification failure,
// 2 usage or input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

struct SpectrumOptions {
    unsigned long p = 2;
    unsigned int k = 2;
    std::string n = "0";
    std::vector<std::string> evals;
    Format format = Format::pretty;
    bool normalized = false;
};

struct TableOptions {
    unsigned long p = 2;
    unsigned int k = 2;
    std::string from = "0";
    std::string to = "0";
    Format format = Format::pretty;
    std::string triangle; // "cpk" switches to triangle mode
    unsigned int rows = 4;
};

struct VerifyOptions {
    std::string suite = "all"; // oracle|recurrence|lemma|stern|fine|all
    long long limit = 100;
    std::vector<unsigned long> primes; // empty = per-suite defaults
    std::vector<unsigned int> ks;      // empty = per-suite defaults
    std::uint64_t oracle_budget = oracle::default_enumeration_budget;
};

struct BenchOptions {
    unsigned long p = 2;
    unsigned int k = 2;
    std::vector<unsigned int> digit_counts{10};
    unsigned int trials = 3;
    std::uint64_t seed = 0;
    std::uint64_t oracle_budget = oracle::default_enumeration_budget;
};

int run_spectrum(const SpectrumOptions& options, std::ostream& out, std::ostream& err);
int run_table(const TableOptions& options, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

/// VALSPEC_ORACLE_BUDGET, or the built-in default when unset/unparsable.
std::uint64_t oracle_budget_from_env();

} // namespace valspec::cli
