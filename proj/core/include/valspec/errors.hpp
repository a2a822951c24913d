#pragma once

#include <stdexcept>
#include <string>

namespace valspec {

// The modulus handed to a base-p operation is not a prime >= 2.
class invalid_modulus : public std::invalid_argument {
public:
    explicit invalid_modulus(const std::string& what) : std::invalid_argument(what) {}
};

// nu_p(n) requested for n <= 0, where the valuation is not defined.
class undefined_valuation : public std::domain_error {
public:
    explicit undefined_valuation(const std::string& what) : std::domain_error(what) {}
};

class dimension_mismatch : public std::invalid_argument {
public:
    explicit dimension_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A brute-force enumeration would visit more tuples than the configured budget.
class enumeration_too_large : public std::runtime_error {
public:
    explicit enumeration_too_large(const std::string& what) : std::runtime_error(what) {}
};

// The query asks for a computation path that only exists for specific k.
class unsupported_query : public std::invalid_argument {
public:
    explicit unsupported_query(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace valspec
