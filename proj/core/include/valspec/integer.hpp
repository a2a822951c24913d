#pragma once

#include <gmpxx.h>

namespace valspec {

// Every quantity in the library is exact: arbitrary-precision integers
// everywhere, rationals only on the normalization path. No floating point.
using Integer = mpz_class;
using Rational = mpq_class;

} // namespace valspec
