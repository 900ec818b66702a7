#pragma once

#include <string_view>

#include "kempner/number_core.hpp"

namespace kempner {

// Parsed command-line integer: either a plain decimal ("-360") that was
// routed through factorize, or an explicit product of prime powers
// ("2^31*3^27*7^13") whose bases were validated and merged.
struct FactoredExpr {
    enum class Form { decimal, factored };

    Form form = Form::decimal;
    Factorization value;
};

// Grammar, whitespace allowed between tokens:
//   expr := [+|-] term ( '*' term )*
//   term := integer [ '^' integer ]
// A single term without '^' is a plain decimal. Repeated bases are merged by
// adding exponents. Throws ParseError (with position), NotPrimeError naming the
// base, OverflowError, ZeroError for "0".
FactoredExpr parse_factored_expr(std::string_view text);

}  // namespace kempner
