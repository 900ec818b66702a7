#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "kempner/eta.hpp"
#include "kempner/factored_expr.hpp"

namespace kempner {

// Number of trailing base-10 zeros of m!, i.e. v_5(m!). Requires m >= 1.
u64 trailing_zeros(u64 m);

// Every m >= 1 whose factorial ends in exactly z zeros. For z >= 1 the
// members are either empty (z is skipped at a multiple of 25) or the five
// consecutive values starting at eta_5(z). z = 0 gives {1, 2, 3, 4}.
struct ZerosSolution {
    u64 z = 0;
    std::vector<u64> members;
};

ZerosSolution solve_trailing_zeros(u64 z);

EtaResult smallest_factorial_multiple(const FactoredExpr& n);
EtaResult smallest_factorial_multiple(std::string_view expr);

struct CharacterizationViolation {
    u64 n = 0;
    u64 eta = 0;
    bool prime = false;

    friend bool operator==(const CharacterizationViolation&, const CharacterizationViolation&) = default;
};

inline constexpr u64 kScanBudget = 1'000'000;

// Every n in (4, limit] where (eta(n) == n) disagrees with is_prime(n).
// Throws DomainError for limit <= 4 and BudgetError above kScanBudget.
std::vector<CharacterizationViolation> prime_characterization_scan(u64 limit);

enum class TableFormat { plain, csv, json_lines };

std::optional<TableFormat> parse_table_format(std::string_view name);

inline constexpr u64 kTableBudget = 10'000'000;

// One record per n in [start, end], ascending. Index 1 is emitted with
// eta = 0 and, in csv, argmax_prime = 0.
//   plain:      "<n> <eta>"
//   csv:        header "n,eta,argmax_prime"
//   json-lines: {"n":..,"eta":..,"witness":[[p,a,eta_p],...]}
void emit_table(u64 start, u64 end, TableFormat format, std::ostream& out);

}  // namespace kempner
