#include "kempner/applications.hpp"

#include <json.hpp>
#include <ostream>
#include <stdexcept>
#include <string>

namespace kempner {

u64 trailing_zeros(u64 m) {
    if (m == 0) throw DomainError("trailing_zeros requires m >= 1");
    return legendre_valuation(m, 5);
}

ZerosSolution solve_trailing_zeros(u64 z) {
    if (z == 0) return {0, {1, 2, 3, 4}};

    // eta(10^z) = max(eta_2(z), eta_5(z)) = eta_5(z).
    const u64 first = eta_p(z, 5);
    if (eta_p(z, 2) > first) throw std::logic_error("eta_2(z) > eta_5(z) for z=" + std::to_string(z));

    ZerosSolution solution{z, {}};
    if (trailing_zeros(first) != z) return solution;

    u64 past = 0;
    if (__builtin_add_overflow(first, u64{5}, &past)) throw OverflowError("zeros solution exceeds 64 bits");
    if (trailing_zeros(first + 4) != z || trailing_zeros(past) <= z)
        throw std::logic_error("trailing-zeros block around " + std::to_string(first) + " is not five wide");
    for (u64 m = first; m < past; ++m) solution.members.push_back(m);
    return solution;
}

EtaResult smallest_factorial_multiple(const FactoredExpr& n) { return eta(n.value); }

EtaResult smallest_factorial_multiple(std::string_view expr) {
    return smallest_factorial_multiple(parse_factored_expr(expr));
}

std::vector<CharacterizationViolation> prime_characterization_scan(u64 limit) {
    if (limit <= 4) throw DomainError("prime_characterization_scan requires limit > 4");
    if (limit > kScanBudget)
        throw BudgetError("scan limit " + std::to_string(limit) + " exceeds " + std::to_string(kScanBudget));

    std::vector<CharacterizationViolation> violations;
    for (u64 n = 5; n <= limit; ++n) {
        const u64 value = eta(factorize(1, n)).value;
        const bool prime = is_prime(n);
        if ((value == n) != prime) violations.push_back({n, value, prime});
    }
    return violations;
}

std::optional<TableFormat> parse_table_format(std::string_view name) {
    if (name == "plain") return TableFormat::plain;
    if (name == "csv") return TableFormat::csv;
    if (name == "json-lines") return TableFormat::json_lines;
    return std::nullopt;
}

void emit_table(u64 start, u64 end, TableFormat format, std::ostream& out) {
    if (start == 0 || start > end) throw DomainError("table requires 1 <= start <= end");
    if (end - start >= kTableBudget)
        throw BudgetError("table spans more than " + std::to_string(kTableBudget) + " rows");

    if (format == TableFormat::csv) out << "n,eta,argmax_prime\n";
    for (u64 n = start;; ++n) {
        const EtaResult r = eta(factorize(1, n));
        switch (format) {
        case TableFormat::plain:
            out << n << ' ' << r.value << '\n';
            break;
        case TableFormat::csv:
            out << n << ',' << r.value << ',' << r.argmax_prime.value_or(0) << '\n';
            break;
        case TableFormat::json_lines: {
            nlohmann::ordered_json witness = nlohmann::ordered_json::array();
            for (const auto& w : r.per_prime) witness.push_back({w.prime, w.exponent, w.eta});
            nlohmann::ordered_json record;
            record["n"] = n;
            record["eta"] = r.value;
            record["witness"] = std::move(witness);
            out << record.dump() << '\n';
            break;
        }
        }
        if (n == end) break;
    }
    if (!out) throw std::runtime_error("failed writing table output");
}

}  // namespace kempner
