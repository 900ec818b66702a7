#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kempner/applications.hpp"
#include "kempner/eta.hpp"
#include "kempner/factored_expr.hpp"
#include "kempner/repunit_repr.hpp"
#include "kempner/verify.hpp"

namespace kempner::cli {

namespace {

constexpr std::string_view kUsage = R"(usage: kempner <command> [args]

commands:
  eta <expr>                 smallest m with m! a multiple of expr
  eta-p <k> <p>              smallest m with p^k | m!
  decompose <k> <p>          k in the generalized repunit base of p
  valuation <m> <p>          exponent of p in m!
  zeros <z>                  every m whose m! ends in exactly z zeros
  table <start> <end> [--format plain|csv|json-lines]
  factor <expr>              prime factorization
  verify [--max-k K] [--max-n N] [--primes P]

<expr> is a decimal integer or a product such as -2^31*3^27*7^13.
)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

u64 to_u64(std::string_view text, std::string_view what) {
    u64 value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec == std::errc::result_out_of_range) throw OverflowError(std::string(what) + " exceeds 64 bits");
    if (ec != std::errc() || ptr != end)
        throw UsageError(std::string(what) + " must be a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

void expect_args(std::span<const std::string_view> args, std::size_t count, std::string_view command) {
    if (args.size() != count)
        throw UsageError(std::string(command) + " takes " + std::to_string(count) + " argument(s)");
}

// Splits "--name value" / "--name=value" flags from positionals.
struct Flags {
    std::vector<std::string_view> positional;
    std::vector<std::pair<std::string_view, std::string_view>> named;

    Flags(std::span<const std::string_view> args, std::initializer_list<std::string_view> allowed) {
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string_view arg = args[i];
            if (!arg.starts_with("--")) {
                positional.push_back(arg);
                continue;
            }
            std::string_view name = arg, value;
            if (auto eq = arg.find('='); eq != std::string_view::npos) {
                name = arg.substr(0, eq);
                value = arg.substr(eq + 1);
            } else if (i + 1 < args.size()) {
                value = args[++i];
            } else {
                throw UsageError("flag " + std::string(name) + " needs a value");
            }
            if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
                throw UsageError("unknown flag " + std::string(name));
            named.emplace_back(name, value);
        }
    }

    std::optional<std::string_view> get(std::string_view name) const {
        std::optional<std::string_view> found;
        for (const auto& [n, v] : named)
            if (n == name) found = v;
        return found;
    }
};

int cmd_eta(std::span<const std::string_view> args, std::ostream& out) {
    expect_args(args, 1, "eta");
    const auto expr = parse_factored_expr(args[0]);
    const EtaResult r = smallest_factorial_multiple(expr);
    out << r.value << '\n';
    out << "n = " << expr.value.to_string() << '\n';
    for (const auto& w : r.per_prime) out << "eta_" << w.prime << '(' << w.exponent << ") = " << w.eta << '\n';
    if (r.argmax_prime) out << "argmax_prime = " << *r.argmax_prime << '\n';
    return kOk;
}

int cmd_eta_p(std::span<const std::string_view> args, std::ostream& out) {
    expect_args(args, 2, "eta-p");
    out << eta_p(to_u64(args[0], "k"), to_u64(args[1], "p")) << '\n';
    return kOk;
}

int cmd_decompose(std::span<const std::string_view> args, std::ostream& out) {
    expect_args(args, 2, "decompose");
    const u64 k = to_u64(args[0], "k");
    const auto d = decompose(k, to_u64(args[1], "p"));
    std::string symbolic, expanded;
    for (const auto& t : d.terms) {
        if (!symbolic.empty()) {
            symbolic += " + ";
            expanded += " + ";
        }
        symbolic += std::to_string(t.digit) + "*a_" + std::to_string(t.exponent);
        expanded += std::to_string(t.digit) + "*" + std::to_string(repunit(d.p, t.exponent));
    }
    out << k << " = " << symbolic << "  (p = " << d.p << ")\n";
    out << k << " = " << expanded << '\n';
    return kOk;
}

int cmd_valuation(std::span<const std::string_view> args, std::ostream& out) {
    expect_args(args, 2, "valuation");
    const u64 m = to_u64(args[0], "m");
    const u64 p = to_u64(args[1], "p");
    require_prime(p);
    out << legendre_valuation(m, p) << '\n';
    return kOk;
}

int cmd_zeros(std::span<const std::string_view> args, std::ostream& out, std::ostream& err) {
    expect_args(args, 1, "zeros");
    const auto solution = solve_trailing_zeros(to_u64(args[0], "z"));
    for (std::size_t i = 0; i < solution.members.size(); ++i) out << (i ? " " : "") << solution.members[i];
    out << '\n';
    if (solution.members.empty()) err << "no factorial ends in exactly " << solution.z << " zeros\n";
    return kOk;
}

int cmd_table(std::span<const std::string_view> args, std::ostream& out, std::ostream& err) {
    const Flags flags(args, {"--format"});
    if (flags.positional.size() != 2) throw UsageError("table takes <start> <end>");
    auto format = TableFormat::plain;
    if (auto name = flags.get("--format")) {
        auto parsed = parse_table_format(*name);
        if (!parsed) throw UsageError("unknown format '" + std::string(*name) + "'");
        format = *parsed;
    }
    const u64 start = to_u64(flags.positional[0], "start");
    const u64 end = to_u64(flags.positional[1], "end");
    if (start == 1) err << "note: convention eta(1)=0\n";
    emit_table(start, end, format, out);
    return kOk;
}

int cmd_factor(std::span<const std::string_view> args, std::ostream& out) {
    expect_args(args, 1, "factor");
    out << parse_factored_expr(args[0]).value.to_string() << '\n';
    return kOk;
}

int cmd_verify(std::span<const std::string_view> args, std::ostream& out) {
    const Flags flags(args, {"--max-k", "--max-n", "--primes"});
    if (!flags.positional.empty()) throw UsageError("verify takes only flags");
    VerifyOptions options;
    if (auto v = flags.get("--max-k")) options.max_k = to_u64(*v, "--max-k");
    if (auto v = flags.get("--max-n")) options.max_n = to_u64(*v, "--max-n");
    if (auto v = flags.get("--primes")) options.primes = to_u64(*v, "--primes");

    const auto results = run_verification(options);
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.passed) {
            ++passed;
            out << "PASS " << r.name << '\n';
        } else {
            out << "FAIL " << r.name << ": " << r.detail << '\n';
        }
    }
    out << passed << '/' << results.size() << " checks passed\n";
    return passed == results.size() ? kOk : kVerifyFailed;
}

}  // namespace

int run(std::span<const std::string_view> args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return kUsageError;
    }
    const std::string_view command = args[0];
    const auto rest = args.subspan(1);
    try {
        if (command == "-h" || command == "--help" || command == "help") {
            out << kUsage;
            return kOk;
        }
        if (command == "eta") return cmd_eta(rest, out);
        if (command == "eta-p") return cmd_eta_p(rest, out);
        if (command == "decompose") return cmd_decompose(rest, out);
        if (command == "valuation") return cmd_valuation(rest, out);
        if (command == "zeros") return cmd_zeros(rest, out, err);
        if (command == "table") return cmd_table(rest, out, err);
        if (command == "factor") return cmd_factor(rest, out);
        if (command == "verify") return cmd_verify(rest, out);
        throw UsageError("unknown command '" + std::string(command) + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << kUsage;
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace kempner::cli
