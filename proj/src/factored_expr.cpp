#include "kempner/factored_expr.hpp"

#include <cctype>
#include <map>
#include <string>

namespace kempner {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FactoredExpr parse() {
        skip_space();
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_space();
        }

        std::vector<Term> terms;
        terms.push_back(term());
        skip_space();
        while (peek() == '*') {
            ++pos_;
            skip_space();
            terms.push_back(term());
            skip_space();
        }
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);

        if (terms.size() == 1 && !terms.front().has_exponent) {
            const u64 value = terms.front().base;
            if (value == 0) throw ZeroError("0 is outside the domain Z \\ {0}");
            return {FactoredExpr::Form::decimal, factorize(sign, value)};
        }
        return {FactoredExpr::Form::factored, merge(sign, terms)};
    }

private:
    struct Term {
        u64 base;
        u64 exponent;
        bool has_exponent;
        std::size_t base_pos;
    };

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    u64 integer() {
        const std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a digit", pos_);
        u64 value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto digit = static_cast<u64>(text_[pos_] - '0');
            if (__builtin_mul_overflow(value, u64{10}, &value) || __builtin_add_overflow(value, digit, &value))
                throw OverflowError("integer starting at position " + std::to_string(start) + " exceeds 64 bits");
            ++pos_;
        }
        return value;
    }

    Term term() {
        Term t{0, 1, false, pos_};
        t.base = integer();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const std::size_t exp_pos = pos_;
            t.exponent = integer();
            t.has_exponent = true;
            if (t.exponent == 0) throw ParseError("exponent must be >= 1", exp_pos);
        }
        return t;
    }

    static Factorization merge(int sign, const std::vector<Term>& terms) {
        std::map<u64, u64> merged;
        for (const auto& t : terms) {
            if (!is_prime(t.base))
                throw NotPrimeError("base " + std::to_string(t.base) + " at position " + std::to_string(t.base_pos) +
                                    " is not prime");
            u64& e = merged[t.base];
            if (__builtin_add_overflow(e, t.exponent, &e))
                throw OverflowError("merged exponent of " + std::to_string(t.base) + " exceeds 64 bits");
        }
        std::vector<PrimePower> factors;
        for (const auto& [prime, exponent] : merged) factors.push_back({prime, exponent});
        return Factorization::make(sign, std::move(factors));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

FactoredExpr parse_factored_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace kempner
