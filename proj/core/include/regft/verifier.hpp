#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace regft {

enum class FailureReason { NoBoxed, Mismatch };

struct Verdict {
    int reward = 0;
    std::optional<std::string> extracted_answer;
    std::optional<FailureReason> failure_reason;
};

// Exact rational with int64 numerator and positive int64 denominator,
// normalized. Covers integers, decimals, and a/b fractions; anything that
// would overflow fails to parse and falls back to string comparison.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
};

// Accepts [+-]?digits, [+-]?digits.digits, [+-]?.digits, [+-]?digits/digits.
std::optional<Rational> parse_rational(std::string_view s);

// Trim whitespace, then strip one pair of outer $...$ and trim again.
std::string canonicalize_answer(std::string_view s);

// Content of the LAST \boxed{...} occurrence, with balanced-brace matching.
// Unbalanced braces in the last box yield nullopt.
std::optional<std::string> extract_boxed(std::string_view text);

// Binary rule-based check: reward 1 iff the canonicalized extracted answer
// equals the canonicalized gold answer (numerically when both sides parse
// as rationals, exact string equality otherwise).
Verdict verify(std::string_view text, std::string_view gold_answer);

}  // namespace regft
