#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "p322/rational.hpp"

namespace p322 {

/// An exact base-60 number: sign, digit sequence (most significant first,
/// each digit in [0,59]) and the count of digits belonging to the fractional
/// part. Digits may carry an "extrapolated" flag, used for tablet cells that
/// are restored rather than legible (bracketed in transliterations).
///
/// The fraction point is the modern semicolon convention; a value can also be
/// viewed "floating", i.e. as the Babylonians wrote it, with the power of
/// sixty left to context (see floating_digits/mantissa).
class Sexagesimal {
public:
    /// Zero.
    Sexagesimal();

    /// Throws std::invalid_argument if a digit is out of [0,59], the digit
    /// list is empty, frac_point exceeds the digit count, the integer part
    /// carries a superfluous leading zero, or the flag vector length does
    /// not match. A wholly fractional digit list gets a zero integer digit
    /// prepended so the integer part is never empty.
    Sexagesimal(std::vector<int> digits, int frac_point, bool negative = false,
                std::vector<bool> extrapolated = {});

    static Sexagesimal from_integer(const Int& n);
    /// Exact conversion; throws std::domain_error unless the denominator is
    /// regular (the expansion would not terminate otherwise).
    static Sexagesimal from_ratio(const ExactRatio& value);

    const std::vector<int>& digits() const { return digits_; }
    int frac_point() const { return frac_; }
    bool negative() const { return negative_; }
    /// Empty when no digit is flagged, else one flag per digit.
    const std::vector<bool>& extrapolated() const { return extrapolated_; }
    bool has_extrapolated() const { return !extrapolated_.empty(); }
    bool digit_extrapolated(std::size_t i) const {
        return !extrapolated_.empty() && extrapolated_.at(i);
    }

    ExactRatio value() const;

    /// Digits with leading and (fractional) trailing zeros stripped — the
    /// inscribed form, power of sixty dropped. Zero yields {0}.
    std::vector<int> floating_digits() const;
    /// floating_digits read as one base-60 integer.
    Int mantissa() const;

    Sexagesimal with_flags(std::vector<bool> extrapolated) const;
    Sexagesimal without_flags() const;

    /// Value equality (sign and magnitude); flags do not participate.
    friend bool operator==(const Sexagesimal& a, const Sexagesimal& b) {
        return a.value() == b.value();
    }
    friend bool operator!=(const Sexagesimal& a, const Sexagesimal& b) { return !(a == b); }
    friend bool operator<(const Sexagesimal& a, const Sexagesimal& b) {
        return a.value() < b.value();
    }

    friend Sexagesimal operator+(const Sexagesimal& a, const Sexagesimal& b);
    friend Sexagesimal operator-(const Sexagesimal& a, const Sexagesimal& b);
    friend Sexagesimal operator*(const Sexagesimal& a, const Sexagesimal& b);

private:
    bool negative_ = false;
    std::vector<int> digits_{0};
    int frac_ = 0;
    std::vector<bool> extrapolated_;  // empty, or digits_.size() flags
};

enum class Style {
    canonical,  // fraction point shown, digits after the first zero-padded
    tablet,     // floating: no fraction point, leading/trailing zeros dropped
};

/// Grammar: `[-] digit ( ' ' digit )* [ ';' digit ( ' ' digit )* ]` where a
/// digit is 1–2 decimal characters with value <= 59. `[`...`]` spans flag the
/// covered digits as extrapolated (a span may open or close inside a digit,
/// as in `5[3]`). A run of two or more spaces between digits is read as an
/// uninscribed zero digit. Throws std::invalid_argument on malformed input.
Sexagesimal parse_sexagesimal(std::string_view text);

/// Canonical style round-trips exactly: parse(format(v)) == v including
/// flags. Tablet style drops the fraction point and is lossy up to a power
/// of sixty.
std::string format_sexagesimal(const Sexagesimal& v, Style style = Style::canonical);

}  // namespace p322
