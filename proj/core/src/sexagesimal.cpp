#include "p322/sexagesimal.hpp"

#include <algorithm>
#include <stdexcept>

#include "p322/regular.hpp"

namespace p322 {

namespace {

bool any_flag(const std::vector<bool>& flags) {
    return std::find(flags.begin(), flags.end(), true) != flags.end();
}

}  // namespace

Sexagesimal::Sexagesimal() = default;

Sexagesimal::Sexagesimal(std::vector<int> digits, int frac_point, bool negative,
                         std::vector<bool> extrapolated) {
    if (digits.empty()) throw std::invalid_argument("sexagesimal: empty digit list");
    if (!extrapolated.empty() && extrapolated.size() != digits.size())
        throw std::invalid_argument("sexagesimal: flag count does not match digit count");
    for (int d : digits)
        if (d < 0 || d > 59) throw std::invalid_argument("sexagesimal: digit out of [0,59]");
    if (frac_point < 0 || frac_point > static_cast<int>(digits.size()))
        throw std::invalid_argument("sexagesimal: fraction point out of range");
    if (frac_point == static_cast<int>(digits.size())) {
        digits.insert(digits.begin(), 0);
        if (!extrapolated.empty()) extrapolated.insert(extrapolated.begin(), false);
    }
    const int int_len = static_cast<int>(digits.size()) - frac_point;
    if (int_len > 1 && digits.front() == 0)
        throw std::invalid_argument("sexagesimal: leading zero in the integer part");
    digits_ = std::move(digits);
    frac_ = frac_point;
    negative_ = negative && !(digits_.size() == 1 && digits_[0] == 0 && frac_ == 0);
    if (any_flag(extrapolated)) extrapolated_ = std::move(extrapolated);
    if (negative_ && value() == 0) negative_ = false;
}

Sexagesimal Sexagesimal::from_integer(const Int& n) {
    Int m = n < 0 ? Int(-n) : n;
    std::vector<int> digits;
    while (m > 0) {
        digits.push_back(static_cast<int>(m % 60));
        m /= 60;
    }
    if (digits.empty()) digits.push_back(0);
    std::reverse(digits.begin(), digits.end());
    return Sexagesimal(std::move(digits), 0, n < 0);
}

Sexagesimal Sexagesimal::from_ratio(const ExactRatio& val) {
    const bool neg = val < 0;
    const ExactRatio v = neg ? ExactRatio(-val) : val;
    const Int d = denominator(v);
    if (!is_regular(d))
        throw std::domain_error("sexagesimal: denominator not regular, expansion would not terminate");
    Int whole = numerator(v) / d;
    ExactRatio frac = v - ExactRatio(whole);

    std::vector<int> digits;
    while (whole > 0) {
        digits.push_back(static_cast<int>(whole % 60));
        whole /= 60;
    }
    if (digits.empty()) digits.push_back(0);
    std::reverse(digits.begin(), digits.end());

    int frac_count = 0;
    while (frac != 0) {
        frac *= 60;
        Int digit = numerator(frac) / denominator(frac);
        digits.push_back(static_cast<int>(digit));
        frac -= ExactRatio(digit);
        ++frac_count;
    }
    return Sexagesimal(std::move(digits), frac_count, neg);
}

ExactRatio Sexagesimal::value() const {
    ExactRatio acc = 0;
    for (int d : digits_) acc = acc * 60 + d;
    Int scale = 1;
    for (int i = 0; i < frac_; ++i) scale *= 60;
    ExactRatio v = acc / ExactRatio(scale);
    return negative_ ? ExactRatio(-v) : v;
}

std::vector<int> Sexagesimal::floating_digits() const {
    std::size_t first = 0;
    while (first + 1 < digits_.size() && digits_[first] == 0) ++first;
    std::size_t last = digits_.size();
    while (last > first + 1 && digits_[last - 1] == 0) --last;
    return std::vector<int>(digits_.begin() + static_cast<long>(first),
                            digits_.begin() + static_cast<long>(last));
}

Int Sexagesimal::mantissa() const {
    Int m = 0;
    for (int d : floating_digits()) m = m * 60 + d;
    return m;
}

Sexagesimal Sexagesimal::with_flags(std::vector<bool> extrapolated) const {
    return Sexagesimal(digits_, frac_, negative_, std::move(extrapolated));
}

Sexagesimal Sexagesimal::without_flags() const {
    return Sexagesimal(digits_, frac_, negative_);
}

Sexagesimal operator+(const Sexagesimal& a, const Sexagesimal& b) {
    return Sexagesimal::from_ratio(a.value() + b.value());
}

Sexagesimal operator-(const Sexagesimal& a, const Sexagesimal& b) {
    return Sexagesimal::from_ratio(a.value() - b.value());
}

Sexagesimal operator*(const Sexagesimal& a, const Sexagesimal& b) {
    return Sexagesimal::from_ratio(a.value() * b.value());
}

Sexagesimal parse_sexagesimal(std::string_view text) {
    std::size_t begin = text.find_first_not_of(' ');
    std::size_t end = text.find_last_not_of(' ');
    if (begin == std::string_view::npos) throw std::invalid_argument("sexagesimal: empty input");
    text = text.substr(begin, end - begin + 1);

    bool negative = false;
    if (text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }

    std::vector<int> digits;
    std::vector<bool> flags;
    std::string token;
    bool token_flagged = false;
    bool in_bracket = false;
    int frac_start = -1;  // index of the first fractional digit
    int spaces = 0;
    bool gap_pending = false;

    auto flush = [&] {
        if (token.empty()) return;
        if (gap_pending) {  // a run of blank space where a digit belongs reads as zero
            digits.push_back(0);
            flags.push_back(false);
            gap_pending = false;
        }
        const int value = std::stoi(token);
        if (value > 59) throw std::invalid_argument("sexagesimal: digit '" + token + "' exceeds 59");
        digits.push_back(value);
        flags.push_back(token_flagged);
        token.clear();
        token_flagged = false;
    };

    for (char c : text) {
        if (c == '[') {
            if (in_bracket) throw std::invalid_argument("sexagesimal: nested '['");
            in_bracket = true;
        } else if (c == ']') {
            if (!in_bracket) throw std::invalid_argument("sexagesimal: unbalanced ']'");
            in_bracket = false;
        } else if (c == ';') {
            if (frac_start >= 0) throw std::invalid_argument("sexagesimal: multiple fraction marks");
            flush();
            gap_pending = false;
            spaces = 0;
            frac_start = static_cast<int>(digits.size());
        } else if (c == ' ') {
            flush();
            if (++spaces >= 2 && !digits.empty()) gap_pending = true;
        } else if (c >= '0' && c <= '9') {
            if (spaces > 0 || token.empty()) spaces = 0;
            if (token.size() == 2)
                throw std::invalid_argument("sexagesimal: digit token longer than two characters");
            token.push_back(c);
            if (in_bracket) token_flagged = true;
        } else {
            throw std::invalid_argument(std::string("sexagesimal: unexpected character '") + c + "'");
        }
    }
    flush();
    if (in_bracket) throw std::invalid_argument("sexagesimal: unbalanced '['");
    if (digits.empty()) throw std::invalid_argument("sexagesimal: no digits");
    if (frac_start == static_cast<int>(digits.size()))
        throw std::invalid_argument("sexagesimal: fraction mark with no fractional digits");

    const int frac = frac_start < 0 ? 0 : static_cast<int>(digits.size()) - frac_start;
    return Sexagesimal(std::move(digits), frac, negative, std::move(flags));
}

std::string format_sexagesimal(const Sexagesimal& v, Style style) {
    std::vector<int> digits = v.digits();
    std::vector<bool> flags(digits.size(), false);
    for (std::size_t i = 0; i < digits.size(); ++i) flags[i] = v.digit_extrapolated(i);
    int frac = v.frac_point();

    if (style == Style::tablet) {
        while (digits.size() > 1 && digits.front() == 0) {
            digits.erase(digits.begin());
            flags.erase(flags.begin());
        }
        while (frac > 0 && digits.size() > 1 && digits.back() == 0) {
            digits.pop_back();
            flags.pop_back();
            --frac;
        }
        frac = 0;  // floating: the power of sixty is left to context
    }

    std::string out;
    if (v.negative()) out += '-';
    const int int_len = static_cast<int>(digits.size()) - frac;
    bool open = false;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const bool boundary = static_cast<int>(i) == int_len;
        if (i > 0) {
            if (open && (!flags[i] || boundary)) {
                out += ']';
                open = false;
            }
            out += boundary ? ";" : " ";
        }
        if (flags[i] && !open) {
            out += '[';
            open = true;
        }
        if (i == 0) {
            out += std::to_string(digits[i]);
        } else {
            if (digits[i] < 10) out += '0';
            out += std::to_string(digits[i]);
        }
        if (open && i + 1 == digits.size()) {
            out += ']';
            open = false;
        }
    }
    return out;
}

}  // namespace p322
