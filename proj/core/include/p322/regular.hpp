#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "p322/rational.hpp"

namespace p322 {

/// Exponents of 2, 3 and 5 proving a value regular: value = 2^a 3^b 5^c.
/// For integers the exponents are non-negative; ratios may have negative ones.
struct RegularFactorization {
    long alpha = 0;
    long beta = 0;
    long gamma = 0;

    friend bool operator==(const RegularFactorization&, const RegularFactorization&) = default;
};

/// Empty when n has a prime factor other than 2, 3, 5.
/// Throws std::domain_error for n < 1.
std::optional<RegularFactorization> regular_factorization(const Int& n);

/// Factorization of a positive ratio, negative exponents allowed.
std::optional<RegularFactorization> regular_factorization(const ExactRatio& r);

bool is_regular(const Int& n);
bool is_regular(const ExactRatio& r);

Int regular_value(const RegularFactorization& f);

/// All regular integers in [1, limit], ascending.
std::vector<Int> regular_numbers_upto(const Int& limit);

/// Largest 2·3·5-smooth divisor of n (n > 0).
Int regular_part(Int n);

/// m with m*m == n, or empty when n is not a perfect square (n >= 1).
std::optional<Int> integer_sqrt_exact(const Int& n);

/// Smallest k >= 0 with denom | 60^k; throws std::domain_error when denom is
/// not regular.
int power_of_sixty_clearing(const Int& denom);

/// v = mantissa * 60^exponent with 60 not dividing the mantissa (v > 0 with a
/// regular denominator). This is the number as inscribed, floating.
std::pair<Int, int> floating_mantissa(const ExactRatio& v);

/// The pair scaled by a common power of sixty into integers, with shared
/// trailing zero digits stripped — the two numbers as they sit side by side
/// on a working tablet.
std::pair<Int, Int> common_scale_pair(const ExactRatio& a, const ExactRatio& b);

}  // namespace p322
