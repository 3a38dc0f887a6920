#include "p322/reciprocal.hpp"

#include <stdexcept>

#include "p322/regular.hpp"

namespace p322 {

Sexagesimal reciprocal(const Int& n) {
    if (n < 1) throw std::domain_error("reciprocal: argument must be positive");
    if (!is_regular(n)) throw std::domain_error("reciprocal: not a regular number");
    return Sexagesimal::from_ratio(ratio(1, n));
}

std::vector<ReciprocalEntry> standard_reciprocal_table() {
    std::vector<ReciprocalEntry> table;
    for (const Int& n : regular_numbers_upto(81)) {
        if (n < 2) continue;
        table.push_back({n, reciprocal(n)});
    }
    return table;
}

ReciprocalBounds approximate_reciprocal(const Int& n, int digits) {
    if (digits < 1) throw std::domain_error("approximate_reciprocal: need at least one digit");
    if (n < 2) throw std::domain_error("approximate_reciprocal: argument must exceed 1");
    if (is_regular(n))
        throw std::domain_error("approximate_reciprocal: regular number has an exact reciprocal");
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 60;
    const Int floor_scaled = scale / n;  // 1/n truncated to `digits` places
    return {Sexagesimal::from_ratio(ratio(floor_scaled, scale)),
            Sexagesimal::from_ratio(ratio(floor_scaled + 1, scale))};
}

Sexagesimal sqrt2_constant(Sqrt2Variant variant) {
    switch (variant) {
        case Sqrt2Variant::rough: return Sexagesimal({1, 30}, 1);
        case Sqrt2Variant::coarse: return Sexagesimal({1, 25}, 1);
        case Sqrt2Variant::fine: return Sexagesimal({1, 24, 51, 10}, 3);
    }
    throw std::invalid_argument("sqrt2_constant: unknown variant");
}

Sexagesimal diagonal_of_square(const Sexagesimal& side) {
    if (!(side.value() > 0)) throw std::domain_error("diagonal_of_square: side must be positive");
    return side * sqrt2_constant(Sqrt2Variant::fine);
}

}  // namespace p322
