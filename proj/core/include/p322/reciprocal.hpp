#pragma once

#include <vector>

#include "p322/sexagesimal.hpp"

namespace p322 {

struct ReciprocalEntry {
    Int n;             // regular integer
    Sexagesimal nbar;  // exact 1/n; n * value(nbar) is a power of sixty
};

/// Exact finite expansion of 1/n. Throws std::domain_error unless n is
/// regular.
Sexagesimal reciprocal(const Int& n);

/// The standard table: the 30 regular integers in [2, 81] with their
/// reciprocals, ascending in n.
std::vector<ReciprocalEntry> standard_reciprocal_table();

struct ReciprocalBounds {
    Sexagesimal lower;  // truncation to `digits` fractional places
    Sexagesimal upper;  // lower + one unit in the last place
};

/// Bounds on 1/n for non-regular n, lower <= 1/n <= upper, strict when 1/n
/// does not terminate at `digits` places. Throws std::domain_error for
/// regular n (use reciprocal) or digits < 1.
ReciprocalBounds approximate_reciprocal(const Int& n, int digits);

enum class Sqrt2Variant {
    rough,   // 1;30
    coarse,  // 1;25
    fine,    // 1;24 51 10
};

/// The attested constants; nothing is computed.
Sexagesimal sqrt2_constant(Sqrt2Variant variant);

/// side times the fine root-two constant, exact.
Sexagesimal diagonal_of_square(const Sexagesimal& side);

}  // namespace p322
