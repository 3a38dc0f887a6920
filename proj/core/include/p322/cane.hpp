#pragma once

#include "p322/rational.hpp"

namespace p322 {

/// A cane leaning against a wall: it has come down d cubits and gone out b.
struct CaneProblem {
    ExactRatio d;
    ExactRatio b;
};

struct CaneSolution {
    ExactRatio l;  // length of the cane: (d^2 + b^2) / 2d
    ExactRatio h;  // height on the wall, recovered as sqrt(l^2 - b^2)
};

/// Throws std::domain_error when d <= 0 (cane flat against the wall) or when
/// the configuration is impossible (h <= 0: cane shorter than its drop).
/// h is computed through the square-root step, not as l - d, though the two
/// agree exactly; (h, b, l) satisfies the rule of the right triangle.
CaneSolution solve_cane(const CaneProblem& p);

}  // namespace p322
