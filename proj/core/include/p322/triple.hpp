#pragma once

#include <optional>
#include <vector>

#include "p322/sexagesimal.hpp"

namespace p322 {

/// Regular generators p > q >= 1. Construction validates.
struct GeneratingPair {
    Int p;
    Int q;

    GeneratingPair(Int p_, Int q_);
};

/// w^2 + l^2 = d^2 with w, l < d. Construction validates the identity.
struct Triple {
    Int w;  // width (short side)
    Int l;  // length
    Int d;  // diagonal

    Triple(Int w_, Int l_, Int d_);

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// (m, (m^2-1)/2, (m^2+1)/2) for odd m >= 3.
Triple greek_odd_triple(const Int& m);

/// (p^2-q^2, 2pq, p^2+q^2).
Triple pq_triple(const GeneratingPair& pair);

/// p^2 - q^2 < 2pq, i.e. 1 < p/q < 1 + sqrt(2): the generated width is
/// shorter than the length.
bool is_admissible(const GeneratingPair& pair);
bool is_admissible(const ExactRatio& r);

/// How the paper's several step sequences for one line are chosen. Every
/// strategy reaches the same primitive triple; only the recorded multipliers
/// and intermediate pairs differ. Decisions look at the trailing sexagesimal
/// digits of the working pair (a zero trailing digit counts as 60).
enum class MultiplierStrategy {
    /// Multiply by 60/g, g the largest common divisor of the trailing digits
    /// that divides 60.
    maximal_factor,
    /// Prefer x30 (halving) when both trailing digits are even, unless some
    /// divisor of 60 >= 6 divides both; reproduces the x3, x30, x30 run for
    /// the last tablet line.
    halving_first,
    /// x2 when 30 divides both trailing digits, x12 when 5 divides both,
    /// else as maximal_factor; reproduces the x2, x12, x12, x12 run for
    /// line 2.
    robson,
    /// The floating twin of maximal_factor with multipliers stated as
    /// reciprocals (x1/30 for x2, x1/5 for x12, ...).
    modified,
};

struct EliminationStep {
    ExactRatio multiplier;  // as stated; always a regular ratio
    Sexagesimal lhs;        // working pair after the step, common floating scale
    Sexagesimal rhs;
};

/// Repeatedly applies a strategy's multipliers to the pair until the
/// integers at common scale share no factor of 2, 3 or 5.
struct EliminationOutcome {
    std::vector<EliminationStep> steps;
    Int lhs;
    Int rhs;
};
EliminationOutcome eliminate_regular_factors(const ExactRatio& x, const ExactRatio& y,
                                             MultiplierStrategy strategy);

struct RMethodTrace {
    ExactRatio r;
    ExactRatio rbar;  // 1/r
    ExactRatio x;     // (r - rbar)/2
    ExactRatio y;     // (r + rbar)/2
    std::vector<EliminationStep> steps;
    Triple result;  // primitive
    /// The pair (60x, 1 00, 60y) when 60x and 60y are integers — the scaled
    /// form the tablet keeps at line 11.
    std::optional<Triple> tablet_form;
};

/// Bruins' reciprocal method. Requires r > 1, regular and admissible
/// (std::domain_error otherwise). The primitive result is independently
/// anchored by integer gcd reduction of the scaled pair; the chosen strategy
/// only shapes the trace.
RMethodTrace r_method(const ExactRatio& r,
                      MultiplierStrategy strategy = MultiplierStrategy::maximal_factor);

/// Exact expansion of d^2/l^2 (with leading one) or w^2/l^2 (without); the
/// two differ by exactly 1. Throws std::domain_error when l is not regular.
Sexagesimal column_one(const Triple& t, bool leading_one = true);

enum class PqRRelation {
    identical,
    pq_is_double,  // p and q both odd: the pq triple is twice the primitive
};

/// Requires an admissible pair.
PqRRelation pq_vs_r_equivalence(const GeneratingPair& pair);

}  // namespace p322
