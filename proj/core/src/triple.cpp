#include "p322/triple.hpp"

#include <stdexcept>

#include "p322/regular.hpp"

namespace p322 {

namespace {

Int gcd(Int a, Int b) {
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

bool shares_2_3_5(const Int& g) { return g % 2 == 0 || g % 3 == 0 || g % 5 == 0; }

// Strategy decisions work from the trailing sexagesimal digits of the
// working pair; an empty (zero) trailing digit means the number ends in a
// full place and counts as 60.
ExactRatio pick_multiplier(MultiplierStrategy strategy, const Int& lhs, const Int& rhs) {
    const Int ta = lhs % 60 == 0 ? Int(60) : lhs % 60;
    const Int tb = rhs % 60 == 0 ? Int(60) : rhs % 60;
    const Int g = gcd(gcd(ta, tb), 60);
    switch (strategy) {
        case MultiplierStrategy::maximal_factor:
            return ratio(60, g);
        case MultiplierStrategy::modified:
            return ratio(1, g);
        case MultiplierStrategy::halving_first: {
            for (int d : {30, 20, 15, 12, 10, 6})
                if (ta % d == 0 && tb % d == 0) return ratio(60, d);
            if (ta % 2 == 0 && tb % 2 == 0) return ExactRatio(30);
            return ratio(60, g);
        }
        case MultiplierStrategy::robson: {
            if (ta % 30 == 0 && tb % 30 == 0) return ExactRatio(2);
            if (ta % 5 == 0 && tb % 5 == 0) return ExactRatio(12);
            return ratio(60, g);
        }
    }
    throw std::invalid_argument("unknown multiplier strategy");
}

}  // namespace

GeneratingPair::GeneratingPair(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
    if (q < 1 || p <= q) throw std::domain_error("generating pair requires p > q >= 1");
    if (!is_regular(p) || !is_regular(q))
        throw std::domain_error("generating pair requires regular p and q");
}

Triple::Triple(Int w_, Int l_, Int d_) : w(std::move(w_)), l(std::move(l_)), d(std::move(d_)) {
    if (w < 1 || l < 1 || d < 1 || w * w + l * l != d * d)
        throw std::domain_error("not a Pythagorean triple");
}

Triple greek_odd_triple(const Int& m) {
    if (m < 3 || m % 2 == 0) throw std::domain_error("greek_odd_triple: need an odd m >= 3");
    return Triple(m, (m * m - 1) / 2, (m * m + 1) / 2);
}

Triple pq_triple(const GeneratingPair& pair) {
    const Int &p = pair.p, &q = pair.q;
    return Triple(p * p - q * q, 2 * p * q, p * p + q * q);
}

bool is_admissible(const GeneratingPair& pair) {
    return pair.p * pair.p - pair.q * pair.q < 2 * pair.p * pair.q;
}

bool is_admissible(const ExactRatio& r) {
    // 1 < r < 1 + sqrt(2), compared exactly as (r - 1)^2 < 2.
    return r > 1 && (r - 1) * (r - 1) < 2;
}

EliminationOutcome eliminate_regular_factors(const ExactRatio& x, const ExactRatio& y,
                                             MultiplierStrategy strategy) {
    if (x <= 0 || y <= 0)
        throw std::domain_error("eliminate_regular_factors: pair must be positive");
    ExactRatio lhs = x, rhs = y;
    EliminationOutcome out;
    for (int iteration = 0;; ++iteration) {
        auto [a, b] = common_scale_pair(lhs, rhs);
        if (!shares_2_3_5(gcd(a, b))) {
            out.lhs = a;
            out.rhs = b;
            return out;
        }
        if (iteration > 64)
            throw std::logic_error("eliminate_regular_factors: no progress");
        const ExactRatio m = pick_multiplier(strategy, a, b);
        lhs *= m;
        rhs *= m;
        auto [na, nb] = common_scale_pair(lhs, rhs);
        out.steps.push_back(
            {m, Sexagesimal::from_integer(na), Sexagesimal::from_integer(nb)});
    }
}

RMethodTrace r_method(const ExactRatio& r, MultiplierStrategy strategy) {
    if (r <= 1) throw std::domain_error("r_method: generating ratio must exceed 1");
    if (!is_regular(r)) throw std::domain_error("r_method: generating ratio must be regular");
    if (!is_admissible(r)) throw std::domain_error("r_method: generating ratio not admissible");

    RMethodTrace trace;
    trace.r = r;
    trace.rbar = 1 / r;
    trace.x = (r - trace.rbar) / 2;
    trace.y = (r + trace.rbar) / 2;

    auto outcome = eliminate_regular_factors(trace.x, trace.y, strategy);
    trace.steps = std::move(outcome.steps);

    const Int w = outcome.lhs;
    const Int d = outcome.rhs;
    const auto l = integer_sqrt_exact(d * d - w * w);
    if (!l) throw std::logic_error("r_method: eliminated pair is not part of a triple");
    trace.result = Triple(w, *l, d);

    // Anchor: the primitive triple by plain integer gcd reduction of the pq
    // values. Every strategy must land on it.
    const Int p = numerator(r), q = denominator(r);
    Int w0 = p * p - q * q, l0 = 2 * p * q, d0 = p * p + q * q;
    const Int g = gcd(gcd(w0, l0), d0);
    if (trace.result != Triple(w0 / g, l0 / g, d0 / g))
        throw std::logic_error("r_method: trace disagrees with the gcd reduction anchor");

    const ExactRatio sw = trace.x * 60, sd = trace.y * 60;
    if (denominator(sw) == 1 && denominator(sd) == 1)
        trace.tablet_form = Triple(numerator(sw), 60, numerator(sd));
    return trace;
}

Sexagesimal column_one(const Triple& t, bool leading_one) {
    if (!is_regular(t.l))
        throw std::domain_error("column_one: length not regular, expansion would not terminate");
    const Int& top = leading_one ? t.d : t.w;
    return Sexagesimal::from_ratio(ratio(top * top, t.l * t.l));
}

PqRRelation pq_vs_r_equivalence(const GeneratingPair& pair) {
    if (!is_admissible(pair)) throw std::domain_error("pq_vs_r_equivalence: pair not admissible");
    return (pair.p % 2 != 0 && pair.q % 2 != 0) ? PqRRelation::pq_is_double
                                                : PqRRelation::identical;
}

}  // namespace p322
