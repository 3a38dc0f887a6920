#include "p322/procedure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "p322/regular.hpp"

namespace p322 {

namespace {

int sexagesimal_places(const ExactRatio& v) {
    auto [m, e] = floating_mantissa(v);
    int places = 0;
    for (Int t = m; t > 0; t /= 60) ++places;
    return places;
}

std::vector<Int> regular_range(const Int& lo, const Int& hi) {
    std::vector<Int> out;
    for (const Int& n : regular_numbers_upto(hi))
        if (n >= lo) out.push_back(n);
    return out;
}

std::set<ExactRatio> distinct_ratios(const std::vector<Int>& ps, const std::vector<Int>& qs) {
    std::set<ExactRatio> values;
    for (const Int& p : ps)
        for (const Int& q : qs) values.insert(ratio(p, q));
    return values;
}

std::vector<ExactRatio> admissible_descending(const std::set<ExactRatio>& values) {
    std::vector<ExactRatio> out;
    for (const ExactRatio& r : values)
        if (is_admissible(r)) out.push_back(r);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// Admissible ratios within [bracket_lo, bracket_hi] whose expansion and that
// of the reciprocal fit the place-count limits. A ratio with at most
// `max_places_each` places has a mantissa below 60^max_places_each, so the
// candidate pool is finite without any bound on p and q.
std::vector<ExactRatio> robson_ratios(const ProcedureSpec& spec) {
    Int mantissa_limit = 1;
    for (int i = 0; i < spec.max_places_each; ++i) mantissa_limit *= 60;
    std::vector<ExactRatio> out;
    for (const Int& m : regular_numbers_upto(mantissa_limit - 1)) {
        ExactRatio r(m);
        while (r >= 60) r /= 60;
        if (r <= 1) continue;
        if (r < spec.bracket_lo || r > spec.bracket_hi) continue;
        if (!is_admissible(r)) continue;
        const int own = sexagesimal_places(r);
        const int rec = sexagesimal_places(1 / r);
        if (own <= spec.max_places_each && rec <= spec.max_places_each &&
            own + rec <= spec.max_places_total)
            out.push_back(r);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Int> standard_pool(bool include_one) {
    std::vector<Int> pool = regular_range(include_one ? 1 : 2, 81);
    return pool;
}

ExactRatio line4_ratio() { return ratio(125, 54); }

}  // namespace

ProcedureSpec ProcedureSpec::price() {
    ProcedureSpec s;
    s.kind = ProcedureKind::price;
    s.p_max = 128;
    s.q_max = 54;
    return s;
}

ProcedureSpec ProcedureSpec::p125() {
    ProcedureSpec s;
    s.kind = ProcedureKind::p125;
    s.p_max = 125;
    s.q_max = 125;
    return s;
}

ProcedureSpec ProcedureSpec::robson_digits() {
    ProcedureSpec s;
    s.kind = ProcedureKind::robson_digits;
    s.max_places_each = 4;
    s.max_places_total = 7;
    s.bracket_lo = ratio(9, 5);   // 1;48, the last tablet ratio
    s.bracket_hi = ratio(12, 5);  // 2;24, the first
    return s;
}

ProcedureSpec ProcedureSpec::standard_table(bool include_one) {
    ProcedureSpec s;
    s.kind = ProcedureKind::standard_table;
    s.include_one = include_one;
    return s;
}

std::vector<ExactRatio> enumerate_ratios(const ProcedureSpec& spec) {
    switch (spec.kind) {
        case ProcedureKind::price:
            return admissible_descending(
                distinct_ratios(regular_range(2, spec.p_max), regular_range(2, spec.q_max)));
        case ProcedureKind::p125:
            return admissible_descending(
                distinct_ratios(regular_range(2, spec.p_max), regular_range(2, spec.q_max)));
        case ProcedureKind::robson_digits:
            return robson_ratios(spec);
        case ProcedureKind::standard_table: {
            auto pool = standard_pool(spec.include_one);
            return admissible_descending(distinct_ratios(pool, pool));
        }
    }
    throw std::invalid_argument("enumerate_ratios: unknown procedure");
}

PoolStatistics pool_statistics(const ProcedureSpec& spec) {
    std::vector<Int> ps, qs;
    switch (spec.kind) {
        case ProcedureKind::price:
            ps = regular_range(2, spec.p_max);
            qs = regular_range(2, spec.q_max);
            break;
        case ProcedureKind::p125:
            ps = regular_range(2, spec.p_max);
            qs = ps;
            break;
        case ProcedureKind::standard_table:
            ps = standard_pool(spec.include_one);
            qs = ps;
            break;
        case ProcedureKind::robson_digits: {
            // The digit filter has no underlying (p, q) pool; only the
            // admissible count is meaningful.
            PoolStatistics st;
            st.admissible = static_cast<Int>(robson_ratios(spec).size());
            return st;
        }
    }
    auto values = distinct_ratios(ps, qs);
    PoolStatistics st;
    st.total_pairs = Int(ps.size()) * Int(qs.size());
    st.distinct = static_cast<Int>(values.size());
    for (const ExactRatio& r : values) {
        if (r > 1 && r < 3) ++st.distinct_in_1_3;
        if (is_admissible(r)) ++st.admissible;
    }
    return st;
}

AdmissibilityBounds derive_bounds(Sqrt2Variant variant) {
    switch (variant) {
        case Sqrt2Variant::rough:   // 1;30 -> alpha estimate 2;30, read as 2 30 over 1 00
            return {ratio(5, 2), 150, 60};
        case Sqrt2Variant::coarse:  // 1;25 -> 2;25 = 29/12, read as 2 25 over 1 00
            return {ratio(29, 12), 145, 60};
        case Sqrt2Variant::fine:    // 1;24 51 10 -> first two places of alpha give 2;24
            return {ratio(12, 5), 144, 60};
    }
    throw std::invalid_argument("derive_bounds: unknown variant");
}

std::vector<ExactRatio> enumerate_under_bounds(const AdmissibilityBounds& bounds) {
    std::vector<ExactRatio> out;
    for (const ExactRatio& r :
         distinct_ratios(regular_range(2, bounds.p_max), regular_range(2, bounds.q_max)))
        if (is_admissible(r) && r <= bounds.r_max) out.push_back(r);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<TableRow> build_table(std::vector<ExactRatio> ratios, GenerationMethod method,
                                  Line4Policy line4) {
    if (line4 == Line4Policy::insert &&
        std::find(ratios.begin(), ratios.end(), line4_ratio()) == ratios.end()) {
        auto slot = std::find_if(ratios.begin(), ratios.end(),
                                 [&](const ExactRatio& r) { return r < line4_ratio(); });
        ratios.insert(slot, line4_ratio());
    }
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (!is_regular(ratios[i]) || !is_admissible(ratios[i]))
            throw std::invalid_argument("build_table: inadmissible ratio");
        if (i > 0 && !(ratios[i] < ratios[i - 1]))
            throw std::invalid_argument("build_table: ratios not strictly descending");
    }

    std::vector<TableRow> rows;
    rows.reserve(ratios.size());
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        const ExactRatio& r = ratios[i];
        TableRow row;
        row.n = static_cast<int>(i) + 1;
        row.p = numerator(r);
        row.q = denominator(r);
        row.r = r;
        Triple t = [&] {
            if (method == GenerationMethod::pq)
                return pq_triple(GeneratingPair(row.p, row.q));
            RMethodTrace trace = r_method(r);
            // The tablet keeps (45, 1 00, 1 15) where the reduction would give
            // (3, 4, 5); every other line is inscribed primitive.
            if (trace.tablet_form && trace.result == Triple(3, 4, 5)) return *trace.tablet_form;
            return trace.result;
        }();
        row.w = t.w;
        row.l = t.l;
        row.d = t.d;
        row.column_one = column_one(t, true);
        rows.push_back(std::move(row));
    }
    return rows;
}

GapAnalysis gap_analysis(const std::vector<TableRow>& rows) {
    if (rows.size() < 2) throw std::invalid_argument("gap_analysis: need at least two rows");
    GapAnalysis out;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        GapStep step;
        step.upper_line = rows[i].n;
        step.lower_line = rows[i + 1].n;
        step.delta_r = rows[i].r - rows[i + 1].r;
        step.delta_column_one = rows[i].column_one.value() - rows[i + 1].column_one.value();
        if (step.delta_r <= 0)
            throw std::invalid_argument("gap_analysis: rows not strictly descending");
        out.steps.push_back(std::move(step));
    }
    for (std::size_t i = 0; i < out.steps.size(); ++i) {
        if (out.steps[i].delta_r > out.steps[out.max_delta_r_index].delta_r)
            out.max_delta_r_index = i;
        if (out.steps[i].delta_column_one >
            out.steps[out.max_delta_column_one_index].delta_column_one)
            out.max_delta_column_one_index = i;
    }
    return out;
}

std::vector<TableRow> shape_filter(const std::vector<TableRow>& rows,
                                   const ShapeCriterion& criterion) {
    if (!(criterion.lo < criterion.hi))
        throw std::invalid_argument("shape_filter: empty interval");
    std::vector<TableRow> out;
    for (const TableRow& row : rows) {
        const ExactRatio metric = criterion.metric == ShapeMetric::width_over_diagonal
                                      ? ratio(row.w, row.d)
                                      : ratio(row.l, row.w);
        if (criterion.lo < metric && metric < criterion.hi) out.push_back(row);
    }
    return out;
}

ExactRatio near_bound_ratio_within_60_squared() { return ratio(3125, 1296); }
ExactRatio near_bound_ratio_within_60_cubed() { return ratio(19683, 8192); }

}  // namespace p322
