#pragma once

#include <vector>

#include "p322/reciprocal.hpp"
#include "p322/triple.hpp"

namespace p322 {

enum class ProcedureKind {
    price,           // regular 1 < p <= 128, 1 < q <= 54
    p125,            // regular 1 < p, q <= 125
    robson_digits,   // digit-count filter inside the bracket [1;48, 2;24]
    standard_table,  // p, q from the standard reciprocal table
};

struct ProcedureSpec {
    ProcedureKind kind = ProcedureKind::price;
    Int p_max = 0;
    Int q_max = 0;
    int max_places_each = 4;
    int max_places_total = 7;
    ExactRatio bracket_lo;  // robson_digits only
    ExactRatio bracket_hi;
    bool include_one = false;  // standard_table: admit p = q = 1 into the pool

    static ProcedureSpec price();
    static ProcedureSpec p125();
    static ProcedureSpec robson_digits();
    static ProcedureSpec standard_table(bool include_one = false);
};

/// Distinct admissible ratios under the spec, strictly descending, each
/// stored reduced.
std::vector<ExactRatio> enumerate_ratios(const ProcedureSpec& spec);

struct PoolStatistics {
    Int total_pairs = 0;       // ordered (p, q) pairs enumerated
    Int distinct = 0;          // distinct ratio values among them
    Int distinct_in_1_3 = 0;   // distinct values with 1 < r < 3
    Int admissible = 0;        // distinct admissible values
};
PoolStatistics pool_statistics(const ProcedureSpec& spec);

struct AdmissibilityBounds {
    ExactRatio r_max;  // scribal estimate of 1 + sqrt(2), rounded to taste
    Int p_max;
    Int q_max;
};

/// The bound set each root-two approximation yields: rough -> (2;30, 150, 60),
/// coarse -> (2;25, 145, 60), fine -> (2;24, 144, 60). Enumerating under any
/// of them reproduces the same 38 admissible ratios as ProcedureKind::price.
AdmissibilityBounds derive_bounds(Sqrt2Variant variant);
std::vector<ExactRatio> enumerate_under_bounds(const AdmissibilityBounds& bounds);

enum class GenerationMethod { pq, r };
enum class Line4Policy {
    insert,  // splice the 125/54 ratio into its sorted slot when absent
    omit,
};

/// One reconstructed line.
struct TableRow {
    int n = 0;
    Int p;
    Int q;
    ExactRatio r;
    Int l;
    Sexagesimal column_one;  // d^2/l^2, leading one included
    Int w;
    Int d;
};

/// Rows numbered from 1 in the order given. Ratios must be distinct,
/// admissible and strictly descending (std::invalid_argument otherwise).
/// The r method produces primitive triples except that the (3, 4, 5) line
/// keeps the scaled (45, 1 00, 1 15) the tablet attests.
std::vector<TableRow> build_table(std::vector<ExactRatio> ratios, GenerationMethod method,
                                  Line4Policy line4 = Line4Policy::insert);

struct GapStep {
    int upper_line = 0;  // between rows upper_line and lower_line
    int lower_line = 0;
    ExactRatio delta_r;
    ExactRatio delta_column_one;
};

struct GapAnalysis {
    std::vector<GapStep> steps;
    std::size_t max_delta_r_index = 0;           // into steps
    std::size_t max_delta_column_one_index = 0;  // into steps
};

/// Successive differences down a descending table; needs >= 2 rows.
GapAnalysis gap_analysis(const std::vector<TableRow>& rows);

enum class ShapeMetric { width_over_diagonal, length_over_width };

struct ShapeCriterion {
    ShapeMetric metric = ShapeMetric::width_over_diagonal;
    ExactRatio lo;
    ExactRatio hi;
};

/// Rows whose exact metric lies strictly inside (lo, hi). Throws
/// std::invalid_argument when lo >= hi.
std::vector<TableRow> shape_filter(const std::vector<TableRow>& rows,
                                   const ShapeCriterion& criterion);

/// The only regular ratio between 2;24 and 1 + sqrt(2) with p, q <= 60^2:
/// 3125/1296 = 2;24 40 33 20. Check constant; no procedure generates it.
ExactRatio near_bound_ratio_within_60_squared();
/// The only further one with p, q <= 60^3: 19683/8192 = 2;24 09 45 21 05 37 30.
ExactRatio near_bound_ratio_within_60_cubed();

}  // namespace p322
