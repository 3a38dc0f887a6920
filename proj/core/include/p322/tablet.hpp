#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "p322/triple.hpp"

namespace p322 {

enum class TabletColumn { I, II, III };

struct TabletRow {
    int n = 0;
    Sexagesimal column_one;  // stored floating, flags mark restored digits
    Sexagesimal col2;        // width
    Sexagesimal col3;        // diagonal
};

struct Tablet {
    std::vector<TabletRow> rows;  // exactly 15, numbered 1..15
};

/// Golden-file format: `line <TAB> column I <TAB> column II <TAB> column III`
/// per row, cells in the sexagesimal text grammar, '#' comments allowed.
Tablet load_tablet(const std::filesystem::path& file);

/// Resolution order: PLIMPTON322_DATA environment variable, the configured
/// install location, then ./data.
std::filesystem::path default_data_dir();

/// The fifteen rows as inscribed, including the scribal errors and the
/// restoration flags.
Tablet attested_tablet(const std::filesystem::path& data_dir = {});

/// The mathematically intended rows. Line 11 keeps the scaled (45, 1 15),
/// line 15 the generator-pair form (56, 1 46).
Tablet corrected_tablet(const std::filesystem::path& data_dir = {});

enum class ErrorCategory { typographical, computational };

struct ErrorRecord {
    int line = 0;
    TabletColumn column = TabletColumn::I;
    /// The legible span only, as the error tables quote them: restored
    /// leading digits are dropped from both sides, and a digit inscribed as
    /// an empty gap is absent from `inscribed`.
    Sexagesimal inscribed;
    Sexagesimal correct;
    ErrorCategory category = ErrorCategory::typographical;
    std::string note;  // alternative reading, when one exists
};

enum class Line15Reading {
    r_method,  // column II erroneous: 56 inscribed for 28
    pq_method  // column III erroneous: 53 inscribed for 1 46
};

struct DiffOptions {
    Line15Reading reading = Line15Reading::r_method;
    /// Report a cell whose values agree only once an uninscribed gap is read
    /// as zero (line 13 column I). The paper counts it among the
    /// typographical errors while calling it hardly an error.
    bool report_gap_zeros = true;
};

/// One record per differing cell. Under the r-method reading a row whose
/// width and diagonal are both even is halved on both sides before
/// comparison (line 15 is the only such row in either tablet).
std::vector<ErrorRecord> diff_tablets(const Tablet& generated, const Tablet& attested,
                                      const DiffOptions& options = {});

enum class ErrorKind {
    gillings_line2,       // d = (p+q)^2 + 2pq with p taken as 1 00
    robson_overshoot,     // two extra x12 steps past the primitive pair
    modified_multiplier,  // one step multiplies left by 5, right by 1/5
    wrong_y,              // elimination started from a corrupted y
    square_copy,          // w^2 transcribed instead of w
    halving_skip,         // final halving applied to one side only
};

struct ErrorModel {
    ErrorKind kind = ErrorKind::gillings_line2;
    int line = 2;
    Sexagesimal y_variant;  // wrong_y only
    int flip_step = 4;      // modified_multiplier: which step errs (2..6)

    static ErrorModel gillings_line2();
    static ErrorModel robson_overshoot(int line = 2);
    static ErrorModel modified_multiplier(int line = 2, int flip_step = 4);
    static ErrorModel wrong_y(const Sexagesimal& variant, int line = 2);
    static ErrorModel square_copy(int line = 13);
    static ErrorModel halving_skip(int line = 15);
};

struct Simulation {
    /// The simulated inscribed value(s); a (width, diagonal) pair where the
    /// mechanism produces one.
    std::vector<Sexagesimal> inscribed;
    std::vector<EliminationStep> trace;  // when the mechanism runs an elimination
    std::string description;
};

/// Reproduces the attested erroneous cell(s) exactly; std::domain_error on a
/// model/line mismatch.
Simulation simulate_error(const ErrorModel& model);

/// The lines whose correct width or diagonal ends in a digit divisible by a
/// regular number: 2, 5, 11 and 15. All but line 5 deviate from the
/// attested tablet.
struct TerminalLineAnalysis {
    int n = 0;
    ExactRatio x;
    ExactRatio y;
    Int l;
    Int w;
    Int d;
    bool deviates = false;
    std::string deviation;
};
std::vector<TerminalLineAnalysis> regular_terminal_lines(
    const std::filesystem::path& data_dir = {});

}  // namespace p322
