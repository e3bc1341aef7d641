#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebwav/dwt.hpp"

namespace chebwav {

// Malformed text input; line is 1-based.
struct CsvError : std::runtime_error {
    int line;
    CsvError(const std::string& msg, int line_number)
        : std::runtime_error(msg + " (line " + std::to_string(line_number) + ")"),
          line(line_number) {}
};

// Floats are printed with 12 significant digits.
std::string format_number(double x);

// Shortest decimal that parses back to exactly the same double; used by the
// tree interchange format so analysis coefficients survive a file round trip.
std::string format_exact(double x);

// One sample per line; '#' starts a comment; blank lines ignored.
std::vector<double> read_signal_csv(std::istream& in);
void write_signal_csv(std::ostream& out, const std::vector<double>& samples);

// Decomposition tree with the bank identity needed to invert it.
struct TreeDocument {
    DecompositionTree tree;
    int kind = 0;        // 1 or 2
    int order = 0;       // base filter order m
    int upsample_k = 0;  // kind 2 only
};

// Level-tagged rows ("a,<v>", "d1,<v>", ...) after '#'-comment metadata.
void write_tree_csv(std::ostream& out, const TreeDocument& doc);
TreeDocument read_tree_csv(std::istream& in);

}  // namespace chebwav
