#pragma once

// Plain-text interchange formats.
//
// Integer matrix:   first line "m n", then m lines of n integers.
// Sign matrix:      one row per line, tokens '+', '-', '0'; an optional
//                   "rows cols" header line is accepted.
// In both, '#' starts a comment and blank lines are ignored.

#include <iosfwd>
#include <string>

#include "toric_ci/citest.hpp"
#include "toric_ci/exactmat.hpp"

namespace toric_ci {

/// Throws ParseError carrying the 1-based line number.
IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix_file(const std::string& path);
IntMatrix parse_matrix(const std::string& text);

void write_matrix(std::ostream& out, const IntMatrix& m);
std::string format_matrix(const IntMatrix& m);

SignMatrix read_sign_matrix(std::istream& in);
SignMatrix read_sign_matrix_file(const std::string& path);
SignMatrix parse_sign_matrix(const std::string& text);

void write_sign_matrix(std::ostream& out, const SignMatrix& s);
std::string format_sign_matrix(const SignMatrix& s);

}  // namespace toric_ci
