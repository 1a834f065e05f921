#pragma once

#include "qsgd/hopf.hpp"

#include <stdexcept>
#include <string>

namespace qsgd {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(size_t at, const std::string& what)
        : std::runtime_error(what + " at offset " + std::to_string(at)), pos(at) {}
};

/// Canonical literal of a rank-1 vector: "coeff*label + coeff*label + ...",
/// labels in basis order; "0" for the zero vector. Labels are "c9:4",
/// "perm{ground=-2..2; (-1 0)(1 2)}", optionally tagged "xi:"/"eta:".
std::string print_element(const Vector& v);

/// Parses a vector literal; the basis (group and plain/doubled) is inferred
/// from the labels. print_element(parse_element(s)) parses back equal.
Vector parse_element(const std::string& text);

/// Whole-string forms, used by tests and the CLI.
Scalar parse_scalar(const std::string& text);
Permutation parse_permutation(const std::string& text);

} // namespace qsgd
