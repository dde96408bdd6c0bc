#pragma once

#include "binomid/expr.hpp"

#include <string>
#include <vector>

namespace binomid {

// Canonical rendering with minimal parentheses; parsing the result yields a
// structurally equal tree. Assumes integer literals are nonnegative (negative
// constants are represented as negation nodes).
std::string print_expr(const Expr& e);
inline std::string print_expr(const ExprPtr& e) { return print_expr(*e); }

// Declaration block understood by the identity-file parser.
std::string print_identity(const Identity& id);

// Declaration blocks separated by blank lines.
std::string print_identity_file(const std::vector<Identity>& ids);

} // namespace binomid
