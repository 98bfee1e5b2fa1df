#pragma once

#include <string>
#include <vector>

#include "qbs/target_function.hpp"

namespace qbs {

/// Names of the built-in target functions (exact derivatives and Lipschitz
/// data attached where meaningful): fig6 = 1 - cos(4 e^x), x, x2, x3, exp,
/// sin3 = sin(3x), abshalf = |x - 1/2|, sqrtabshalf = |x - 1/2|^{1/2}, one.
const std::vector<std::string>& builtin_function_names();

TargetFunction builtin_function(const std::string& name);

/// A built-in name, or an arithmetic expression in x over
/// + - * / ^, sin, cos, exp, abs, sqrt, pow(,), constants e and pi.
/// Parsed expressions get central-difference derivatives (step 1e-5) and a
/// grid-estimated Lipschitz constant, both flagged approximate.
/// Syntax errors carry the offending position; expressions that evaluate
/// non-finite anywhere on [0,1] are rejected.
TargetFunction parse_function(const std::string& text);

}  // namespace qbs
