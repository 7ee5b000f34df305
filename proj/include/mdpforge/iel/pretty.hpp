#pragma once

#include <string>

#include "mdpforge/iel/ast.hpp"

namespace mdpforge::iel {

// Canonical source text; parse(pretty(t)) is structurally equal to t.
std::string pretty(const Ast& program);
inline std::string pretty(const AstPtr& program) { return pretty(*program); }

// Shortest decimal text that parses back to exactly this double.
std::string format_number(double v);

}  // namespace mdpforge::iel
