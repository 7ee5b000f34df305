#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdpforge/iel/ast.hpp"

namespace mdpforge::iel {

struct ParseError {
    SourceSpan span;
    std::string message;
    std::vector<std::string> expected;  // token names, when known
};

struct ParseResult {
    AstPtr program;  // null on failure
    std::vector<ParseError> errors;
    bool ok() const { return program != nullptr; }
};

// Parses a full program: zero or more `let NAME = expr;` statements followed
// by `return expr`. Whitespace-insensitive; `#` starts a comment to end of
// line.
ParseResult parse(std::string_view source);

std::string format_errors(const std::vector<ParseError>& errors);

}  // namespace mdpforge::iel
