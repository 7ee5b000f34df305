#pragma once

#include <optional>
#include <string>

#include "mdpforge/iel/check.hpp"

namespace mdpforge::iel {

// Two-section text container holding one observation and one reward program.
struct InterfaceSource {
    std::string observation;
    std::string reward;
};

// Returns std::nullopt and sets `error` when a section is missing or text
// precedes the first marker.
std::optional<InterfaceSource> split_bundle(std::string_view text, std::string* error = nullptr);
std::string join_bundle(const InterfaceSource& src);

// A validated interface: source text plus both checked programs.
struct InterfaceProgram {
    InterfaceSource source;
    CheckedProgram observation;
    CheckedProgram reward;
};

}  // namespace mdpforge::iel
