#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdpforge/env/schema.hpp"
#include "mdpforge/iel/ast.hpp"

namespace mdpforge::iel {

using env::Shape;

inline constexpr int kMaxObsDim = 512;
// Safety cap on any intermediate vector length (sandboxing of one_hot/concat).
inline constexpr int kMaxVectorLen = 4096;

enum class Role { Observation, Reward };

std::string_view role_name(Role r);

struct CheckError {
    std::string kind;  // unknown-field | shape-mismatch | observation-not-vector | reward-not-scalar |
                       // observation-dimension-exceeds-512 | invalid-field-namespace | duplicate-let |
                       // unknown-variable | bad-one-hot-length | vector-too-large | bad-arity
    std::string message;
    SourceSpan span;
};

struct NodeInfo {
    Shape shape;
    int slot = -1;  // FieldRef: schema field index; VarRef/Let: let slot
};

// A shape-checked program bound to one schema. Immutable; safe to share and
// evaluate concurrently.
struct CheckedProgram {
    AstPtr ast;
    Role role = Role::Observation;
    Shape output_shape;
    std::set<std::pair<FieldNs, std::string>> referenced_fields;
    std::unordered_map<const Ast*, NodeInfo> info;
    int let_count = 0;
    std::uint64_t schema_fingerprint = 0;
    std::string source;  // original text when available

    int obs_dim() const { return output_shape.size(); }
};

struct CheckResult {
    std::optional<CheckedProgram> program;
    std::vector<CheckError> errors;
    bool ok() const { return program.has_value(); }
};

CheckResult check(const AstPtr& ast, Role role, const env::StateSchema& schema);

}  // namespace mdpforge::iel
