#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mdpforge::iel {

// Builtin function set. Comparisons yield exactly 0.0 or 1.0; `and`/`or` are
// min/max, `not` is 1-x.
enum class Builtin {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Abs,
    Min,
    Max,
    Clip,
    Exp,
    Tanh,
    Sqrt,
    OneHot,
    Concat,
    Norm,
    Dot,
    Sum,
    Mean,
    Select,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    And,
    Or,
    Not,
};

struct BuiltinInfo {
    Builtin id;
    const char* name;
    int min_arity;
    int max_arity;  // -1: unbounded
};

const BuiltinInfo* find_builtin(std::string_view name);
const BuiltinInfo& builtin_info(Builtin id);

// Field namespaces: `s` (state), `sp` (next state), `a` (action).
enum class FieldNs { State, NextState, Action };

std::string_view field_ns_name(FieldNs ns);

struct SourceSpan {
    int line = 0;
    int col = 0;
};

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

// Immutable expression node. A whole program is one tree: let bindings chain
// through `Let{value, body}` down to the final return expression.
struct Ast {
    enum class Kind { Literal, VectorLiteral, FieldRef, VarRef, Let, Apply, Index };

    Kind kind;
    SourceSpan span;
    double value = 0.0;             // Literal
    std::string name;               // FieldRef field / VarRef / Let binding (empty for action refs)
    FieldNs ns = FieldNs::State;    // FieldRef
    Builtin builtin = Builtin::Add; // Apply
    std::vector<AstPtr> children;   // VectorLiteral elems; Apply args; Let {value, body}; Index {target, index}

    static AstPtr literal(double v, SourceSpan sp = {});
    static AstPtr vector_literal(std::vector<AstPtr> elems, SourceSpan sp = {});
    static AstPtr field_ref(FieldNs ns, std::string name, SourceSpan sp = {});
    static AstPtr var_ref(std::string name, SourceSpan sp = {});
    static AstPtr let(std::string name, AstPtr value, AstPtr body, SourceSpan sp = {});
    static AstPtr apply(Builtin b, std::vector<AstPtr> args, SourceSpan sp = {});
    static AstPtr index(AstPtr target, AstPtr idx, SourceSpan sp = {});
};

bool structurally_equal(const Ast& a, const Ast& b);
inline bool structurally_equal(const AstPtr& a, const AstPtr& b) { return structurally_equal(*a, *b); }

// Total number of nodes in the tree; every node kind counts exactly one.
int node_count(const Ast& root);
inline int node_count(const AstPtr& root) { return node_count(*root); }

// Rebuilds the tree with `target` (identified by address) replaced by
// `replacement`. Returns the original pointer when target is absent.
AstPtr replace_node(const AstPtr& root, const Ast* target, const AstPtr& replacement);

// Preorder traversal.
void visit(const AstPtr& root, const std::function<void(const AstPtr&)>& fn);

}  // namespace mdpforge::iel
