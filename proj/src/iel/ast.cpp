#include "mdpforge/iel/ast.hpp"

#include <array>
#include <cassert>

namespace mdpforge::iel {

namespace {

constexpr std::array<BuiltinInfo, 27> kBuiltins{{
    {Builtin::Add, "+", 2, 2},
    {Builtin::Sub, "-", 2, 2},
    {Builtin::Mul, "*", 2, 2},
    {Builtin::Div, "/", 2, 2},
    {Builtin::Neg, "neg", 1, 1},
    {Builtin::Abs, "abs", 1, 1},
    {Builtin::Min, "min", 2, 2},
    {Builtin::Max, "max", 2, 2},
    {Builtin::Clip, "clip", 3, 3},
    {Builtin::Exp, "exp", 1, 1},
    {Builtin::Tanh, "tanh", 1, 1},
    {Builtin::Sqrt, "sqrt", 1, 1},
    {Builtin::OneHot, "one_hot", 2, 2},
    {Builtin::Concat, "concat", 1, -1},
    {Builtin::Norm, "norm", 1, 1},
    {Builtin::Dot, "dot", 2, 2},
    {Builtin::Sum, "sum", 1, 1},
    {Builtin::Mean, "mean", 1, 1},
    {Builtin::Select, "select", 3, 3},
    {Builtin::Lt, "<", 2, 2},
    {Builtin::Le, "<=", 2, 2},
    {Builtin::Gt, ">", 2, 2},
    {Builtin::Ge, ">=", 2, 2},
    {Builtin::Eq, "==", 2, 2},
    {Builtin::And, "and", 2, 2},
    {Builtin::Or, "or", 2, 2},
    {Builtin::Not, "not", 1, 1},
}};

}  // namespace

const BuiltinInfo* find_builtin(std::string_view name) {
    for (const auto& b : kBuiltins) {
        if (name == b.name) return &b;
    }
    return nullptr;
}

const BuiltinInfo& builtin_info(Builtin id) {
    for (const auto& b : kBuiltins) {
        if (b.id == id) return b;
    }
    assert(false && "unknown builtin");
    return kBuiltins[0];
}

std::string_view field_ns_name(FieldNs ns) {
    switch (ns) {
        case FieldNs::State: return "s";
        case FieldNs::NextState: return "sp";
        case FieldNs::Action: return "a";
    }
    return "s";
}

AstPtr Ast::literal(double v, SourceSpan sp) {
    auto n = std::make_shared<Ast>();
    n->kind = Kind::Literal;
    n->span = sp;
    n->value = v;
    return n;
}

AstPtr Ast::vector_literal(std::vector<AstPtr> elems, SourceSpan sp) {
    auto n = std::make_shared<Ast>();
    n->kind = Kind::VectorLiteral;
    n->span = sp;
    n->children = std::move(elems);
    return n;
}

AstPtr Ast::field_ref(FieldNs ns, std::string name, SourceSpan sp) {
    auto n = std::make_shared<Ast>();
    n->kind = Kind::FieldRef;
    n->span = sp;
    n->ns = ns;
    n->name = std::move(name);
    return n;
}

AstPtr Ast::var_ref(std::string name, SourceSpan sp) {
    auto n = std::make_shared<Ast>();
    n->kind = Kind::VarRef;
    n->span = sp;
    n->name = std::move(name);
    return n;
}

AstPtr Ast::let(std::string name, AstPtr value, AstPtr body, SourceSpan sp) {
    auto n = std::make_shared<Ast>();
    n->kind = Kind::Let;
    n->span = sp;
    n->name = std::move(name);
    n->children = {std::move(value), std::move(body)};
    return n;
}

AstPtr Ast::apply(Builtin b, std::vector<AstPtr> args, SourceSpan sp) {
    auto n = std::make_shared<Ast>();
    n->kind = Kind::Apply;
    n->span = sp;
    n->builtin = b;
    n->children = std::move(args);
    return n;
}

AstPtr Ast::index(AstPtr target, AstPtr idx, SourceSpan sp) {
    auto n = std::make_shared<Ast>();
    n->kind = Kind::Index;
    n->span = sp;
    n->children = {std::move(target), std::move(idx)};
    return n;
}

bool structurally_equal(const Ast& a, const Ast& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Ast::Kind::Literal:
            if (a.value != b.value) return false;
            break;
        case Ast::Kind::FieldRef:
            if (a.ns != b.ns || a.name != b.name) return false;
            break;
        case Ast::Kind::VarRef:
        case Ast::Kind::Let:
            if (a.name != b.name) return false;
            break;
        case Ast::Kind::Apply:
            if (a.builtin != b.builtin) return false;
            break;
        default:
            break;
    }
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!structurally_equal(*a.children[i], *b.children[i])) return false;
    }
    return true;
}

int node_count(const Ast& root) {
    // Iterative; the recursive equivalent lives in the test oracle.
    int count = 0;
    std::vector<const Ast*> stack{&root};
    while (!stack.empty()) {
        const Ast* n = stack.back();
        stack.pop_back();
        ++count;
        for (const auto& c : n->children) stack.push_back(c.get());
    }
    return count;
}

AstPtr replace_node(const AstPtr& root, const Ast* target, const AstPtr& replacement) {
    if (root.get() == target) return replacement;
    bool changed = false;
    std::vector<AstPtr> new_children;
    new_children.reserve(root->children.size());
    for (const auto& c : root->children) {
        AstPtr nc = replace_node(c, target, replacement);
        changed = changed || nc.get() != c.get();
        new_children.push_back(std::move(nc));
    }
    if (!changed) return root;
    auto n = std::make_shared<Ast>(*root);
    n->children = std::move(new_children);
    return n;
}

void visit(const AstPtr& root, const std::function<void(const AstPtr&)>& fn) {
    fn(root);
    for (const auto& c : root->children) visit(c, fn);
}

}  // namespace mdpforge::iel
