#include "mdpforge/iel/check.hpp"

#include <cmath>
#include <sstream>

namespace mdpforge::iel {

std::string_view role_name(Role r) {
    return r == Role::Observation ? "observation" : "reward";
}

namespace {

struct Checker {
    const env::StateSchema& schema;
    Role role;
    CheckedProgram out;
    std::vector<CheckError> errors;
    std::vector<std::pair<std::string, Shape>> let_stack;  // slot = position

    bool fail(const Ast& n, std::string kind, std::string message) {
        errors.push_back({std::move(kind), std::move(message), n.span});
        return false;
    }

    // Infers the node shape and records it; false on error.
    bool infer(const AstPtr& node, Shape* shape) {
        const Ast& n = *node;
        Shape result;
        switch (n.kind) {
            case Ast::Kind::Literal:
                result = Shape::scalar();
                break;
            case Ast::Kind::VectorLiteral: {
                int total = 0;
                for (const auto& c : n.children) {
                    Shape cs;
                    if (!infer(c, &cs)) return false;
                    total += cs.size();
                }
                if (total > kMaxVectorLen) {
                    return fail(n, "vector-too-large",
                                "vector literal has " + std::to_string(total) + " elements (max " +
                                    std::to_string(kMaxVectorLen) + ")");
                }
                result = Shape::vector(total);
                break;
            }
            case Ast::Kind::FieldRef: {
                if (n.ns == FieldNs::Action) {
                    if (role == Role::Observation) {
                        return fail(n, "invalid-field-namespace", "observation programs may not reference the action");
                    }
                    result = schema.action_shape();
                    out.referenced_fields.insert({n.ns, ""});
                    break;
                }
                if (role == Role::Observation && n.ns == FieldNs::NextState) {
                    return fail(n, "invalid-field-namespace", "observation programs may only reference s.*");
                }
                const env::FieldInfo* f = schema.find(n.name);
                if (!f) {
                    return fail(n, "unknown-field", "unknown field '" + n.name + "'");
                }
                out.info[&n].slot = f->offset;  // flat offset into StateRecord::data
                result = f->shape;
                out.referenced_fields.insert({n.ns, n.name});
                break;
            }
            case Ast::Kind::VarRef: {
                int slot = -1;
                for (std::size_t i = 0; i < let_stack.size(); ++i) {
                    if (let_stack[i].first == n.name) slot = static_cast<int>(i);
                }
                if (slot < 0) {
                    return fail(n, "unknown-variable", "unknown name '" + n.name + "'");
                }
                out.info[&n].slot = slot;
                result = let_stack[slot].second;
                break;
            }
            case Ast::Kind::Let: {
                for (const auto& l : let_stack) {
                    if (l.first == n.name) {
                        return fail(n, "duplicate-let", "duplicate let binding '" + n.name + "'");
                    }
                }
                Shape vs;
                if (!infer(n.children[0], &vs)) return false;
                out.info[&n].slot = static_cast<int>(let_stack.size());
                let_stack.push_back({n.name, vs});
                out.let_count = std::max(out.let_count, static_cast<int>(let_stack.size()));
                Shape bs;
                if (!infer(n.children[1], &bs)) return false;
                result = bs;
                break;
            }
            case Ast::Kind::Apply:
                if (!infer_apply(n, &result)) return false;
                break;
            case Ast::Kind::Index: {
                Shape ts, is;
                if (!infer(n.children[0], &ts) || !infer(n.children[1], &is)) return false;
                if (!ts.is_vector()) return fail(n, "shape-mismatch", "indexing requires a vector target");
                if (!is.is_scalar()) return fail(n, "shape-mismatch", "index must be a scalar");
                result = Shape::scalar();
                break;
            }
        }
        out.info[&n].shape = result;
        *shape = result;
        return true;
    }

    // Elementwise broadcast of scalars against one common vector length.
    bool broadcast(const Ast& n, const std::vector<Shape>& shapes, Shape* result) {
        int vec_len = -1;
        for (const auto& s : shapes) {
            if (s.is_vector()) {
                if (vec_len >= 0 && vec_len != s.length) {
                    return fail(n, "shape-mismatch",
                                "mismatched vector lengths " + std::to_string(vec_len) + " and " +
                                    std::to_string(s.length));
                }
                vec_len = s.length;
            }
        }
        *result = vec_len < 0 ? Shape::scalar() : Shape::vector(vec_len);
        return true;
    }

    bool infer_apply(const Ast& n, Shape* result) {
        std::vector<Shape> arg_shapes;
        arg_shapes.reserve(n.children.size());
        for (const auto& c : n.children) {
            Shape s;
            if (!infer(c, &s)) return false;
            arg_shapes.push_back(s);
        }
        const char* name = builtin_info(n.builtin).name;
        switch (n.builtin) {
            case Builtin::Add:
            case Builtin::Sub:
            case Builtin::Mul:
            case Builtin::Div:
            case Builtin::Min:
            case Builtin::Max:
            case Builtin::And:
            case Builtin::Or:
            case Builtin::Lt:
            case Builtin::Le:
            case Builtin::Gt:
            case Builtin::Ge:
            case Builtin::Eq:
            case Builtin::Select:
                return broadcast(n, arg_shapes, result);
            case Builtin::Neg:
            case Builtin::Abs:
            case Builtin::Exp:
            case Builtin::Tanh:
            case Builtin::Sqrt:
            case Builtin::Not:
                *result = arg_shapes[0];
                return true;
            case Builtin::Clip:
                if (!arg_shapes[1].is_scalar() || !arg_shapes[2].is_scalar()) {
                    return fail(n, "shape-mismatch", "clip bounds must be scalars");
                }
                *result = arg_shapes[0];
                return true;
            case Builtin::OneHot: {
                if (!arg_shapes[0].is_scalar()) {
                    return fail(n, "shape-mismatch", "one_hot index must be a scalar");
                }
                const Ast& len_arg = *n.children[1];
                if (len_arg.kind != Ast::Kind::Literal) {
                    return fail(n, "bad-one-hot-length", "one_hot length must be a literal");
                }
                long len = std::lround(len_arg.value);
                if (len < 1 || len > kMaxObsDim) {
                    return fail(n, "bad-one-hot-length",
                                "one_hot length must be in [1, " + std::to_string(kMaxObsDim) + "]");
                }
                *result = Shape::vector(static_cast<int>(len));
                return true;
            }
            case Builtin::Concat: {
                int total = 0;
                for (const auto& s : arg_shapes) total += s.size();
                if (total > kMaxVectorLen) {
                    return fail(n, "vector-too-large",
                                "concat result has " + std::to_string(total) + " elements (max " +
                                    std::to_string(kMaxVectorLen) + ")");
                }
                *result = Shape::vector(total);
                return true;
            }
            case Builtin::Norm:
            case Builtin::Sum:
            case Builtin::Mean:
                if (!arg_shapes[0].is_vector()) {
                    return fail(n, "shape-mismatch", std::string(name) + " requires a vector argument");
                }
                *result = Shape::scalar();
                return true;
            case Builtin::Dot:
                if (!arg_shapes[0].is_vector() || !arg_shapes[1].is_vector() ||
                    arg_shapes[0].length != arg_shapes[1].length) {
                    return fail(n, "shape-mismatch", "dot requires two vectors of equal length");
                }
                *result = Shape::scalar();
                return true;
        }
        return fail(n, "shape-mismatch", std::string("unhandled builtin ") + name);
    }
};

}  // namespace

CheckResult check(const AstPtr& ast, Role role, const env::StateSchema& schema) {
    CheckResult result;
    Checker checker{schema, role, {}, {}, {}};
    checker.out.ast = ast;
    checker.out.role = role;
    checker.out.schema_fingerprint = schema.fingerprint();

    Shape out_shape;
    if (!checker.infer(ast, &out_shape)) {
        result.errors = std::move(checker.errors);
        return result;
    }
    if (role == Role::Observation) {
        if (!out_shape.is_vector()) {
            result.errors.push_back({"observation-not-vector",
                                     "observation programs must return a vector (wrap scalars in [...])",
                                     ast->span});
            return result;
        }
        if (out_shape.length < 1 || out_shape.length > kMaxObsDim) {
            result.errors.push_back({"observation-dimension-exceeds-512",
                                     "observation has " + std::to_string(out_shape.length) +
                                         " features (limit " + std::to_string(kMaxObsDim) + ")",
                                     ast->span});
            return result;
        }
    } else if (!out_shape.is_scalar()) {
        result.errors.push_back({"reward-not-scalar", "reward programs must return a scalar", ast->span});
        return result;
    }
    checker.out.output_shape = out_shape;
    result.program = std::move(checker.out);
    return result;
}

}  // namespace mdpforge::iel
