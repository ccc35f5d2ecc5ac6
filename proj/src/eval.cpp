#include "endoring/eval.hpp"

#include <string>

namespace endoring {

namespace {

std::string kind_name(const Value& v) {
    switch (v.index()) {
        case 0: return "integer";
        case 1: return "matrix";
        case 2: return "point";
        default: return "polynomial";
    }
}

Int checked_int_mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Overflow("integer product exceeds the host width");
    }
    return out;
}

Int checked_int_add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Overflow("integer sum exceeds the host width");
    }
    return out;
}

Int checked_int_sub(Int a, Int b) {
    Int out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw Overflow("integer difference exceeds the host width");
    }
    return out;
}

// Integers entering ring operations must already be canonical; reduction is
// explicit through mod(...).
Digits ring_digits(const RingParams& pr, Int n) {
    if (n < 0 || n >= pr.modulus) {
        throw EvalError("integer " + std::to_string(n) + " is out of range [0, " +
                        std::to_string(pr.modulus) + "); reduce it explicitly with mod(" +
                        std::to_string(n) + ", " + std::to_string(pr.modulus) + ")");
    }
    return digits_from_int(pr, n);
}

Value eval_binary(const ExprAst& ast, const Session& session) {
    const Value lhs = eval(ast.children[0], session);
    const Value rhs = eval(ast.children[1], session);
    const RingParams& pr = session.params;

    const bool both_int = lhs.index() == 0 && rhs.index() == 0;
    switch (ast.kind) {
        case ExprAst::Kind::Add:
            if (both_int) return checked_int_add(std::get<Int>(lhs), std::get<Int>(rhs));
            if (lhs.index() == 1 && rhs.index() == 1) {
                return mat_add(std::get<EndoMatrix>(lhs), std::get<EndoMatrix>(rhs));
            }
            // n + A means n*I + A, as in A + rI.
            if (lhs.index() == 0 && rhs.index() == 1) {
                return mat_add(scalar_mul(std::get<Int>(lhs), mat_identity(pr)),
                               std::get<EndoMatrix>(rhs));
            }
            if (lhs.index() == 1 && rhs.index() == 0) {
                return mat_add(std::get<EndoMatrix>(lhs),
                               scalar_mul(std::get<Int>(rhs), mat_identity(pr)));
            }
            if (lhs.index() == 2 && rhs.index() == 2) {
                return point_add(std::get<ModulePoint>(lhs), std::get<ModulePoint>(rhs));
            }
            break;
        case ExprAst::Kind::Sub:
            if (both_int) return checked_int_sub(std::get<Int>(lhs), std::get<Int>(rhs));
            if (lhs.index() == 1 && rhs.index() == 1) {
                return mat_add(std::get<EndoMatrix>(lhs), mat_neg(std::get<EndoMatrix>(rhs)));
            }
            if (lhs.index() == 1 && rhs.index() == 0) {
                return mat_add(std::get<EndoMatrix>(lhs),
                               scalar_mul(-std::get<Int>(rhs), mat_identity(pr)));
            }
            if (lhs.index() == 0 && rhs.index() == 1) {
                return mat_add(scalar_mul(std::get<Int>(lhs), mat_identity(pr)),
                               mat_neg(std::get<EndoMatrix>(rhs)));
            }
            break;
        case ExprAst::Kind::Mul:
            if (both_int) return checked_int_mul(std::get<Int>(lhs), std::get<Int>(rhs));
            if (lhs.index() == 1 && rhs.index() == 1) {
                return mat_mul(std::get<EndoMatrix>(lhs), std::get<EndoMatrix>(rhs));
            }
            if (lhs.index() == 0 && rhs.index() == 1) {
                return scalar_mul(std::get<Int>(lhs), std::get<EndoMatrix>(rhs));
            }
            if (lhs.index() == 1 && rhs.index() == 0) {
                return scalar_mul(std::get<Int>(rhs), std::get<EndoMatrix>(lhs));
            }
            break;
        case ExprAst::Kind::Mod: {
            if (!both_int) break;
            const Int n = std::get<Int>(rhs);
            if (n <= 0) throw EvalError("mod wants a positive modulus");
            return mod_floor(std::get<Int>(lhs), n);
        }
        default: break;
    }
    throw EvalError("cannot combine " + kind_name(lhs) + " and " + kind_name(rhs) + " here");
}

} // namespace

Value eval(const ExprAst& ast, const Session& session) {
    const RingParams& pr = session.params;
    switch (ast.kind) {
        case ExprAst::Kind::IntLit: return ast.int_value;
        case ExprAst::Kind::MatrixLit: return *ast.matrix;
        case ExprAst::Kind::PointLit: return *ast.point;
        case ExprAst::Kind::Var: {
            auto it = session.bindings.find(ast.name);
            if (it == session.bindings.end()) {
                throw EvalError("unbound variable '" + ast.name + "'");
            }
            return it->second;
        }
        case ExprAst::Kind::Add:
        case ExprAst::Kind::Sub:
        case ExprAst::Kind::Mul:
        case ExprAst::Kind::Mod: return eval_binary(ast, session);
        case ExprAst::Kind::Pow: {
            const Value base = eval(ast.children[0], session);
            if (base.index() == 1) return mat_pow(std::get<EndoMatrix>(base), ast.int_value);
            if (base.index() == 0) {
                Int acc = 1;
                for (Int i = 0; i < ast.int_value; ++i) {
                    acc = checked_int_mul(acc, std::get<Int>(base));
                }
                return acc;
            }
            throw EvalError("cannot raise a " + kind_name(base) + " to a power");
        }
        case ExprAst::Kind::Inv: {
            const Value v = eval(ast.children[0], session);
            if (v.index() == 1) return inverse_direct(std::get<EndoMatrix>(v));
            if (v.index() == 0) return digits_to_int(inv(ring_digits(pr, std::get<Int>(v))));
            throw EvalError("cannot invert a " + kind_name(v));
        }
        case ExprAst::Kind::Neg: {
            const Value v = eval(ast.children[0], session);
            if (v.index() == 1) return mat_neg(std::get<EndoMatrix>(v));
            if (v.index() == 0) return digits_to_int(neg(ring_digits(pr, std::get<Int>(v))));
            throw EvalError("cannot negate a " + kind_name(v));
        }
        case ExprAst::Kind::MinPoly: {
            const Value v = eval(ast.children[0], session);
            if (v.index() != 1) throw EvalError("minpoly wants a matrix");
            return minimal_poly(std::get<EndoMatrix>(v));
        }
        case ExprAst::Kind::AnnPoly: {
            const Value v = eval(ast.children[0], session);
            if (v.index() != 1) throw EvalError("annpoly wants a matrix");
            return to_int_poly(annihilating_poly(std::get<EndoMatrix>(v)));
        }
        case ExprAst::Kind::Apply: {
            const Value mat = eval(ast.children[0], session);
            const Value pt = eval(ast.children[1], session);
            if (mat.index() != 1 || pt.index() != 2) {
                throw EvalError("apply wants a matrix and a point");
            }
            return apply(std::get<EndoMatrix>(mat), std::get<ModulePoint>(pt));
        }
    }
    throw EvalError("unreachable expression kind");
}

std::optional<Value> run_statement(const Statement& stmt, Session& session) {
    Value v = eval(stmt.expr, session);
    if (stmt.let_name) {
        session.bindings[*stmt.let_name] = std::move(v);
        return std::nullopt;
    }
    return v;
}

} // namespace endoring
