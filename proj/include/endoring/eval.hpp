#pragma once

#include <map>
#include <variant>

#include "endoring/parser.hpp"

namespace endoring {

using Value = std::variant<Int, EndoMatrix, ModulePoint, IntPoly>;

// One interactive session: fixed ring parameters plus named bindings. Every
// bound matrix or point shares the session's parameters by construction.
struct Session {
    RingParams params;
    std::map<std::string, Value> bindings;
};

// Evaluates an expression against a session. All arithmetic is delegated to
// the ring operations; this layer only dispatches on value kinds.
// Throws EvalError (type mismatches, unbound variables, out-of-range
// integers) and lets ring errors (NotInvertible, NotAUnit, ...) propagate.
Value eval(const ExprAst& ast, const Session& session);

// Runs a statement: a `let` binds quietly (returns nothing), a bare
// expression returns its value.
std::optional<Value> run_statement(const Statement& stmt, Session& session);

} // namespace endoring
