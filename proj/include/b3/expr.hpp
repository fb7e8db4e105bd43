#pragma once

#include <memory>
#include <vector>

#include "b3/pbwalg.hpp"

namespace b3 {

/// Abstract syntax of the expression language.  Atoms: generator names
/// (y1..yt21), group elements g[v1,...,vr], the braiding scalar q, integer
/// and fraction literals, deformation parameters mu[a1..at21].  Forms:
/// + - * ^ with the usual precedence (^ binds tightest), unary minus, the
/// braided commutator [e1, e2]_c, and parentheses.  Juxtaposition of two
/// factors multiplies.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind {
    add,   // a + b
    sub,   // a - b
    mul,   // a * b
    neg,   // -a
    pow,   // a ^ n  (n may be negative; evaluation restricts that to units)
    comm,  // [a, b]_c
    gen,   // y1 .. yt21
    group, // g[v1,...,vr]
    q,     // the scalar q33
    num,   // integer or reduced fraction n/den
    mu,    // mu[<root name>]
};

struct Expr {
    ExprKind kind;
    ExprPtr a, b;            // operands of the binary forms / neg / pow base
    long n = 0, den = 1;     // num value; pow exponent in n
    Root root = Root::a1;    // gen / mu
    std::vector<long> gvec;  // group exponents

    friend bool operator==(const Expr& x, const Expr& y);
    friend bool operator!=(const Expr& x, const Expr& y) { return !(x == y); }
};

/// Syntax error with the byte offset of the offending token and the set of
/// forms that were admissible there.
struct ExprParseError : InvalidArgument {
    size_t pos;
    ExprParseError(size_t pos_, const std::string& what) : InvalidArgument(what), pos(pos_) {}
};

ExprPtr parse_expr(const std::string& text);

/// Canonical rendering; parse_expr(print_expr(e)) is structurally equal
/// to e, and print o parse is idempotent.
std::string print_expr(const ExprPtr& e);

/// Evaluate in the algebra of a rewrite system.  q is the datum's q33;
/// mu[...] are the formal parameters; negative exponents are admitted only
/// for invertible elements (scalars and group-likes).
AlgElement eval_expr(const ExprPtr& e, const RewriteSystem& rs);

}  // namespace b3
