#include "b3/expr.hpp"

#include <cctype>

namespace b3 {

bool operator==(const Expr& x, const Expr& y) {
    if (x.kind != y.kind || x.n != y.n || x.den != y.den || x.root != y.root || x.gvec != y.gvec)
        return false;
    auto sub_eq = [](const ExprPtr& p, const ExprPtr& q) {
        if (!p || !q) return !p && !q;
        return *p == *q;
    };
    return sub_eq(x.a, y.a) && sub_eq(x.b, y.b);
}

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != s_.size()) fail("end of input or an operator");
        return e;
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        throw ExprParseError(pos_, "parse error at offset " + std::to_string(pos_) +
                                       ": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) fail(what);
    }

    bool at_ident() { return std::isalpha(static_cast<unsigned char>(peek())); }
    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            pos_ = start;
            fail("an integer");
        }
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::stol(s_.substr(start, pos_ - start));
    }

    ExprPtr sum() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = node({ExprKind::add, e, term()});
            else if (eat('-'))
                e = node({ExprKind::sub, e, term()});
            else
                return e;
        }
    }

    // '*' or juxtaposition: any token that can begin a factor continues
    // the product
    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (eat('*')) {
                e = node({ExprKind::mul, e, factor()});
                continue;
            }
            char c = peek();
            if (c == '(' || c == '[' || at_ident() ||
                std::isdigit(static_cast<unsigned char>(c))) {
                e = node({ExprKind::mul, e, factor()});
                continue;
            }
            return e;
        }
    }

    ExprPtr factor() {
        if (eat('-')) return node({ExprKind::neg, factor()});
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (!eat('^')) return base;
        Expr e{ExprKind::pow, base};
        e.n = integer();
        return node(std::move(e));
    }

    ExprPtr primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            expect(')', "')'");
            return e;
        }
        if (c == '[') return commutator();
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (!at_ident()) fail("a generator, scalar, group element, mu[...], '(' or '['");
        size_t start = pos_;
        std::string id = ident();
        if (id == "q") {
            return node({ExprKind::q});
        }
        if (id == "g") {
            expect('[', "'[' after g");
            Expr e{ExprKind::group};
            e.gvec.push_back(integer());
            while (eat(',')) e.gvec.push_back(integer());
            expect(']', "']'");
            return node(std::move(e));
        }
        if (id == "mu") {
            expect('[', "'[' after mu");
            size_t name_pos = pos_;
            std::string name = ident();
            auto r = root_by_name(name);
            if (!r) {
                pos_ = name_pos;
                fail("a root name (a1..at21)");
            }
            expect(']', "']'");
            Expr e{ExprKind::mu};
            e.root = *r;
            return node(std::move(e));
        }
        if (auto r = root_by_gen_name(id)) {
            Expr e{ExprKind::gen};
            e.root = *r;
            return node(std::move(e));
        }
        pos_ = start;
        fail("one of y1..yt21, q, g[...], mu[...]");
    }

    ExprPtr number() {
        Expr e{ExprKind::num};
        e.n = integer();
        size_t slash = pos_;
        if (eat('/')) {
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e.den = integer();
                if (e.den == 0) {
                    pos_ = slash;
                    fail("a nonzero denominator");
                }
            } else {
                pos_ = slash;  // not a fraction; leave '/' for the caller to reject
            }
        }
        return node(std::move(e));
    }

    ExprPtr commutator() {
        expect('[', "'['");
        ExprPtr a = sum();
        expect(',', "','");
        ExprPtr b = sum();
        expect(']', "']'");
        expect('_', "'_c'");
        if (!eat('c')) fail("'_c'");
        return node({ExprKind::comm, a, b});
    }
};

// Precedence levels for printing: sum < product < prefix-minus < power.
int level(ExprKind k) {
    switch (k) {
        case ExprKind::add:
        case ExprKind::sub: return 0;
        case ExprKind::mul: return 1;
        case ExprKind::neg: return 2;
        case ExprKind::pow: return 3;
        default: return 4;
    }
}

void print_into(const Expr& e, std::string& out, int min_level) {
    bool parens = level(e.kind) < min_level;
    if (parens) out += '(';
    switch (e.kind) {
        case ExprKind::add:
            print_into(*e.a, out, 0);
            out += " + ";
            print_into(*e.b, out, 1);  // right operand of +- reparenthesized
            break;
        case ExprKind::sub:
            print_into(*e.a, out, 0);
            out += " - ";
            print_into(*e.b, out, 1);
            break;
        case ExprKind::mul:
            print_into(*e.a, out, 1);
            out += '*';
            print_into(*e.b, out, 2);
            break;
        case ExprKind::neg:
            out += '-';
            print_into(*e.a, out, 2);
            break;
        case ExprKind::pow:
            print_into(*e.a, out, 4);
            out += '^';
            out += std::to_string(e.n);
            break;
        case ExprKind::comm:
            out += '[';
            print_into(*e.a, out, 0);
            out += ", ";
            print_into(*e.b, out, 0);
            out += "]_c";
            break;
        case ExprKind::gen: out += root_info(e.root).gen_name; break;
        case ExprKind::q: out += 'q'; break;
        case ExprKind::num:
            out += std::to_string(e.n);
            if (e.den != 1) out += '/' + std::to_string(e.den);
            break;
        case ExprKind::mu:
            out += "mu[";
            out += root_info(e.root).name;
            out += ']';
            break;
        case ExprKind::group: {
            out += "g[";
            for (size_t i = 0; i < e.gvec.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(e.gvec[i]);
            }
            out += ']';
            break;
        }
    }
    if (parens) out += ')';
}

/// Invertible elements: a single term c * g with constant coefficient.
bool invert(const RewriteSystem& rs, const AlgElement& e, long k, AlgElement& out) {
    if (e.terms().size() != 1) return false;
    const auto& [m, c] = e.terms().front();
    if (m.exp != PbwExp{} || !c.is_constant()) return false;
    CycScalar v = c.constant_part();
    if (v.is_zero()) return false;
    out = v.pow(k) * rs.group_term(group_pow(rs.datum().group, m.grp, k));
    return true;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const ExprPtr& e) {
    std::string out;
    print_into(*e, out, 0);
    return out;
}

AlgElement eval_expr(const ExprPtr& e, const RewriteSystem& rs) {
    switch (e->kind) {
        case ExprKind::add: return eval_expr(e->a, rs) + eval_expr(e->b, rs);
        case ExprKind::sub: return eval_expr(e->a, rs) - eval_expr(e->b, rs);
        case ExprKind::mul: return rs.multiply(eval_expr(e->a, rs), eval_expr(e->b, rs));
        case ExprKind::neg: return -eval_expr(e->a, rs);
        case ExprKind::comm: return rs.commutator(eval_expr(e->a, rs), eval_expr(e->b, rs));
        case ExprKind::gen: return rs.gen(e->root);
        case ExprKind::q: return rs.scalar(MuScalar(rs.datum().q33()));
        case ExprKind::mu: return rs.scalar(MuScalar::indeterminate(e->root));
        case ExprKind::num: {
            mpq_class r(e->n, e->den);
            r.canonicalize();
            return rs.scalar(MuScalar(CycScalar(r)));
        }
        case ExprKind::group:
            return rs.group_term(group_element(rs.datum().group, e->gvec));
        case ExprKind::pow: {
            AlgElement base = eval_expr(e->a, rs);
            if (e->n >= 0) return rs.power(base, static_cast<unsigned>(e->n));
            AlgElement out;
            if (!invert(rs, base, e->n, out))
                throw InvalidArgument("negative power of a non-invertible element");
            return out;
        }
    }
    throw InvalidArgument("unreachable expression kind");
}

}  // namespace b3
