#include "holo/expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "holo/group.hpp"

namespace holo::expr {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c))
            throw SyntaxError(std::string("expected ") + what + " at offset " +
                                  std::to_string(pos),
                              pos);
    }

    Ast make(NodeKind k, std::size_t off) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->offset = off;
        return n;
    }

    Ast parse_expr() {
        Ast lhs = parse_term();
        while (true) {
            std::size_t off = pos;
            if (accept('+')) {
                lhs = binary(BinOp::add, std::move(lhs), parse_term(), off);
            } else if (accept('-')) {
                lhs = binary(BinOp::sub, std::move(lhs), parse_term(), off);
            } else {
                return lhs;
            }
        }
    }

    Ast parse_term() {
        Ast lhs = parse_unary();
        while (true) {
            std::size_t off = pos;
            if (accept('*')) {
                lhs = binary(BinOp::mul, std::move(lhs), parse_unary(), off);
            } else if (accept('/')) {
                lhs = binary(BinOp::div, std::move(lhs), parse_unary(), off);
            } else {
                return lhs;
            }
        }
    }

    Ast parse_unary() {
        std::size_t off = pos;
        if (accept('-')) {
            Ast n = make(NodeKind::unary_minus, off);
            n->args.push_back(parse_unary());
            return n;
        }
        return parse_power();
    }

    Ast parse_power() {
        Ast base = parse_atom();
        std::size_t off = pos;
        if (accept('^'))  // right associative; exponent may carry a unary minus
            return binary(BinOp::pow, std::move(base), parse_unary(), off);
        return base;
    }

    Ast binary(BinOp op, Ast lhs, Ast rhs, std::size_t off) {
        Ast n = make(NodeKind::binary, off);
        n->op = op;
        n->args.push_back(std::move(lhs));
        n->args.push_back(std::move(rhs));
        return n;
    }

    Ast parse_atom() {
        skip_ws();
        std::size_t off = pos;
        if (pos >= text.size())
            throw SyntaxError("unexpected end of input, expected number, name or '('", pos);
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        if (c == '(') {
            ++pos;
            Ast inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "' at offset " +
                              std::to_string(off),
                          off);
    }

    Ast parse_number() {
        std::size_t off = pos;
        std::size_t end = pos;
        while (end < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '.' ||
                text[end] == 'e' || text[end] == 'E' ||
                ((text[end] == '+' || text[end] == '-') && end > pos &&
                 (text[end - 1] == 'e' || text[end - 1] == 'E'))))
            ++end;
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(text.substr(pos, end - pos), &used);
            end = pos + used;
        } catch (const std::exception&) {
            throw SyntaxError("malformed number at offset " + std::to_string(off), off);
        }
        pos = end;
        Ast n = make(NodeKind::number, off);
        n->number = value;
        return n;
    }

    Ast parse_name() {
        std::size_t off = pos;
        std::size_t end = pos;
        while (end < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
            ++end;
        std::string name = text.substr(pos, end - pos);
        pos = end;

        if (name == "pi") return make(NodeKind::const_pi, off);
        if (name == "m0" || name == "m1") return parse_var(name == "m0" ? 0 : 1, off);

        static const std::pair<const char*, Func> funcs[] = {
            {"sin", Func::sin}, {"cos", Func::cos},       {"exp", Func::exp},
            {"log", Func::log}, {"abs", Func::abs},       {"pow", Func::pow},
            {"mod2pi", Func::mod2pi},
        };
        for (const auto& [fname, f] : funcs) {
            if (name == fname) return parse_call(f, off);
        }
        throw SyntaxError("unknown name '" + name + "' at offset " + std::to_string(off), off);
    }

    Ast parse_var(int slot, std::size_t off) {
        expect('[', "'['");
        skip_ws();
        std::size_t ioff = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw SyntaxError("expected component index at offset " + std::to_string(pos), pos);
        int idx = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            idx = idx * 10 + (text[pos] - '0');
            ++pos;
        }
        (void)ioff;
        expect(']', "']'");
        Ast n = make(NodeKind::variable, off);
        n->var_slot = slot;
        n->var_index = idx;
        return n;
    }

    Ast parse_call(Func f, std::size_t off) {
        expect('(', "'('");
        Ast n = make(NodeKind::call, off);
        n->func = f;
        n->args.push_back(parse_expr());
        if (f == Func::pow) {
            expect(',', "','");
            n->args.push_back(parse_expr());
        }
        expect(')', "')'");
        return n;
    }
};

const char* func_name(Func f) {
    switch (f) {
        case Func::sin: return "sin";
        case Func::cos: return "cos";
        case Func::exp: return "exp";
        case Func::log: return "log";
        case Func::abs: return "abs";
        case Func::pow: return "pow";
        case Func::mod2pi: return "mod2pi";
    }
    return "?";
}

const char* op_name(BinOp op) {
    switch (op) {
        case BinOp::add: return "+";
        case BinOp::sub: return "-";
        case BinOp::mul: return "*";
        case BinOp::div: return "/";
        case BinOp::pow: return "^";
    }
    return "?";
}

[[noreturn]] void eval_error(const Node& n, const std::string& what) {
    throw DomainError(what + " at offset " + std::to_string(n.offset));
}

}  // namespace

Ast parse(const std::string& text) {
    Parser p(text);
    Ast ast = p.parse_expr();
    if (!p.eof())
        throw SyntaxError("trailing input at offset " + std::to_string(p.pos), p.pos);
    return ast;
}

std::string print(const Node& n) {
    std::ostringstream out;
    switch (n.kind) {
        case NodeKind::number: {
            out.precision(17);
            out << n.number;
            break;
        }
        case NodeKind::const_pi: out << "pi"; break;
        case NodeKind::variable:
            out << (n.var_slot == 0 ? "m0" : "m1") << "[" << n.var_index << "]";
            break;
        case NodeKind::unary_minus: out << "(-" << print(*n.args[0]) << ")"; break;
        case NodeKind::binary:
            out << "(" << print(*n.args[0]) << op_name(n.op) << print(*n.args[1]) << ")";
            break;
        case NodeKind::call:
            out << func_name(n.func) << "(" << print(*n.args[0]);
            if (n.args.size() > 1) out << "," << print(*n.args[1]);
            out << ")";
            break;
    }
    return out.str();
}

double evaluate(const Node& n, const std::vector<double>& m0, const std::vector<double>& m1) {
    switch (n.kind) {
        case NodeKind::number: return n.number;
        case NodeKind::const_pi: return kPi;
        case NodeKind::variable: {
            const std::vector<double>& m = n.var_slot == 0 ? m0 : m1;
            if (n.var_index >= static_cast<int>(m.size()))
                eval_error(n, "variable index out of range");
            return m[n.var_index];
        }
        case NodeKind::unary_minus: return -evaluate(*n.args[0], m0, m1);
        case NodeKind::binary: {
            double a = evaluate(*n.args[0], m0, m1);
            double b = evaluate(*n.args[1], m0, m1);
            switch (n.op) {
                case BinOp::add: return a + b;
                case BinOp::sub: return a - b;
                case BinOp::mul: return a * b;
                case BinOp::div:
                    if (b == 0.0) eval_error(n, "division by zero");
                    return a / b;
                case BinOp::pow: {
                    double r = std::pow(a, b);
                    if (!std::isfinite(r)) eval_error(n, "pow out of range");
                    return r;
                }
            }
            eval_error(n, "bad operator");
        }
        case NodeKind::call: {
            double a = evaluate(*n.args[0], m0, m1);
            switch (n.func) {
                case Func::sin: return std::sin(a);
                case Func::cos: return std::cos(a);
                case Func::exp: return std::exp(a);
                case Func::log:
                    if (a <= 0.0) eval_error(n, "log of nonpositive value");
                    return std::log(a);
                case Func::abs: return std::abs(a);
                case Func::mod2pi: return mod2pi(a);
                case Func::pow: {
                    double b = evaluate(*n.args[1], m0, m1);
                    double r = std::pow(a, b);
                    if (!std::isfinite(r)) eval_error(n, "pow out of range");
                    return r;
                }
            }
            eval_error(n, "bad function");
        }
    }
    eval_error(n, "bad node");
}

int max_var_index(const Node& n) {
    int idx = n.kind == NodeKind::variable ? n.var_index : -1;
    for (const auto& a : n.args) idx = std::max(idx, max_var_index(*a));
    return idx;
}

bool equal(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
    switch (a.kind) {
        case NodeKind::number:
            if (a.number != b.number) return false;
            break;
        case NodeKind::variable:
            if (a.var_slot != b.var_slot || a.var_index != b.var_index) return false;
            break;
        case NodeKind::binary:
            if (a.op != b.op) return false;
            break;
        case NodeKind::call:
            if (a.func != b.func) return false;
            break;
        default: break;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!equal(*a.args[i], *b.args[i])) return false;
    return true;
}

}  // namespace holo::expr
